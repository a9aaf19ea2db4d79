#include "cmrt/cm_type.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

#include "cmrt/error.hpp"

namespace cmrt {

namespace {

ElementMask lift(const CosetStructure& cs, const std::vector<int>& cosets) {
  ElementMask mask = 0;
  for (int g = 0; g < static_cast<int>(cs.coset_of.size()); ++g) {
    if (std::binary_search(cosets.begin(), cosets.end(), cs.coset_of[g])) {
      mask |= ElementMask{1} << g;
    }
  }
  return mask;
}

std::vector<int> mask_elements(ElementMask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Left translate τ·S of a set of elements.
ElementMask translate_left(const FiniteGroup& g, int tau, ElementMask set) {
  ElementMask out = 0;
  for (int x : mask_elements(set)) out |= ElementMask{1} << g.mul(tau, x);
  return out;
}

}  // namespace

CMFieldSymbol CMFieldSymbol::make(const Subgroup& field_subgroup, int conj,
                                  std::optional<Integer> disc) {
  const FiniteGroup& g = field_subgroup.parent();
  if (!is_central_involution(g, conj)) {
    throw InputError("element " + std::to_string(conj) + " is not a central involution");
  }
  if (field_subgroup.contains(conj)) {
    throw InputError("complex conjugation lies in the field subgroup (degenerate CM field)");
  }
  if (field_subgroup.index() % 2 != 0) {
    throw InputError("field subgroup has odd index " + std::to_string(field_subgroup.index()));
  }
  if (disc && *disc == 0) throw InputError("field discriminant must be nonzero");
  CosetStructure cs = coset_structure(g, field_subgroup);
  return CMFieldSymbol(field_subgroup, conj, std::move(disc), std::move(cs));
}

CMType CMType::make(const CMFieldSymbol& field, std::vector<int> phi) {
  std::sort(phi.begin(), phi.end());
  if (std::adjacent_find(phi.begin(), phi.end()) != phi.end()) {
    throw InputError("CM type repeats a coset");
  }
  const int g = field.dimension();
  if (static_cast<int>(phi.size()) != g) {
    throw InputError("CM type has " + std::to_string(phi.size()) + " cosets, expected g = " +
                     std::to_string(g));
  }
  for (int k : phi) {
    if (k < 0 || k >= field.degree()) {
      throw InputError("coset index " + std::to_string(k) + " out of range");
    }
    if (std::binary_search(phi.begin(), phi.end(), field.conjugate_coset(k))) {
      throw InputError("CM type contains the conjugate pair of coset " + std::to_string(k));
    }
  }
  const ElementMask lifted = lift(field.cosets(), phi);
  return CMType(field, std::move(phi), lifted);
}

std::vector<int> CMType::lifted() const { return mask_elements(lifted_); }

std::vector<int> CMType::indicator() const {
  std::vector<int> mu(field_.degree(), 0);
  for (int k : phi_) mu[k] = 1;
  return mu;
}

std::vector<CMType> enumerate_cm_types(const CMFieldSymbol& field) {
  // Conjugate pairs {k, ck}, each listed once by its smaller index.
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < field.degree(); ++k) {
    const int ck = field.conjugate_coset(k);
    if (k < ck) pairs.emplace_back(k, ck);
  }
  const int g = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> choices;
  for (unsigned long bits = 0; bits < (1ul << g); ++bits) {
    std::vector<int> phi;
    for (int i = 0; i < g; ++i) phi.push_back((bits >> i) & 1u ? pairs[i].second : pairs[i].first);
    std::sort(phi.begin(), phi.end());
    choices.push_back(std::move(phi));
  }
  std::sort(choices.begin(), choices.end());
  std::vector<CMType> out;
  out.reserve(choices.size());
  for (auto& phi : choices) out.push_back(CMType::make(field, std::move(phi)));
  return out;
}

ReflexDatum reflex(const CMType& type) {
  const FiniteGroup& g = type.field().group();
  const ElementMask phi_l = type.lifted_mask();
  std::vector<int> stabilizer;
  for (int tau = 0; tau < g.order(); ++tau) {
    if (translate_left(g, tau, phi_l) == phi_l) stabilizer.push_back(tau);
  }
  ReflexDatum datum{Subgroup::make(g, stabilizer), {}, 0, {}};
  datum.hstar_cosets = coset_structure(g, datum.hstar);
  datum.reflex_degree = datum.hstar_cosets.count();
  for (int sigma : type.lifted()) datum.phistar.push_back(datum.hstar_cosets.coset_of[g.inverse(sigma)]);
  std::sort(datum.phistar.begin(), datum.phistar.end());
  datum.phistar.erase(std::unique(datum.phistar.begin(), datum.phistar.end()), datum.phistar.end());
  return datum;
}

CMType reflex_type(const CMType& type) {
  ReflexDatum datum = reflex(type);
  const CMFieldSymbol reflex_field = CMFieldSymbol::make(datum.hstar, type.field().conj());
  return CMType::make(reflex_field, datum.phistar);
}

IntegerMatrix reflex_norm_matrix(const CMType& type, const ReflexDatum& datum) {
  const CMFieldSymbol& field = type.field();
  const CosetStructure& cs = field.cosets();
  IntegerMatrix m(field.degree(), datum.reflex_degree);
  for (int col = 0; col < datum.reflex_degree; ++col) {
    const int tau = datum.hstar_cosets.representatives[col];
    for (int k : type.phi()) m(cs.action[tau][k], col) = 1;
  }
  return m;
}

int mt_rank(const CMType& type) {
  const CMFieldSymbol& field = type.field();
  const FiniteGroup& g = field.group();
  IntegerMatrix orbit(g.order(), field.degree());
  for (int tau = 0; tau < g.order(); ++tau) {
    for (int k : type.phi()) orbit(tau, field.cosets().action[tau][k]) = 1;
  }
  return matrix_rank(orbit);
}

Integer component_group_order(const CMType& type) {
  const ReflexDatum datum = reflex(type);
  return smith_normal_form(reflex_norm_matrix(type, datum).transpose()).torsion_order;
}

MTInfo mumford_tate_info(const CMType& type) {
  return {mt_rank(type), component_group_order(type)};
}

bool is_primitive(const CMType& type, const std::vector<Subgroup>& subgroups) {
  const CMFieldSymbol& field = type.field();
  const FiniteGroup& g = field.group();
  const Subgroup& h = field.field_subgroup();
  const ElementMask phi_l = type.lifted_mask();
  for (const Subgroup& candidate : subgroups) {
    if (candidate.order() <= h.order() || (candidate.mask() & h.mask()) != h.mask()) continue;
    if (candidate.contains(field.conj())) continue;
    bool stable = true;
    for (int x : type.lifted()) {
      for (int y : candidate.elements()) {
        if (!((phi_l >> g.mul(x, y)) & 1u)) {
          stable = false;
          break;
        }
      }
      if (!stable) break;
    }
    if (stable) return false;
  }
  return true;
}

bool is_primitive(const CMType& type) {
  return is_primitive(type, all_subgroups(type.field().group()));
}

std::vector<CMFieldSymbol> enumerate_cm_fields(const FiniteGroup& group) {
  std::vector<CMFieldSymbol> out;
  const auto involutions = central_involutions(group);
  for (const Subgroup& h : all_subgroups(group)) {
    if (h.index() % 2 != 0) continue;
    for (int c : involutions) {
      if (!h.contains(c)) out.push_back(CMFieldSymbol::make(h, c));
    }
  }
  return out;
}

std::vector<int> parse_index_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = text.find(',', start);
    std::string_view piece = text.substr(start, cut == std::string_view::npos ? cut : cut - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    int value = -1;
    const auto* end = piece.data() + piece.size();
    auto [ptr, ec] = std::from_chars(piece.data(), end, value);
    if (piece.empty() || ec != std::errc() || ptr != end || value < 0) {
      throw InputError("bad index list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return out;
}

CMType parse_cm_type(std::string_view descriptor) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = descriptor.find(';', start);
    parts.push_back(descriptor.substr(start, cut == std::string_view::npos ? cut : cut - start));
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  if (parts.size() != 4) {
    throw InputError("CM-type descriptor must be '<group>;H=...;c=...;phi=...'");
  }
  auto field_value = [&](std::string_view part, std::string_view key) {
    if (part.substr(0, key.size()) != key) {
      throw InputError("expected '" + std::string(key) + "' in CM-type descriptor");
    }
    return part.substr(key.size());
  };
  const FiniteGroup g = load_group(parts[0]);
  const Subgroup h = Subgroup::make(g, parse_index_list(field_value(parts[1], "H=")));
  const auto conj = parse_index_list(field_value(parts[2], "c="));
  if (conj.size() != 1) throw InputError("c= expects exactly one element index");
  const CMFieldSymbol field = CMFieldSymbol::make(h, conj.front());
  return CMType::make(field, parse_index_list(field_value(parts[3], "phi=")));
}

}  // namespace cmrt
