#include "cmrt/group.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "cmrt/error.hpp"

namespace cmrt {

namespace {

ElementMask bit(int g) { return ElementMask{1} << g; }

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> names) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw InputError("group table is empty");
  if (n > kMaxOrder) {
    throw InputError("group order " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(kMaxOrder));
  }
  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw InputError("group table row " + std::to_string(i) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n));
    }
    for (int v : table[i]) {
      if (v < 0 || v >= n) {
        throw InputError("group table entry " + std::to_string(v) + " out of range in row " +
                         std::to_string(i));
      }
      data->table.push_back(v);
    }
  }
  auto at = [&](int i, int j) { return data->table[i * n + j]; };

  for (int i = 0; i < n; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      throw InputError("element 0 is not the identity (row/column " + std::to_string(i) + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    ElementMask row_seen = 0;
    ElementMask col_seen = 0;
    for (int j = 0; j < n; ++j) {
      row_seen |= bit(at(i, j));
      col_seen |= bit(at(j, i));
    }
    const ElementMask full = n == 64 ? ~ElementMask{0} : bit(n) - 1;
    if (row_seen != full || col_seen != full) {
      throw InputError("group table is not a Latin square (row/column " + std::to_string(i) +
                       " repeats an element)");
    }
  }
  data->inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (at(i, j) == 0 && at(j, i) == 0) {
        data->inverse[i] = j;
        break;
      }
    }
    if (data->inverse[i] < 0) {
      throw InputError("element " + std::to_string(i) + " has no two-sided inverse");
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = at(a, b);
      for (int c = 0; c < n; ++c) {
        if (at(ab, c) != at(a, at(b, c))) {
          throw InputError("group table is not associative at (" + std::to_string(a) + ", " +
                           std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }

  if (names.empty()) {
    for (int i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  } else if (static_cast<int>(names.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names.size()));
  }
  data->names = std::move(names);
  return FiniteGroup(std::move(data));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a) {
    for (int b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return data_ == other.data_ ||
         (data_->order == other.data_->order && data_->table == other.data_->table);
}

// Subgroups ------------------------------------------------------------------

Subgroup Subgroup::make(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  ElementMask mask = 0;
  for (int g : elements) {
    if (!parent.valid_element(g)) {
      throw InputError("subgroup element " + std::to_string(g) + " is not in the group");
    }
    mask |= bit(g);
  }
  if (!(mask & 1u)) throw InputError("subgroup does not contain the identity");
  for (int a : elements) {
    if (!((mask >> parent.inverse(a)) & 1u)) {
      throw InputError("subgroup is not closed under inversion (element " + std::to_string(a) +
                       ")");
    }
    for (int b : elements) {
      if (!((mask >> parent.mul(a, b)) & 1u)) {
        throw InputError("subgroup is not closed under multiplication (" + std::to_string(a) +
                         " * " + std::to_string(b) + ")");
      }
    }
  }
  return Subgroup(parent, std::move(elements), mask);
}

Subgroup Subgroup::generated_by(const FiniteGroup& parent, std::span<const int> generators) {
  ElementMask mask = 1;
  std::vector<int> elements{0};
  for (int g : generators) {
    if (!parent.valid_element(g)) {
      throw InputError("generator " + std::to_string(g) + " is not in the group");
    }
  }
  // Closure by right multiplication with generators; finite groups need no inverses.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (int g : generators) {
      const int x = parent.mul(elements[i], g);
      if (!((mask >> x) & 1u)) {
        mask |= bit(x);
        elements.push_back(x);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return Subgroup(parent, std::move(elements), mask);
}

Subgroup Subgroup::trivial(const FiniteGroup& parent) { return Subgroup(parent, {0}, 1); }

Subgroup Subgroup::whole(const FiniteGroup& parent) {
  std::vector<int> all(parent.order());
  for (int i = 0; i < parent.order(); ++i) all[i] = i;
  const ElementMask mask = parent.order() == 64 ? ~ElementMask{0} : bit(parent.order()) - 1;
  return Subgroup(parent, std::move(all), mask);
}

bool Subgroup::is_normal() const {
  for (int g = 0; g < parent_.order(); ++g) {
    for (int h : elements_) {
      if (!contains(parent_.mul(parent_.mul(g, h), parent_.inverse(g)))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  // Every subgroup is reached from the trivial one by adjoining one element
  // at a time, so closing the family under "adjoin g" finds all of them.
  std::vector<Subgroup> found{Subgroup::trivial(group)};
  std::set<ElementMask> seen{found.front().mask()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (int g = 1; g < group.order(); ++g) {
      if (found[i].contains(g)) continue;
      std::vector<int> gens = found[i].elements();
      gens.push_back(g);
      Subgroup next = Subgroup::generated_by(group, gens);
      if (seen.insert(next.mask()).second) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.mask() < b.mask();
  });
  return found;
}

// Cosets ---------------------------------------------------------------------

std::vector<int> CosetStructure::members(int k) const {
  std::vector<int> out;
  for (int g = 0; g < static_cast<int>(coset_of.size()); ++g) {
    if (coset_of[g] == k) out.push_back(g);
  }
  return out;
}

CosetStructure coset_structure(const FiniteGroup& group, const Subgroup& subgroup) {
  if (!group.same_table(subgroup.parent())) {
    throw InputError("subgroup does not belong to this group");
  }
  CosetStructure cs;
  const int n = group.order();
  cs.coset_of.assign(n, -1);
  // Scanning g upward makes g the minimal element of its coset when first seen.
  for (int g = 0; g < n; ++g) {
    if (cs.coset_of[g] >= 0) continue;
    const int k = cs.count();
    cs.representatives.push_back(g);
    for (int h : subgroup.elements()) cs.coset_of[group.mul(g, h)] = k;
  }
  cs.action.assign(n, std::vector<int>(cs.count()));
  for (int g = 0; g < n; ++g) {
    for (int k = 0; k < cs.count(); ++k) {
      cs.action[g][k] = cs.coset_of[group.mul(g, cs.representatives[k])];
    }
  }
  return cs;
}

bool is_central_involution(const FiniteGroup& group, int c) {
  if (!group.valid_element(c) || c == 0) return false;
  if (group.mul(c, c) != 0) return false;
  for (int g = 0; g < group.order(); ++g) {
    if (group.mul(c, g) != group.mul(g, c)) return false;
  }
  return true;
}

std::vector<int> central_involutions(const FiniteGroup& group) {
  std::vector<int> out;
  for (int c = 1; c < group.order(); ++c) {
    if (is_central_involution(group, c)) out.push_back(c);
  }
  return out;
}

// Table files ----------------------------------------------------------------

FiniteGroup read_group_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  int order = -1;
  std::vector<std::vector<int>> rows;
  std::vector<std::pair<int, std::string>> named;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (order < 0) {
      if (!(ls >> order) || order < 1) throw InputError("bad group order" + where);
      std::string rest;
      if (ls >> rest) throw InputError("unexpected text after group order" + where);
      continue;
    }
    if (static_cast<int>(rows.size()) < order) {
      std::vector<int> row;
      int v;
      while (ls >> v) row.push_back(v);
      if (!ls.eof()) throw InputError("non-integer entry in group table" + where);
      rows.push_back(std::move(row));
      continue;
    }
    std::string keyword;
    int index = -1;
    ls >> keyword;
    if (keyword != "name" || !(ls >> index)) {
      throw InputError("expected 'name <i> <string>'" + where);
    }
    std::string label;
    std::getline(ls >> std::ws, label);
    if (label.empty()) throw InputError("missing element name" + where);
    named.emplace_back(index, label);
  }
  if (order < 0) throw InputError("group table file is empty");
  if (static_cast<int>(rows.size()) != order) {
    throw InputError("group table has " + std::to_string(rows.size()) + " rows, expected " +
                     std::to_string(order));
  }
  std::vector<std::string> names;
  if (!named.empty()) {
    names.resize(order);
    for (int i = 0; i < order; ++i) names[i] = "g" + std::to_string(i);
    for (auto& [i, label] : named) {
      if (i < 0 || i >= order) throw InputError("name index out of range: " + std::to_string(i));
      names[i] = label;
    }
  }
  return FiniteGroup::from_table(rows, std::move(names));
}

void write_group_table(std::ostream& out, const FiniteGroup& group) {
  out << group.order() << '\n';
  for (int i = 0; i < group.order(); ++i) {
    const auto row = group.row(i);
    for (int j = 0; j < group.order(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  for (int i = 0; i < group.order(); ++i) out << "name " << i << ' ' << group.name(i) << '\n';
}

}  // namespace cmrt
