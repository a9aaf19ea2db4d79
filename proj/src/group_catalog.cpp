#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>

#include "cmrt/error.hpp"
#include "cmrt/group.hpp"

namespace cmrt {

namespace {

std::string power_name(const std::string& symbol, int k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return symbol + "^" + std::to_string(k);
}

std::string word_or_one(std::string word) { return word.empty() ? "1" : word; }

/// Closure of `generators` under `mul`; identity first, then ascending.
template <typename T>
FiniteGroup closure_group(const T& identity, const std::vector<T>& generators,
                          const std::function<T(const T&, const T&)>& mul,
                          const std::function<std::string(const T&)>& name) {
  std::vector<T> elements{identity};
  std::map<T, int> seen{{identity, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const T& g : generators) {
      T x = mul(elements[i], g);
      if (seen.count(x)) continue;
      if (elements.size() >= static_cast<std::size_t>(FiniteGroup::kMaxOrder)) {
        throw InputError("generated group exceeds order " +
                         std::to_string(FiniteGroup::kMaxOrder));
      }
      seen.emplace(x, 0);
      elements.push_back(std::move(x));
    }
  }
  std::sort(elements.begin() + 1, elements.end());
  for (std::size_t i = 0; i < elements.size(); ++i) seen[elements[i]] = static_cast<int>(i);
  const std::size_t n = elements.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(name(elements[i]));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = seen.at(mul(elements[i], elements[j]));
  }
  return FiniteGroup::from_table(table, std::move(names));
}

using Perm = std::vector<int>;

std::string cycle_notation(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = static_cast<std::size_t>(p[j])) {
      done[j] = true;
      if (out.back() != '(') out += " ";
      out += std::to_string(j);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

int parse_positive(std::string_view text, std::string_view descriptor) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || value < 1) {
    throw InputError("malformed group descriptor '" + std::string(descriptor) + "'");
  }
  return value;
}

FiniteGroup build_factor(std::string_view f, std::string_view descriptor) {
  static const std::map<std::string, std::function<FiniteGroup()>, std::less<>> named = {
      {"SD16", [] { return metacyclic_group(8, 2, 3, 0); }},
      {"M16", [] { return metacyclic_group(8, 2, 5, 0); }},
      {"C4:C4", [] { return metacyclic_group(4, 4, 3, 0); }},
      {"C3:C4", [] { return metacyclic_group(3, 4, 2, 0); }},
      {"C2^2:C4",
       [] {
         // (x, y, k): Z/4 acts on (Z/2)^2 by swapping the two coordinates.
         using T = std::array<int, 3>;
         return closure_group<T>(
             {0, 0, 0}, {{1, 0, 0}, {0, 0, 1}},
             [](const T& a, const T& b) {
               const bool swap = a[2] % 2 == 1;
               return T{(a[0] + (swap ? b[1] : b[0])) % 2, (a[1] + (swap ? b[0] : b[1])) % 2,
                        (a[2] + b[2]) % 4};
             },
             [](const T& a) {
               return word_or_one(power_name("x", a[0]) + power_name("y", a[1]) +
                                  power_name("c", a[2]));
             });
       }},
      {"C4oD4",
       [] {
         // Monomial 2x2 matrices with entries in {±1, ±i}, acting on the 8
         // points (basis k, phase i^t) at index 4k + t.
         auto make = [](auto f) {
           Perm p(8);
           for (int k = 0; k < 2; ++k)
             for (int t = 0; t < 4; ++t) {
               auto [k2, t2] = f(k, t);
               p[4 * k + t] = 4 * k2 + t2;
             }
           return p;
         };
         const Perm x = make([](int k, int t) { return std::pair{1 - k, t}; });
         const Perm z = make([](int k, int t) { return std::pair{k, k == 1 ? (t + 2) % 4 : t}; });
         const Perm i = make([](int k, int t) { return std::pair{k, (t + 1) % 4}; });
         return permutation_group({x, z, i});
       }},
      {"A4", [] { return alternating_group(4); }},
      {"Q8", [] { return metacyclic_group(4, 2, 3, 2); }},
      {"Q16", [] { return metacyclic_group(8, 2, 7, 4); }},
  };
  if (auto it = named.find(f); it != named.end()) return it->second();

  auto starts = [&](std::string_view p) { return f.substr(0, p.size()) == p; };
  if (starts("Dic")) {
    const int n = parse_positive(f.substr(3), descriptor);
    return metacyclic_group(2 * n, 2, 2 * n - 1, n);
  }
  if (f.empty()) throw InputError("malformed group descriptor '" + std::string(descriptor) + "'");
  const int k = parse_positive(f.substr(1), descriptor);
  switch (f.front()) {
    case 'C':
      return cyclic_group(k);
    case 'D':
      return dihedral_group(k);
    case 'Q':
      if (k < 8 || k % 4 != 0) {
        throw InputError("quaternion descriptor needs an order divisible by 4 and >= 8: '" +
                         std::string(descriptor) + "'");
      }
      return metacyclic_group(k / 2, 2, k / 2 - 1, k / 4);
    case 'S':
      return symmetric_group(k);
    case 'A':
      return alternating_group(k);
    default:
      throw InputError("malformed group descriptor '" + std::string(descriptor) + "'");
  }
}

}  // namespace

FiniteGroup cyclic_group(int m) {
  if (m < 1 || m > FiniteGroup::kMaxOrder) {
    throw InputError("cyclic group order out of range: " + std::to_string(m));
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    names.push_back(word_or_one(power_name("σ", i)));
    for (int j = 0; j < m; ++j) table[i][j] = (i + j) % m;
  }
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup metacyclic_group(int m, int n, int r, int s) {
  if (m < 1 || n < 1 || m * n > FiniteGroup::kMaxOrder) {
    throw InputError("metacyclic group order out of range");
  }
  r = ((r % m) + m) % m;
  s = ((s % m) + m) % m;
  long rn = 1;
  for (int i = 0; i < n; ++i) rn = rn * r % m;
  if (rn != 1 % m || (static_cast<long>(r) * s - s) % m != 0) {
    throw InputError("inconsistent metacyclic parameters");
  }
  // r_pow[j] = r^j mod m
  std::vector<int> r_pow(n, 1 % m);
  for (int j = 1; j < n; ++j) r_pow[j] = static_cast<int>(static_cast<long>(r_pow[j - 1]) * r % m);
  const int order = m * n;
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  std::vector<std::string> names(order);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      names[i + m * j] = word_or_one(power_name("a", i) + power_name("b", j));
      for (int l = 0; l < n; ++l) {
        for (int k = 0; k < m; ++k) {
          // a^i b^j a^k b^l = a^(i + k r^j) b^(j + l), with b^n = a^s
          long a_exp = i + static_cast<long>(k) * r_pow[j];
          int b_exp = j + l;
          if (b_exp >= n) {
            b_exp -= n;
            a_exp += s;
          }
          table[i + m * j][k + m * l] = static_cast<int>(a_exp % m) + m * b_exp;
        }
      }
    }
  }
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup dihedral_group(int m) {
  if (m < 1 || 2 * m > FiniteGroup::kMaxOrder) {
    throw InputError("dihedral group order out of range: 2*" + std::to_string(m));
  }
  const FiniteGroup g = metacyclic_group(m, 2, m - 1, 0);
  std::vector<std::vector<int>> table;
  for (int i = 0; i < g.order(); ++i) table.emplace_back(g.row(i).begin(), g.row(i).end());
  std::vector<std::string> names(g.order());
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < m; ++i) names[i + m * j] = word_or_one(power_name("r", i) + power_name("s", j));
  return FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup permutation_group(const std::vector<std::vector<int>>& generators) {
  const std::size_t degree = generators.empty() ? 1 : generators.front().size();
  for (const auto& p : generators) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> iota(degree);
    std::iota(iota.begin(), iota.end(), 0);
    if (p.size() != degree || sorted != iota) throw InputError("generator is not a permutation");
  }
  Perm identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  return closure_group<Perm>(
      identity, generators,
      [](const Perm& p, const Perm& q) {
        Perm out(p.size());
        for (std::size_t x = 0; x < p.size(); ++x) out[x] = p[static_cast<std::size_t>(q[x])];
        return out;
      },
      cycle_notation);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 4) throw InputError("symmetric group S" + std::to_string(n) + " not supported");
  if (n == 1) return permutation_group({});
  Perm transposition(n), cycle(n);
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permutation_group({transposition, cycle});
}

FiniteGroup alternating_group(int n) {
  if (n < 1 || n > 4) throw InputError("alternating group A" + std::to_string(n) + " not supported");
  if (n <= 2) return permutation_group({});
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    // 3-cycle (0 1 i)
    p[0] = 1;
    p[1] = i;
    p[i] = 0;
    gens.push_back(p);
  }
  return permutation_group(gens);
}

FiniteGroup direct_product(const std::vector<FiniteGroup>& factors) {
  if (factors.empty()) return cyclic_group(1);
  long order = 1;
  for (const auto& f : factors) order *= f.order();
  if (order > FiniteGroup::kMaxOrder) {
    throw InputError("direct product order " + std::to_string(order) + " exceeds the cap of " +
                     std::to_string(FiniteGroup::kMaxOrder));
  }
  const int n = static_cast<int>(order);
  const std::size_t k = factors.size();
  // digits[x][f] = component of element x in factor f (mixed radix, last fastest)
  std::vector<std::vector<int>> digits(n, std::vector<int>(k));
  for (int x = 0; x < n; ++x) {
    int rest = x;
    for (std::size_t f = k; f-- > 0;) {
      digits[x][f] = rest % factors[f].order();
      rest /= factors[f].order();
    }
  }
  auto index_of = [&](const std::vector<int>& d) {
    int x = 0;
    for (std::size_t f = 0; f < k; ++f) x = x * factors[f].order() + d[f];
    return x;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names(n);
  std::vector<int> d(k);
  for (int x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t f = 0; f < k; ++f) label += (f ? "," : "") + factors[f].name(digits[x][f]);
    names[x] = label + ")";
    for (int y = 0; y < n; ++y) {
      for (std::size_t f = 0; f < k; ++f) d[f] = factors[f].mul(digits[x][f], digits[y][f]);
      table[x][y] = index_of(d);
    }
  }
  return k == 1 ? factors.front() : FiniteGroup::from_table(table, std::move(names));
}

FiniteGroup build_group(std::string_view descriptor) {
  std::vector<FiniteGroup> factors;
  long order = 1;
  std::size_t start = 0;
  while (true) {
    const std::size_t cut = descriptor.find('x', start);
    const auto piece = descriptor.substr(start, cut == std::string_view::npos ? cut : cut - start);
    factors.push_back(build_factor(piece, descriptor));
    order *= factors.back().order();
    if (order > FiniteGroup::kMaxOrder) {
      throw InputError("group '" + std::string(descriptor) + "' exceeds order " +
                       std::to_string(FiniteGroup::kMaxOrder));
    }
    if (cut == std::string_view::npos) break;
    start = cut + 1;
  }
  return direct_product(factors);
}

FiniteGroup load_group(std::string_view spec) {
  if (!spec.empty() && spec.front() == '@') {
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw InputError("cannot open group table file '" + path + "'");
    return read_group_table(in);
  }
  return build_group(spec);
}

std::vector<std::string> small_group_descriptors(int max_order) {
  static const std::vector<std::pair<int, std::vector<std::string>>> catalog = {
      {1, {"C1"}},
      {2, {"C2"}},
      {3, {"C3"}},
      {4, {"C4", "C2xC2"}},
      {5, {"C5"}},
      {6, {"C6", "D3"}},
      {7, {"C7"}},
      {8, {"C8", "C2xC4", "C2xC2xC2", "D4", "Q8"}},
      {9, {"C9", "C3xC3"}},
      {10, {"C10", "D5"}},
      {11, {"C11"}},
      {12, {"C12", "C2xC6", "D6", "A4", "C3:C4"}},
      {13, {"C13"}},
      {14, {"C14", "D7"}},
      {15, {"C15"}},
      {16,
       {"C16", "C4xC4", "C2xC8", "C2xC2xC4", "C2xC2xC2xC2", "D8", "Q16", "SD16", "M16", "C4:C4",
        "C2^2:C4", "C2xD4", "C2xQ8", "C4oD4"}},
  };
  if (max_order > 16) throw InputError("small group catalog only covers orders <= 16");
  std::vector<std::string> out;
  for (const auto& [order, list] : catalog) {
    if (order > max_order) break;
    out.insert(out.end(), list.begin(), list.end());
  }
  return out;
}

}  // namespace cmrt
