#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmrt {

/// Binary quadratic form a x^2 + b xy + c y^2.
struct QuadraticForm {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t discriminant() const { return b * b - 4 * a * c; }
  friend auto operator<=>(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Reduced primitive positive definite forms of discriminant d:
/// |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
std::vector<QuadraticForm> reduced_forms(std::int64_t d);

/// Form class number h(d) of discriminant d < 0, d ≡ 0, 1 (mod 4), counted
/// over primitive forms. For non-fundamental d this is the class number of
/// the order of discriminant d.
std::uint64_t class_number_imag_quadratic(std::int64_t d);

bool is_fundamental_discriminant(std::int64_t d);

struct ClassNumberEntry {
  std::int64_t d = 0;
  std::uint64_t h = 0;
};

struct ClassNumberSearch {
  std::uint64_t h_max = 0;
  std::uint64_t search_limit = 0;
  bool fundamental_only = false;
  /// Sorted by |d| ascending.
  std::vector<ClassNumberEntry> entries;
  /// Always "search-bounded: ...": the scan says nothing beyond search_limit.
  std::string completeness;
};

/// All discriminants -search_limit <= d < 0 with h(d) <= h_max.
ClassNumberSearch discs_with_class_number_at_most(std::uint64_t h_max,
                                                  std::uint64_t search_limit,
                                                  bool fundamental_only);

}  // namespace cmrt
