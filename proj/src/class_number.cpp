#include "cmrt/class_number.hpp"

#include <numeric>

#include "cmrt/error.hpp"

namespace cmrt {

namespace {

void require_discriminant(std::int64_t d) {
  if (d >= 0) throw InputError("discriminant must be negative, got " + std::to_string(d));
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (r != 0 && r != 1) {
    throw InputError("discriminant must be 0 or 1 mod 4, got " + std::to_string(d));
  }
}

bool squarefree(std::int64_t m) {
  if (m < 0) m = -m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<QuadraticForm> reduced_forms(std::int64_t d) {
  require_discriminant(d);
  std::vector<QuadraticForm> out;
  const std::int64_t n = -d;
  // a <= c and b^2 <= a^2 give 3a^2 <= |d|.
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

std::uint64_t class_number_imag_quadratic(std::int64_t d) { return reduced_forms(d).size(); }

bool is_fundamental_discriminant(std::int64_t d) {
  const std::int64_t r = ((d % 4) + 4) % 4;
  if (d == 0 || d == 1) return false;
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && squarefree(m);
}

ClassNumberSearch discs_with_class_number_at_most(std::uint64_t h_max,
                                                  std::uint64_t search_limit,
                                                  bool fundamental_only) {
  if (h_max < 1) throw InputError("h_max must be >= 1");
  if (search_limit < 1) throw InputError("search_limit must be >= 1");
  ClassNumberSearch out;
  out.h_max = h_max;
  out.search_limit = search_limit;
  out.fundamental_only = fundamental_only;
  out.completeness =
      "search-bounded: completeness requires an external effective bound on |d|; only "
      "discriminants with |d| <= " +
      std::to_string(search_limit) + " were examined";
  for (std::int64_t n = 3; n <= static_cast<std::int64_t>(search_limit); ++n) {
    const std::int64_t d = -n;
    if (n % 4 != 0 && n % 4 != 3) continue;
    if (fundamental_only && !is_fundamental_discriminant(d)) continue;
    const std::uint64_t h = class_number_imag_quadratic(d);
    if (h <= h_max) out.entries.push_back({d, h});
  }
  return out;
}

}  // namespace cmrt
