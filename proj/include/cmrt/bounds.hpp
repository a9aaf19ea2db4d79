#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cmrt/bigint.hpp"

namespace cmrt {

/// Largest m with φ(m) <= 2g, scanning m <= (4g)^2.
std::uint64_t max_mu(std::uint64_t g);

/// (1 - 1/ℓ)^r ℓ^r / (μ · [K:E*] · |F|^{2r}), exactly.
Rational division_field_lower_bound(std::uint64_t ell, int r, std::uint64_t mu,
                                    std::uint64_t deg_k_over_estar, const Integer& f_order);

/// n · (g + 2)^{3(g + 1)}.
Integer prop_key_bound(std::uint64_t n, std::uint64_t g);

/// True unless ℓ exceeds prop_key_bound(n, g) and does not divide disc(E).
bool prop_key_admissible(std::uint64_t ell, std::uint64_t n, std::uint64_t g,
                         const Integer& disc_e);

/// Smallest r with 2^{r-2} >= g.
int ribet_min_rank(std::uint64_t g);

/// (ℓ - 1)^2 <= n · (r + 1)^{4r}; requires r >= 3. ℓ is not checked for primality.
bool refined_bound_check(std::uint64_t ell, std::uint64_t n, int r);

/// Largest prime ℓ with (ℓ - 1)^{r-1} <= mu_max.
std::uint64_t max_ell_small_field(std::uint64_t mu_max, int r);

/// Largest integer d >= 0 with k · d^δ <= n, for positive rationals k, δ.
Integer tsimerman_disc_cap(const Integer& n, const Rational& k, const Rational& delta);

struct TsimermanParams {
  Rational k;
  Rational delta;
};

/// Scalar inputs of the prime-bound chain. Δ and D(g) are user-asserted:
/// nothing here has a default.
struct BoundInputs {
  std::uint64_t n = 0;
  std::uint64_t g = 0;
  /// Δ for dimension g itself, used when the Δ table has no entry for g.
  std::optional<Integer> delta;
  /// g' -> D(g'), the endomorphism-field degree caps.
  std::map<std::uint64_t, std::uint64_t> d_table;
  std::optional<TsimermanParams> tsimerman;
};

struct BoundReport {
  Integer prop_key;
  Integer c2;
  Integer c1;
  Integer c;
  /// Present when Tsimerman parameters were supplied: the discriminant cap
  /// at degree D(g)·n.
  std::optional<Integer> disc_cap;
  std::vector<std::string> provenance;
};

/// Evaluates C2(n,g) = max(Δ(g), n(g+2)^{3(g+1)}), C1(n,g) = max over
/// g' <= g of C2(n,g'), and C(n,g) = C1(D(g)·n, g).
///
/// `delta_table` maps g' to Δ(g'), the maximal |disc(E)| over the asserted
/// set of CM fields of degree 2g' at degree cap D(g)·n. Throws
/// MissingInputError for any missing Δ(g') or D(g).
BoundReport chain_bounds(const BoundInputs& inputs,
                         const std::map<std::uint64_t, Integer>& delta_table);

}  // namespace cmrt
