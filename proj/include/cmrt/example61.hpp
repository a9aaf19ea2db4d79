#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmrt/bigint.hpp"

namespace cmrt {

/// Squares and fourth powers in F_ℓ^×, tabulated by brute force.
struct ResidueSymbolTable {
  std::uint64_t ell = 0;
  std::set<std::uint64_t> squares;
  std::set<std::uint64_t> fourth_powers;

  static ResidueSymbolTable build(std::uint64_t ell);
};

struct ResidueSymbols {
  bool is_square = false;
  bool is_fourth_power = false;
};

/// Membership of a mod ℓ in the squares / fourth powers, by Euler-style
/// exponentiation. Requires ℓ an odd prime and ℓ ∤ a.
ResidueSymbols residue_symbols(std::int64_t a, std::uint64_t ell);

/// +1 if a is a square mod ℓ, -1 otherwise.
int hecke_epsilon(std::int64_t a, std::uint64_t ell);

/// Checks that ε(a)·a² is a fourth power mod ℓ for every unit a.
/// Requires ℓ ≡ 1 (mod 4).
bool verify_rho_kernel(std::uint64_t ell);

/// ((ℓ - 1)/k)·ℓ^{e-1}: the kernel of a unit group of order (ℓ - 1)ℓ^{e-1}
/// onto F_ℓ^×/F_ℓ^{×k}. Requires k | ℓ - 1.
Integer rho_kernel_order(std::uint64_t ell, unsigned ramification_length,
                         std::uint64_t power_index);

enum class ProEllVerdict { ProEll, Inconclusive };

struct ProEllCertificate {
  std::uint64_t ell = 0;
  std::uint64_t a_max = 0;
  std::uint64_t cyc_degree = 0;
  ProEllVerdict verdict = ProEllVerdict::Inconclusive;
};

/// Writing [K(A[ℓ]):K] = ℓ^k·a with a | a_max and cyc_degree | a, the
/// relative extension over K(μ_ℓ) is pro-ℓ exactly when a is forced to
/// equal cyc_degree, i.e. when a_max = cyc_degree.
ProEllCertificate pro_ell_certificate(std::uint64_t ell, std::uint64_t a_max,
                                      std::uint64_t cyc_degree);

/// φ(ℓ)/[K:Q] for a subfield K of Q(μ_ℓ).
std::uint64_t cyclotomic_relative_degree(std::uint64_t ell, std::uint64_t subfield_degree);

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Exact verification of the order-6 action on M_2(Z[ζ₃]):
/// order 6, the formula for g², and Fix(g²) = {b = c = 0}.
std::vector<CheckResult> c6_action_check();

struct C12Inputs {
  /// C(2,1), cited from the literature.
  std::optional<Integer> c21;
  /// Bound on primes ramified in the CM field of a simple surface over Q.
  std::optional<Integer> ramified_prime_cap;
  /// Overrides max_ell_small_field(12, 3) when given.
  std::optional<Integer> simple_surface_cap;
};

struct C12Result {
  Integer value;
  std::vector<std::string> provenance;
};

/// max(C(2,1), max(ramified prime cap, small-field cap)).
C12Result assemble_c12(const C12Inputs& inputs);

/// The full check list run by `verify-61`.
std::vector<CheckResult> run_verify61();

}  // namespace cmrt
