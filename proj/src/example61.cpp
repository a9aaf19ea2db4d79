#include "cmrt/example61.hpp"

#include <algorithm>
#include <numeric>

#include "cmrt/arith.hpp"
#include "cmrt/bounds.hpp"
#include "cmrt/eisenstein.hpp"
#include "cmrt/error.hpp"
#include "cmrt/integer_matrix.hpp"

namespace cmrt {

namespace {

void require_odd_prime(std::uint64_t ell) {
  if (ell == 2 || !is_prime(ell)) throw InputError(std::to_string(ell) + " is not an odd prime");
}

std::uint64_t unit_residue(std::int64_t a, std::uint64_t ell) {
  const std::uint64_t r = mod_reduce(a, ell);
  if (r == 0) throw InputError(std::to_string(a) + " is divisible by " + std::to_string(ell));
  return r;
}

EisensteinMatrix iterate(EisensteinMatrix m, int times) {
  for (int i = 0; i < times; ++i) m = c6_generator(m);
  return m;
}

}  // namespace

ResidueSymbolTable ResidueSymbolTable::build(std::uint64_t ell) {
  require_odd_prime(ell);
  ResidueSymbolTable t;
  t.ell = ell;
  for (std::uint64_t x = 1; x < ell; ++x) {
    const std::uint64_t sq = x * x % ell;
    t.squares.insert(sq);
    t.fourth_powers.insert(sq * sq % ell);
  }
  return t;
}

ResidueSymbols residue_symbols(std::int64_t a, std::uint64_t ell) {
  require_odd_prime(ell);
  const std::uint64_t r = unit_residue(a, ell);
  const std::uint64_t k = std::gcd<std::uint64_t>(4, ell - 1);
  return {powmod(r, (ell - 1) / 2, ell) == 1, powmod(r, (ell - 1) / k, ell) == 1};
}

int hecke_epsilon(std::int64_t a, std::uint64_t ell) {
  return residue_symbols(a, ell).is_square ? 1 : -1;
}

bool verify_rho_kernel(std::uint64_t ell) {
  require_odd_prime(ell);
  if (ell % 4 != 1) throw InputError("verify_rho_kernel requires ℓ ≡ 1 mod 4");
  for (std::uint64_t a = 1; a < ell; ++a) {
    const auto signed_a = static_cast<std::int64_t>(a);
    // Φ(x) = x·σ³(x) reduces to x ↦ x² on the residue field.
    const std::uint64_t image = a * a % ell;
    const std::uint64_t value = hecke_epsilon(signed_a, ell) == 1 ? image : (ell - image) % ell;
    if (!residue_symbols(static_cast<std::int64_t>(value), ell).is_fourth_power) return false;
  }
  return true;
}

Integer rho_kernel_order(std::uint64_t ell, unsigned ramification_length,
                         std::uint64_t power_index) {
  if (!is_prime(ell)) throw InputError(std::to_string(ell) + " is not prime");
  if (ramification_length < 1) throw InputError("ramification length must be >= 1");
  if (power_index < 1 || (ell - 1) % power_index != 0) {
    throw InputError("power index " + std::to_string(power_index) + " does not divide " +
                     std::to_string(ell - 1));
  }
  return Integer((ell - 1) / power_index) * pow(Integer(ell), ramification_length - 1);
}

ProEllCertificate pro_ell_certificate(std::uint64_t ell, std::uint64_t a_max,
                                      std::uint64_t cyc_degree) {
  if (!is_prime(ell)) throw InputError(std::to_string(ell) + " is not prime");
  if (a_max < 1 || cyc_degree < 1) throw InputError("a_max and cyc_degree must be positive");
  if (cyc_degree % ell == 0) {
    throw InputError("cyclotomic degree " + std::to_string(cyc_degree) + " is divisible by " +
                     std::to_string(ell));
  }
  return {ell, a_max, cyc_degree,
          a_max == cyc_degree ? ProEllVerdict::ProEll : ProEllVerdict::Inconclusive};
}

std::uint64_t cyclotomic_relative_degree(std::uint64_t ell, std::uint64_t subfield_degree) {
  if (!is_prime(ell)) throw InputError(std::to_string(ell) + " is not prime");
  const std::uint64_t phi = euler_phi(ell);
  if (subfield_degree < 1 || phi % subfield_degree != 0) {
    throw InputError("subfield degree " + std::to_string(subfield_degree) +
                     " does not divide φ(" + std::to_string(ell) + ") = " + std::to_string(phi));
  }
  return phi / subfield_degree;
}

std::vector<CheckResult> c6_action_check() {
  const auto basis = eisenstein_basis();
  std::vector<CheckResult> out;

  {
    bool returns = true;
    std::vector<int> moved_at;
    for (int k = 1; k <= 5; ++k) {
      if (std::any_of(basis.begin(), basis.end(),
                      [&](const EisensteinMatrix& m) { return !(iterate(m, k) == m); })) {
        moved_at.push_back(k);
      }
    }
    for (const auto& m : basis) returns = returns && iterate(m, 6) == m;
    const bool ok = returns && moved_at.size() == 5;
    out.push_back({"c6_order", ok,
                   ok ? "g^6 fixes all 8 Z-basis matrices and g^k moves one for k = 1..5"
                      : "g does not have order exactly 6 on the Z-basis"});
  }

  {
    const EisensteinInt z2 = EisensteinInt::zeta() * EisensteinInt::zeta();
    const EisensteinInt zb2 = EisensteinInt::zeta_bar() * EisensteinInt::zeta_bar();
    bool ok = true;
    std::string detail = "g^2(a,b;c,d) = (a, ζ²b; ζ̄²c, d) on all 8 Z-basis matrices";
    for (const auto& m : basis) {
      const EisensteinMatrix expected{{m.a(), z2 * m.b(), zb2 * m.c(), m.d()}};
      if (!(iterate(m, 2) == expected)) {
        ok = false;
        detail = "mismatch on " + m.str() + ": got " + iterate(m, 2).str();
        break;
      }
    }
    out.push_back({"c6_square_formula", ok, detail});
  }

  {
    // Z-matrix of g² - id in coordinates (slot, {1, ζ}).
    IntegerMatrix diff(8, 8);
    for (int j = 0; j < 8; ++j) {
      const EisensteinMatrix image = iterate(basis[j], 2);
      for (int slot = 0; slot < 4; ++slot) {
        const EisensteinInt delta = image.e[slot] - basis[j].e[slot];
        diff(2 * slot, j) = delta.a;
        diff(2 * slot + 1, j) = delta.b;
      }
    }
    const int rank = matrix_rank(diff);
    bool diagonal_fixed = true;
    for (int j : {0, 1, 6, 7}) {
      for (int i = 0; i < 8; ++i) diagonal_fixed = diagonal_fixed && diff(i, j) == 0;
    }
    // Kernel rank 8 - 4 = 4 and the a, d slots already span a saturated rank-4
    // sublattice inside it, so the fixed lattice is exactly {b = c = 0}.
    const bool ok = rank == 4 && diagonal_fixed;
    out.push_back({"c6_fixed_ring", ok,
                   "rank(g^2 - id) = " + std::to_string(rank) +
                       (diagonal_fixed ? ", diagonal slots fixed" : ", diagonal slots moved")});
  }
  return out;
}

C12Result assemble_c12(const C12Inputs& inputs) {
  if (!inputs.c21) throw MissingInputError("assemble_c12: missing C(2,1)");
  if (!inputs.ramified_prime_cap) throw MissingInputError("assemble_c12: missing ramified-prime cap");
  if (*inputs.c21 < 0 || *inputs.ramified_prime_cap < 0) {
    throw InputError("assemble_c12: inputs must be nonnegative");
  }
  C12Result out;
  Integer small_field;
  if (inputs.simple_surface_cap) {
    small_field = *inputs.simple_surface_cap;
    out.provenance.push_back("simple surfaces, unramified ℓ: cap " + to_string(small_field) +
                             " [user-asserted]");
  } else {
    small_field = Integer(max_ell_small_field(12, 3));
    out.provenance.push_back("simple surfaces, unramified ℓ: (ℓ-1)^2 <= |μ(E)| <= 12 gives ℓ <= " +
                             to_string(small_field));
  }
  const Integer simple = std::max(*inputs.ramified_prime_cap, small_field);
  out.provenance.push_back("simple branch: max(ramified-prime cap " +
                           to_string(*inputs.ramified_prime_cap) + " [user-asserted], " +
                           to_string(small_field) + ") = " + to_string(simple));
  out.provenance.push_back("non-simple branch: reduces to C(2,1) = " + to_string(*inputs.c21) +
                           " [user-asserted]");
  out.value = std::max(*inputs.c21, simple);
  out.provenance.push_back("C(1,2) = max(" + to_string(*inputs.c21) + ", " + to_string(simple) +
                           ") = " + to_string(out.value));
  return out;
}

std::vector<CheckResult> run_verify61() {
  constexpr std::uint64_t ell = 61;
  std::vector<CheckResult> out;

  {
    const auto table = ResidueSymbolTable::build(ell);
    bool ok = table.squares.size() == 30 && table.fourth_powers.size() == 15 &&
              std::includes(table.squares.begin(), table.squares.end(),
                            table.fourth_powers.begin(), table.fourth_powers.end());
    for (std::uint64_t a = 1; a < ell && ok; ++a) {
      const auto sym = residue_symbols(static_cast<std::int64_t>(a), ell);
      ok = sym.is_square == (table.squares.count(a) == 1) &&
           sym.is_fourth_power == (table.fourth_powers.count(a) == 1);
    }
    const auto minus_one = residue_symbols(-1, ell);
    ok = ok && minus_one.is_square && !minus_one.is_fourth_power;
    out.push_back({"residue_table_61", ok,
                   "|squares| = " + std::to_string(table.squares.size()) + ", |fourth powers| = " +
                       std::to_string(table.fourth_powers.size()) +
                       ", -1 is a square but not a fourth power"});
  }

  out.push_back({"rho_kernel_61", verify_rho_kernel(ell),
                 "ε(a)·a² is a fourth power mod 61 for all a in 1..60"});

  const Integer kernel = rho_kernel_order(ell, 4, 4);
  const Integer expected_kernel = Integer(15) * pow(Integer(61), 3);
  out.push_back({"kernel_order", kernel == expected_kernel,
                 "rho_kernel_order(61,4,4) = " + to_string(kernel) + ", 15·61³ = " +
                     to_string(expected_kernel)});

  const std::uint64_t cyc = cyclotomic_relative_degree(ell, 4);
  out.push_back({"cyclotomic_degree", cyc == 15,
                 "[K(μ61):K] = φ(61)/4 = " + std::to_string(cyc)});

  Integer prime_to_ell = kernel;
  while (mpz_divisible_ui_p(prime_to_ell.get_mpz_t(), ell)) prime_to_ell /= static_cast<unsigned long>(ell);
  const auto cert = pro_ell_certificate(ell, prime_to_ell.get_ui(), cyc);
  out.push_back({"pro_61_certificate", cert.verdict == ProEllVerdict::ProEll,
                 "a | " + std::to_string(cert.a_max) + " and " + std::to_string(cyc) +
                     " | a force a = " + std::to_string(cyc) + ": K(A[61])/K(μ61) is pro-61"});

  const auto factors = factorize(226981);
  const bool cube = factors.size() == 1 && factors[0].first == 61 && factors[0].second == 3;
  out.push_back({"disc_factorization", cube, "226981 = 61^3"});

  for (auto& c : c6_action_check()) out.push_back(std::move(c));
  return out;
}

}  // namespace cmrt
