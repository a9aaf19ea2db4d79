#include "cmrt/bounds.hpp"

#include "cmrt/arith.hpp"
#include "cmrt/error.hpp"

namespace cmrt {

namespace {

void require_prime(std::uint64_t ell) {
  if (!is_prime(ell)) throw InputError(std::to_string(ell) + " is not prime");
}

Integer floor_root(const Integer& x, unsigned long k) {
  Integer out;
  mpz_root(out.get_mpz_t(), x.get_mpz_t(), k);
  return out;
}

std::string brief(const Integer& v) {
  const std::string s = to_string(v);
  if (s.size() <= 64) return s;
  return "a " + std::to_string(s.size()) + "-digit integer";
}

}  // namespace

std::uint64_t max_mu(std::uint64_t g) {
  if (g < 1) throw InputError("max_mu requires g >= 1");
  const std::uint64_t limit = (4 * g) * (4 * g);
  std::uint64_t best = 1;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (euler_phi(m) <= 2 * g) best = m;
  }
  return best;
}

Rational division_field_lower_bound(std::uint64_t ell, int r, std::uint64_t mu,
                                    std::uint64_t deg_k_over_estar, const Integer& f_order) {
  require_prime(ell);
  if (r < 2) throw InputError("division_field_lower_bound requires r >= 2");
  if (mu < 1 || deg_k_over_estar < 1 || f_order < 1) {
    throw InputError("division_field_lower_bound arguments must be positive");
  }
  const auto ur = static_cast<unsigned long>(r);
  Rational factor(Integer(ell - 1), Integer(ell));
  factor.canonicalize();
  Rational value = pow(factor, ur) * Rational(pow(Integer(ell), ur));
  value /= Rational(Integer(mu) * Integer(deg_k_over_estar) * pow(f_order, 2 * ur));
  value.canonicalize();
  return value;
}

Integer prop_key_bound(std::uint64_t n, std::uint64_t g) {
  if (n < 1 || g < 1) throw InputError("prop_key_bound requires n, g >= 1");
  return Integer(n) * pow(g + 2, 3 * (g + 1));
}

bool prop_key_admissible(std::uint64_t ell, std::uint64_t n, std::uint64_t g,
                         const Integer& disc_e) {
  require_prime(ell);
  if (disc_e == 0) throw InputError("disc(E) must be nonzero");
  if (Integer(ell) <= prop_key_bound(n, g)) return true;
  return mpz_divisible_ui_p(disc_e.get_mpz_t(), ell) != 0;
}

int ribet_min_rank(std::uint64_t g) {
  if (g < 1) throw InputError("ribet_min_rank requires g >= 1");
  int r = 2;
  while (pow(2ul, static_cast<unsigned long>(r - 2)) < Integer(g)) ++r;
  return r;
}

bool refined_bound_check(std::uint64_t ell, std::uint64_t n, int r) {
  // Only the inequality is evaluated, so ℓ need not be prime here.
  if (ell < 1) throw InputError("refined_bound_check requires ell >= 1");
  if (r < 3) throw InputError("refined_bound_check requires r >= 3");
  if (n < 1) throw InputError("refined_bound_check requires n >= 1");
  const auto ur = static_cast<unsigned long>(r);
  return pow(Integer(ell - 1), 2) <= Integer(n) * pow(ur + 1, 4 * ur);
}

std::uint64_t max_ell_small_field(std::uint64_t mu_max, int r) {
  if (r < 2) throw InputError("max_ell_small_field requires r >= 2");
  if (mu_max < 1) throw InputError("max_ell_small_field requires mu_max >= 1");
  const Integer bound = floor_root(Integer(mu_max), static_cast<unsigned long>(r - 1));
  // ℓ = 2 always survives since 1 <= mu_max.
  for (std::uint64_t ell = bound.get_ui() + 1; ell >= 2; --ell) {
    if (is_prime(ell)) return ell;
  }
  return 2;
}

Integer tsimerman_disc_cap(const Integer& n, const Rational& k, const Rational& delta) {
  if (n < 1) throw InputError("tsimerman_disc_cap requires n >= 1");
  if (k <= 0 || delta <= 0) throw InputError("k and delta must be positive");
  if (!delta.get_num().fits_ulong_p() || !delta.get_den().fits_ulong_p()) {
    throw InputError("delta numerator/denominator too large");
  }
  const unsigned long p = delta.get_num().get_ui();
  const unsigned long q = delta.get_den().get_ui();
  // k·d^{p/q} <= n  <=>  d^p · a^q <= n^q · b^q  for k = a/b.
  const Integer lhs_scale = pow(Integer(k.get_num()), q);
  const Integer rhs = pow(n, q) * pow(Integer(k.get_den()), q);
  Integer budget;
  mpz_fdiv_q(budget.get_mpz_t(), rhs.get_mpz_t(), lhs_scale.get_mpz_t());
  return floor_root(budget, p);
}

BoundReport chain_bounds(const BoundInputs& inputs,
                         const std::map<std::uint64_t, Integer>& delta_table) {
  if (inputs.n < 1 || inputs.g < 1) throw InputError("chain_bounds requires n, g >= 1");
  const auto d_it = inputs.d_table.find(inputs.g);
  if (d_it == inputs.d_table.end()) {
    throw MissingInputError("missing D(" + std::to_string(inputs.g) +
                            ") in the endomorphism-degree table");
  }
  if (d_it->second < 1) throw InputError("D(g) must be >= 1");
  for (const auto& [gp, dv] : delta_table) {
    if (dv < 1) throw InputError("Δ(" + std::to_string(gp) + ") must be >= 1");
  }
  auto delta_for = [&](std::uint64_t gp) -> Integer {
    const auto it = delta_table.find(gp);
    if (it != delta_table.end()) {
      if (gp == inputs.g && inputs.delta && *inputs.delta != it->second) {
        throw InputError("conflicting Δ values for g = " + std::to_string(gp));
      }
      return it->second;
    }
    if (gp == inputs.g && inputs.delta) return *inputs.delta;
    throw MissingInputError("missing Δ for g' = " + std::to_string(gp) +
                            " (Δ is non-effective and must be supplied)");
  };

  const std::uint64_t n_cap = d_it->second * inputs.n;
  BoundReport report;
  report.prop_key = prop_key_bound(inputs.n, inputs.g);
  report.provenance.push_back("prop_key = n(g+2)^(3(g+1)) with n=" + std::to_string(inputs.n) +
                              ", g=" + std::to_string(inputs.g) + " -> " +
                              to_string(report.prop_key));

  auto c1_at = [&](std::uint64_t degree, const char* tag) {
    Integer c1 = 0;
    for (std::uint64_t gp = 1; gp <= inputs.g; ++gp) {
      const Integer delta = delta_for(gp);
      const Integer key = prop_key_bound(degree, gp);
      const Integer c2 = delta > key ? delta : key;
      report.provenance.push_back(std::string(tag) + ": C2(" + std::to_string(degree) + "," +
                                  std::to_string(gp) + ") = max(Δ=" + to_string(delta) +
                                  " [user-asserted], n(g+2)^(3(g+1))=" + to_string(key) +
                                  ") = " + to_string(c2));
      if (gp == inputs.g && degree == inputs.n && std::string(tag) == "C1") report.c2 = c2;
      if (c2 > c1) c1 = c2;
    }
    report.provenance.push_back(std::string(tag) + ": C1(" + std::to_string(degree) + "," +
                                std::to_string(inputs.g) + ") = max over g' <= g of C2 = " +
                                to_string(c1));
    return c1;
  };

  report.c1 = c1_at(inputs.n, "C1");
  report.c = c1_at(n_cap, "C");
  report.provenance.push_back("C(n,g) = C1(D(g)·n, g) with D(" + std::to_string(inputs.g) +
                              ")=" + std::to_string(d_it->second) + " [user-asserted] -> " +
                              to_string(report.c));
  if (inputs.tsimerman) {
    report.disc_cap = tsimerman_disc_cap(Integer(n_cap), inputs.tsimerman->k,
                                         inputs.tsimerman->delta);
    report.provenance.push_back("disc cap: largest d with k_g·d^δ_g <= " +
                                std::to_string(n_cap) + " (k_g=" +
                                to_string(inputs.tsimerman->k) + ", δ_g=" +
                                to_string(inputs.tsimerman->delta) + " [user-asserted]) -> " +
                                brief(*report.disc_cap));
  }
  return report;
}

}  // namespace cmrt
