// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its budget. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cmrt/arith.hpp"
#include "cmrt/bounds.hpp"
#include "cmrt/class_number.hpp"
#include "cmrt/cm_type.hpp"
#include "cmrt/example61.hpp"
#include "cmrt/integer_matrix.hpp"
#include "oracles.hpp"

using namespace cmrt;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream notes;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << "first failure: " << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s,
               const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.ok = false;
    v.notes << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = v.ok && in_time;
  failures += !pass;
  std::cout << (pass ? "PASS" : "FAIL") << "  AC" << id << "  " << title << "  (" << secs
            << " s, budget " << budget_s << " s)";
  if (!in_time) std::cout << "  over budget";
  const std::string notes = v.notes.str();
  if (!notes.empty()) std::cout << "  " << notes;
  std::cout << std::endl;
}

CMFieldSymbol c4_field() {
  const FiniteGroup c4 = build_group("C4");
  return CMFieldSymbol::make(Subgroup::trivial(c4), 2);
}

}  // namespace

int main() {
  std::cout.precision(3);

  criterion(1, "conductor-61 example: kernel, kernel order, cyclotomic degree, certificate, 61^3",
            1.0, [](Verdict& v) {
              v.expect(verify_rho_kernel(61), "verify_rho_kernel(61)");
              const Integer fifteen_61_cubed = Integer(15) * 61 * 61 * 61;
              v.expect(rho_kernel_order(61, 4, 4) == fifteen_61_cubed,
                       "rho_kernel_order(61,4,4) = 15*61^3");
              v.expect(cyclotomic_relative_degree(61, 4) == 15, "cyclotomic_relative_degree(61,4)");
              v.expect(pro_ell_certificate(61, 15, 15).verdict == ProEllVerdict::ProEll,
                       "pro_ell_certificate(61,15,15)");
              const auto f = factorize(226981);
              v.expect(f.size() == 1 && f[0].first == 61 && f[0].second == 3, "226981 = 61^3");
              for (const auto& c : run_verify61()) v.expect(c.ok, "verify61 check " + c.name);
              v.notes << "15*61^3 = " << to_string(fifteen_61_cubed);
            });

  criterion(2, "cyclic quartic CM types: count, r = 3, |F| = 1, reflex {1, σ^3}", 1.0,
            [](Verdict& v) {
              const CMFieldSymbol f = c4_field();
              const auto types = enumerate_cm_types(f);
              v.expect(types.size() == 4, "4 CM types");
              int primitive = 0;
              for (const auto& t : types) {
                if (!is_primitive(t)) continue;
                ++primitive;
                v.expect(mt_rank(t) == 3, "mt_rank = 3");
                v.expect(component_group_order(t) == 1, "|F| = 1");
              }
              v.expect(primitive == 4, "all four types primitive");
              const ReflexDatum d = reflex(CMType::make(f, {0, 1}));
              v.expect(d.reflex_degree == 4, "reflex degree 4");
              v.expect(d.phistar == std::vector<int>{0, 3}, "Φ* = {1, σ^3}");
            });

  criterion(3, "order-6 action on M2(Z[ζ3]): order, square formula, fixed ring", 1.0,
            [](Verdict& v) {
              const auto checks = c6_action_check();
              v.expect(checks.size() == 3, "three assertions");
              for (const auto& c : checks) v.expect(c.ok, c.name + ": " + c.detail);
            });

  criterion(4, "bound values 729, 262144, small-field cap 3, C(1,2) = 163", 1.0, [](Verdict& v) {
    v.expect(prop_key_bound(1, 1) == 729, "prop_key_bound(1,1)");
    v.expect(prop_key_bound(1, 2) == 262144, "prop_key_bound(1,2)");
    v.expect(max_ell_small_field(12, 3) == 3, "max_ell_small_field(12,3)");
    v.expect(assemble_c12({Integer(163), Integer(61), std::nullopt}).value == 163,
             "assemble_c12(163, 61)");
  });

  criterion(5, "CM-type properties over all groups of order <= 16", 60.0, [](Verdict& v) {
    auto descs = small_group_descriptors(16);
    for (const char* extra : {"C6", "D4", "D6", "C2xC4"}) descs.emplace_back(extra);
    long fields = 0, types_seen = 0, primitive_seen = 0;
    for (const auto& desc : descs) {
      const FiniteGroup g = build_group(desc);
      const auto subgroups = all_subgroups(g);
      for (const auto& f : enumerate_cm_fields(g)) {
        ++fields;
        const int dim = f.dimension();
        const auto types = enumerate_cm_types(f);
        v.expect(types.size() == (std::size_t{1} << dim), desc + ": 2^g types");
        for (const auto& t : types) {
          ++types_seen;
          const int r = mt_rank(t);
          v.expect(2 <= r && r <= dim + 1, desc + ": 2 <= r <= g+1");
          const bool prim = is_primitive(t, subgroups);
          if (prim) {
            ++primitive_seen;
            v.expect(pow(2ul, static_cast<unsigned long>(r - 2)) >= dim,
                     desc + ": primitive implies 2^(r-2) >= g");
            v.expect(reflex_type(reflex_type(t)) == t, desc + ": double reflex");
          }
          // |F| <= 2((r+1)/4)^((r+1)/2)  <=>  |F|^2 4^(r+1) <= 4 (r+1)^(r+1)
          const Integer f_order = component_group_order(t);
          const auto ur = static_cast<unsigned long>(r);
          v.expect(f_order * f_order * pow(4ul, ur + 1) <= 4 * pow(ur + 1, ur + 1),
                   desc + ": |F| bound");
        }
      }
    }
    v.notes << descs.size() << " groups, " << fields << " fields, " << types_seen << " types, "
            << primitive_seen << " primitive";
  });

  criterion(6, "Smith normal form vs gcd-of-minors oracle on 500 random matrices", 30.0,
            [](Verdict& v) {
              std::mt19937 rng(20261016);
              std::uniform_int_distribution<int> dim(1, 6);
              std::uniform_int_distribution<long> entry(-9, 9);
              for (int trial = 0; trial < 500; ++trial) {
                oracle::Grid grid(dim(rng));
                const int cols = dim(rng);
                for (auto& row : grid) {
                  row.resize(cols);
                  for (auto& x : row) x = entry(rng);
                }
                const auto snf = smith_normal_form(IntegerMatrix::from_rows(grid));
                const auto minors = oracle::minor_gcds(grid);
                Integer prefix = 1;
                for (std::size_t k = 0; k < minors.size(); ++k) {
                  prefix *= snf.divisors[k];
                  v.expect(prefix == minors[k], "divisor product equals minor gcd");
                  if (k + 1 < snf.divisors.size() && snf.divisors[k] != 0) {
                    v.expect(mpz_divisible_p(snf.divisors[k + 1].get_mpz_t(),
                                             snf.divisors[k].get_mpz_t()) != 0,
                             "divisibility chain");
                  }
                }
              }
            });

  criterion(7, "class number one, fundamental discriminants down to -200; h(-23) = 3", 5.0,
            [](Verdict& v) {
              const auto search = discs_with_class_number_at_most(1, 200, true);
              std::vector<std::int64_t> found;
              for (const auto& e : search.entries) found.push_back(e.d);
              v.expect(found == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -19, -43, -67, -163},
                       "exact list");
              std::vector<std::int64_t> by_oracle;
              for (long d = -3; d >= -200; --d) {
                if (is_fundamental_discriminant(d) && oracle::class_number_by_reduction(d) == 1) {
                  by_oracle.push_back(d);
                }
              }
              v.expect(found == by_oracle, "oracle agreement");
              v.expect(class_number_imag_quadratic(-23) == 3, "h(-23) = 3");
              v.expect(oracle::class_number_by_reduction(-23) == 3, "oracle h(-23) = 3");
            });

  criterion(8, "inequality audits: totient, Ribet constant, chain step", 10.0, [](Verdict& v) {
    constexpr std::uint64_t kMax = 1000000;
    std::vector<std::uint64_t> phi(kMax + 1);
    for (std::uint64_t i = 0; i <= kMax; ++i) phi[i] = i;
    for (std::uint64_t p = 2; p <= kMax; ++p) {
      if (phi[p] != p) continue;
      for (std::uint64_t m = p; m <= kMax; m += p) phi[m] -= phi[m] / p;
    }
    for (std::uint64_t x = 1; x <= kMax; ++x) {
      if (4 * phi[x] * phi[x] < x) v.expect(false, "4 phi(x)^2 >= x at " + std::to_string(x));
    }
    for (std::uint64_t x = 1; x <= kMax; x += 997) v.expect(euler_phi(x) == phi[x], "euler_phi vs sieve");
    for (std::uint64_t g = 1; g <= 64; ++g) {
      const auto r = static_cast<unsigned long>(ribet_min_rank(g));
      v.expect(pow(2ul, 2 * r * r + 1) >= pow(2ul, 9) * g * g, "Ribet constant");
    }
    for (unsigned long g = 1; g <= 6; ++g) {
      for (unsigned long r = 1; r <= g + 1; ++r) {
        v.expect(pow(r + 1, 3 * r) <= pow(g + 2, 3 * (g + 1)), "chain step");
      }
    }
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance failures: ")
            << (failures == 0 ? "" : std::to_string(failures)) << std::endl;
  return failures == 0 ? 0 : 1;
}
