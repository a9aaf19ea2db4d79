#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include "cmrt/arith.hpp"
#include "cmrt/bounds.hpp"
#include "cmrt/error.hpp"
#include "doctest.h"

using namespace cmrt;

namespace {

std::uint64_t phi_by_gcd(std::uint64_t m) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

BoundInputs inputs_for(std::uint64_t n, std::uint64_t g, std::uint64_t d) {
  BoundInputs in;
  in.n = n;
  in.g = g;
  in.d_table[g] = d;
  return in;
}

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(61) == 60);
  CHECK(euler_phi(12) == 4);
  for (std::uint64_t m = 1; m <= 300; ++m) CHECK(euler_phi(m) == phi_by_gcd(m));
  CHECK_THROWS_AS(euler_phi(0), InputError);
}

TEST_CASE("primes and factorizations") {
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(226981));
  CHECK(is_prime(1000003));
  CHECK(factorize(226981) == std::vector<std::pair<std::uint64_t, unsigned>>{{61, 3}});
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("max_mu") {
  CHECK(max_mu(1) == 6);
  CHECK(max_mu(2) == 12);
  CHECK(max_mu(3) == 18);
  for (std::uint64_t g = 1; g <= 50; ++g) CHECK(max_mu(g) <= 16 * g * g);
}

TEST_CASE("division field lower bound") {
  CHECK(division_field_lower_bound(61, 3, 12, 1, 1) == Rational(18000));
  CHECK(division_field_lower_bound(5, 2, 2, 1, 1) == Rational(8));
  CHECK_THROWS_AS(division_field_lower_bound(4, 2, 1, 1, 1), InputError);
  CHECK_THROWS_AS(division_field_lower_bound(5, 1, 1, 1, 1), InputError);
  Rational previous = 0;
  for (std::uint64_t ell = 2; ell < 400; ++ell) {
    if (!is_prime(ell)) continue;
    const Rational v = division_field_lower_bound(ell, 3, 12, 2, 3);
    CHECK(v > previous);
    previous = v;
  }
}

TEST_CASE("key proposition bound") {
  CHECK(prop_key_bound(1, 1) == 729);
  CHECK(prop_key_bound(1, 2) == 262144);
  CHECK(prop_key_bound(2, 1) == 1458);
  CHECK_FALSE(prop_key_admissible(1000003, 1, 2, Integer(226981)));
  CHECK(prop_key_admissible(61, 1, 2, Integer(226981)));
  CHECK(prop_key_admissible(2, 1, 1, Integer(-3)));
  CHECK_THROWS_AS(prop_key_admissible(6, 1, 1, Integer(-3)), InputError);
}

TEST_CASE("Ribet rank and refined check") {
  CHECK(ribet_min_rank(1) == 2);
  CHECK(ribet_min_rank(2) == 3);
  CHECK(ribet_min_rank(5) == 5);
  CHECK_FALSE(refined_bound_check(4098, 1, 3));
  CHECK_FALSE(refined_bound_check(4099, 1, 3));
  CHECK(refined_bound_check(4093, 1, 3));
  CHECK(refined_bound_check(2, 1, 3));
  CHECK_THROWS_AS(refined_bound_check(5, 1, 2), InputError);
}

TEST_CASE("small-field cap") {
  CHECK(max_ell_small_field(12, 3) == 3);
  CHECK(max_ell_small_field(1, 2) == 2);
  CHECK(max_ell_small_field(48, 3) == 7);
}

TEST_CASE("discriminant cap") {
  CHECK(tsimerman_disc_cap(1, 1, Rational(1, 2)) == 1);
  CHECK(tsimerman_disc_cap(100, 1, Rational(1, 2)) == 10000);
  CHECK(tsimerman_disc_cap(2, 1, Rational(1, 65536)) == pow(2ul, 65536));
  CHECK(tsimerman_disc_cap(10, Rational(3), Rational(1)) == 3);
  CHECK_THROWS_AS(tsimerman_disc_cap(10, 0, 1), InputError);
}

TEST_CASE("chain bounds") {
  SUBCASE("illustrative n=1, g=2") {
    BoundInputs in = inputs_for(1, 2, 1);
    const auto r = chain_bounds(in, {{1, Integer(163)}, {2, Integer(226981)}});
    CHECK(r.prop_key == 262144);
    CHECK(r.c2 == 262144);
    CHECK(r.c1 == 262144);
    CHECK(r.c == 262144);
    CHECK_FALSE(r.provenance.empty());
  }
  SUBCASE("Δ dominates") {
    const auto r = chain_bounds(inputs_for(1, 1, 1), {{1, Integer(1000000)}});
    CHECK(r.c2 == 1000000);
    CHECK(r.c1 == 1000000);
  }
  SUBCASE("degree cap feeds C") {
    const auto r = chain_bounds(inputs_for(1, 1, 2), {{1, Integer(3)}});
    CHECK(r.c1 == 729);
    CHECK(r.c == 1458);
  }
  SUBCASE("missing inputs fail loudly") {
    BoundInputs in;
    in.n = 1;
    in.g = 2;
    CHECK_THROWS_AS(chain_bounds(in, {{1, Integer(3)}, {2, Integer(5)}}), MissingInputError);
    CHECK_THROWS_AS(chain_bounds(inputs_for(1, 2, 1), {{2, Integer(5)}}), MissingInputError);
  }
  SUBCASE("scalar Δ fallback and conflicts") {
    BoundInputs in = inputs_for(1, 1, 1);
    in.delta = Integer(5000);
    CHECK(chain_bounds(in, {}).c2 == 5000);
    CHECK_THROWS_AS(chain_bounds(in, {{1, Integer(7)}}), InputError);
  }
  SUBCASE("Tsimerman cap is reported") {
    BoundInputs in = inputs_for(1, 1, 4);
    in.tsimerman = TsimermanParams{Rational(1), Rational(1, 2)};
    CHECK(*chain_bounds(in, {{1, Integer(3)}}).disc_cap == 16);
  }
}

TEST_CASE("chain bounds are monotone in n, g and Δ") {
  for (std::uint64_t g = 1; g <= 3; ++g) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
      for (long delta : {1L, 500L, 100000L}) {
        std::map<std::uint64_t, Integer> table;
        for (std::uint64_t gp = 1; gp <= g + 1; ++gp) table[gp] = delta;
        BoundInputs in;
        in.n = n;
        in.g = g;
        in.d_table = {{g, 2}, {g + 1, 2}};
        const auto base = chain_bounds(in, table);

        BoundInputs bigger_n = in;
        bigger_n.n = n + 1;
        const auto rn = chain_bounds(bigger_n, table);
        CHECK(rn.c2 >= base.c2);
        CHECK(rn.c1 >= base.c1);
        CHECK(rn.c >= base.c);

        BoundInputs bigger_g = in;
        bigger_g.g = g + 1;
        const auto rg = chain_bounds(bigger_g, table);
        CHECK(rg.c2 >= base.c2);
        CHECK(rg.c1 >= base.c1);
        CHECK(rg.c >= base.c);

        auto more = table;
        for (auto& [gp, v] : more) v *= 10;
        const auto rd = chain_bounds(in, more);
        CHECK(rd.c2 >= base.c2);
        CHECK(rd.c1 >= base.c1);
        CHECK(rd.c >= base.c);
      }
    }
  }
}

TEST_CASE("chain inequality audit") {
  for (std::uint64_t g = 1; g <= 6; ++g) {
    for (int r = ribet_min_rank(g); r <= static_cast<int>(g) + 1; ++r) {
      for (std::uint64_t n = 1; n <= 10; ++n) {
        const auto ur = static_cast<unsigned long>(r);
        CHECK(Integer(n) * pow(ur + 1, 3 * ur) <= prop_key_bound(n, g));
      }
    }
  }
}
