#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "cmrt/error.hpp"
#include "cmrt/group.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmrt;

namespace {

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<int>> t;
  for (int a = 0; a < g.order(); ++a) t.emplace_back(g.row(a).begin(), g.row(a).end());
  return t;
}

}  // namespace

TEST_CASE("cyclic group table is addition mod m") {
  const FiniteGroup c4 = build_group("C4");
  REQUIRE(c4.order() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(c4.mul(i, j) == (i + j) % 4);
  }
  CHECK(c4.name(1) == "σ");
  CHECK(c4.name(2) == "σ^2");
}

TEST_CASE("Klein four-group") {
  const FiniteGroup v = build_group("C2xC2");
  REQUIRE(v.order() == 4);
  for (int x = 0; x < 4; ++x) {
    CHECK(v.mul(x, x) == 0);
    for (int y = 0; y < 4; ++y) CHECK(v.mul(x, y) == (x ^ y));
  }
}

TEST_CASE("axiom violations are rejected") {
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), InputError);
  // Latin square with identity that fails associativity (order 5 loop).
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1, 2, 3, 4},
                                           {1, 0, 3, 4, 2},
                                           {2, 4, 0, 1, 3},
                                           {3, 2, 4, 0, 1},
                                           {4, 3, 1, 2, 0}}),
                  InputError);
  CHECK_THROWS_AS(build_group("C65"), InputError);
  CHECK_THROWS_AS(build_group("X3"), InputError);
  CHECK_THROWS_AS(build_group(""), InputError);
}

TEST_CASE("coset actions") {
  const FiniteGroup c4 = build_group("C4");
  SUBCASE("regular action") {
    const auto cs = coset_structure(c4, Subgroup::trivial(c4));
    REQUIRE(cs.count() == 4);
    for (int k = 0; k < 4; ++k) CHECK(cs.action[1][k] == (k + 1) % 4);
  }
  SUBCASE("index two quotient") {
    const auto cs = coset_structure(c4, Subgroup::make(c4, {0, 2}));
    REQUIRE(cs.count() == 2);
    CHECK(cs.action[1][0] == 1);
    CHECK(cs.action[1][1] == 0);
  }
  SUBCASE("dihedral action on a non-normal subgroup") {
    const FiniteGroup d4 = build_group("D4");
    REQUIRE(d4.order() == 8);
    // r^i s^j sits at i + 4j; s generates a non-normal subgroup.
    const Subgroup h = Subgroup::make(d4, {0, 4});
    CHECK_FALSE(h.is_normal());
    const auto cs = coset_structure(d4, h);
    REQUIRE(cs.count() == 4);
    // Oracle: gH as explicit sets.
    for (int g = 0; g < 8; ++g) {
      for (int k = 0; k < 4; ++k) {
        std::set<int> image;
        for (int x : cs.members(k)) image.insert(d4.mul(g, x));
        const auto target = cs.members(cs.action[g][k]);
        CHECK(image == std::set<int>(target.begin(), target.end()));
      }
    }
  }
}

TEST_CASE("coset action is a homomorphism and its kernel is the core") {
  for (const auto& desc : small_group_descriptors(12)) {
    const FiniteGroup g = build_group(desc);
    for (const Subgroup& h : all_subgroups(g)) {
      const auto cs = coset_structure(g, h);
      for (int a = 0; a < g.order(); ++a) {
        for (int b = 0; b < g.order(); ++b) {
          for (int k = 0; k < cs.count(); ++k) {
            REQUIRE(cs.action[g.mul(a, b)][k] == cs.action[a][cs.action[b][k]]);
          }
        }
        bool acts_trivially = true;
        for (int k = 0; k < cs.count(); ++k) acts_trivially &= cs.action[a][k] == k;
        // a lies in every conjugate x H x^-1.
        bool in_core = true;
        for (int x = 0; x < g.order(); ++x) {
          in_core &= h.contains(g.mul(g.mul(g.inverse(x), a), x));
        }
        CHECK(acts_trivially == in_core);
      }
    }
  }
}

TEST_CASE("central involutions") {
  const FiniteGroup c4 = build_group("C4");
  CHECK(is_central_involution(c4, 2));
  CHECK_FALSE(is_central_involution(c4, 1));
  CHECK_FALSE(is_central_involution(c4, 0));
  const FiniteGroup d4 = build_group("D4");
  // Brute-force center of D4.
  std::vector<int> center;
  for (int x = 0; x < 8; ++x) {
    bool central = true;
    for (int y = 0; y < 8; ++y) central &= d4.mul(x, y) == d4.mul(y, x);
    if (central && x != 0 && d4.mul(x, x) == 0) center.push_back(x);
  }
  CHECK(center == std::vector<int>{2});
  CHECK(is_central_involution(d4, 2));
  CHECK(central_involutions(d4) == center);
}

TEST_CASE("catalog has the 42 groups of order at most 16, pairwise distinct") {
  const auto descs = small_group_descriptors(16);
  REQUIRE(descs.size() == 42);
  const std::map<int, int> expected_counts = {{1, 1}, {2, 1}, {3, 1}, {4, 2},  {5, 1},  {6, 2},
                                              {7, 1}, {8, 5}, {9, 2}, {10, 2}, {11, 1}, {12, 5},
                                              {13, 1}, {14, 2}, {15, 1}, {16, 14}};
  std::map<int, int> counts;
  std::vector<std::pair<int, oracle::GroupInvariants>> seen;
  for (const auto& d : descs) {
    const FiniteGroup g = build_group(d);
    ++counts[g.order()];
    const auto inv = oracle::group_invariants(table_of(g));
    for (const auto& [order, other] : seen) {
      if (order == g.order()) CHECK_MESSAGE(!(other == inv), d << " duplicates an earlier group");
    }
    seen.emplace_back(g.order(), inv);
  }
  CHECK(counts == expected_counts);
}

TEST_CASE("named constructors") {
  CHECK(build_group("Q8").order() == 8);
  CHECK(build_group("S4xC2").order() == 48);
  CHECK(build_group("D6xC2").order() == 24);
  CHECK(build_group("A4").order() == 12);
  CHECK_FALSE(build_group("Q8").is_abelian());
  CHECK(build_group("C2xC4").is_abelian());
  CHECK(symmetric_group(4).order() == 24);
  CHECK(build_group("D6").order() == 12);
}

TEST_CASE("all subgroups of small groups") {
  CHECK(all_subgroups(build_group("C4")).size() == 3);
  CHECK(all_subgroups(build_group("C2xC2")).size() == 5);
  CHECK(all_subgroups(build_group("D4")).size() == 10);
  CHECK(all_subgroups(build_group("Q8")).size() == 6);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
}

TEST_CASE("table files round-trip") {
  const FiniteGroup q8 = build_group("Q8");
  std::stringstream ss;
  write_group_table(ss, q8);
  const FiniteGroup back = read_group_table(ss);
  CHECK(back.same_table(q8));
  CHECK(back.names() == q8.names());

  const FiniteGroup file = load_group(std::string("@") + CMRT_DATA_DIR + "/c4.table");
  CHECK(file.same_table(build_group("C4")));
  CHECK(file.name(1) == "s");

  std::stringstream bad("2\n0 1\n1 1\n");
  CHECK_THROWS_AS(read_group_table(bad), InputError);
  CHECK_THROWS_AS(load_group("@/nonexistent/table"), InputError);
}

TEST_CASE("subgroup validation") {
  const FiniteGroup c4 = build_group("C4");
  CHECK_THROWS_AS(Subgroup::make(c4, {0, 1}), InputError);
  CHECK_THROWS_AS(Subgroup::make(c4, {1, 2}), InputError);
  CHECK_THROWS_AS(Subgroup::make(c4, {0, 7}), InputError);
  const int gen[] = {1};
  CHECK(Subgroup::generated_by(c4, gen).order() == 4);
  const FiniteGroup c2 = build_group("C2");
  CHECK_THROWS_AS(coset_structure(c4, Subgroup::trivial(c2)), InputError);
}
