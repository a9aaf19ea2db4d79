#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "cmrt/class_number.hpp"
#include "cmrt/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cmrt;

TEST_CASE("class numbers of small discriminants") {
  CHECK(class_number_imag_quadratic(-4) == 1);
  CHECK(class_number_imag_quadratic(-163) == 1);
  CHECK(class_number_imag_quadratic(-23) == 3);
  CHECK(reduced_forms(-23) == std::vector<QuadraticForm>{{1, 1, 6}, {2, -1, 3}, {2, 1, 3}});
  CHECK(reduced_forms(-4) == std::vector<QuadraticForm>{{1, 0, 1}});
  CHECK_THROWS_AS(class_number_imag_quadratic(-5), InputError);
  CHECK_THROWS_AS(class_number_imag_quadratic(5), InputError);
}

TEST_CASE("form counting agrees with the reduction oracle down to -500") {
  for (long d = -3; d >= -500; --d) {
    const long r = ((d % 4) + 4) % 4;
    if (r != 0 && r != 1) continue;
    CHECK_MESSAGE(static_cast<long>(class_number_imag_quadratic(d)) ==
                      oracle::class_number_by_reduction(d),
                  "d = " << d);
  }
}

TEST_CASE("non-fundamental discriminants count classes of the order") {
  CHECK_FALSE(is_fundamental_discriminant(-12));
  CHECK(class_number_imag_quadratic(-12) == 1);
  CHECK(class_number_imag_quadratic(-16) == 1);
  CHECK(class_number_imag_quadratic(-27) == 1);
  CHECK(class_number_imag_quadratic(-28) == 1);
  CHECK(class_number_imag_quadratic(-20) == 2);
}

TEST_CASE("fundamental discriminants") {
  for (long d : {-3L, -4L, -7L, -8L, -15L, -20L, -24L, -163L}) CHECK(is_fundamental_discriminant(d));
  for (long d : {-12L, -16L, -27L, -28L, -1L, -2L, -36L}) CHECK_FALSE(is_fundamental_discriminant(d));
}

TEST_CASE("class number one search") {
  auto ds = [](const ClassNumberSearch& s) {
    std::vector<std::int64_t> out;
    for (const auto& e : s.entries) out.push_back(e.d);
    return out;
  };
  const auto s200 = discs_with_class_number_at_most(1, 200, true);
  CHECK(ds(s200) == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -19, -43, -67, -163});
  CHECK(s200.completeness.rfind("search-bounded", 0) == 0);
  CHECK(ds(discs_with_class_number_at_most(1, 10, true)) ==
        std::vector<std::int64_t>{-3, -4, -7, -8});
  const auto all = discs_with_class_number_at_most(1, 200, false);
  CHECK(ds(all) == std::vector<std::int64_t>{-3, -4, -7, -8, -11, -12, -16, -19, -27, -28, -43,
                                             -67, -163});
  CHECK_THROWS_AS(discs_with_class_number_at_most(0, 100, true), InputError);
}
