#pragma once

#include <array>
#include <string>

#include "cmrt/bigint.hpp"

namespace cmrt {

/// a + b·ζ₃ with ζ₃² = -1 - ζ₃.
struct EisensteinInt {
  Integer a = 0;
  Integer b = 0;

  static EisensteinInt zeta() { return {0, 1}; }
  /// ζ̄₃ = ζ₃² = -1 - ζ₃.
  static EisensteinInt zeta_bar() { return {-1, -1}; }
  EisensteinInt conj() const { return {a - b, -b}; }

  friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    // (a + bζ)(c + dζ) = ac + (ad + bc)ζ + bd(-1 - ζ)
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend bool operator==(const EisensteinInt& x, const EisensteinInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  bool is_zero() const { return a == 0 && b == 0; }
  std::string str() const;
};

/// 2x2 matrix (a b; c d) over Z[ζ₃], stored as {a, b, c, d}.
struct EisensteinMatrix {
  std::array<EisensteinInt, 4> e;

  const EisensteinInt& a() const { return e[0]; }
  const EisensteinInt& b() const { return e[1]; }
  const EisensteinInt& c() const { return e[2]; }
  const EisensteinInt& d() const { return e[3]; }

  friend bool operator==(const EisensteinMatrix& x, const EisensteinMatrix& y) {
    return x.e == y.e;
  }
  std::string str() const;
};

/// The generator action (a b; c d) ↦ (d̄, ζ₃c̄; ζ̄₃b̄, ā) of the cyclic group of order 6.
EisensteinMatrix c6_generator(const EisensteinMatrix& m);

/// The eight Z-basis matrices: E_ij and ζ₃·E_ij for each slot.
std::array<EisensteinMatrix, 8> eisenstein_basis();

}  // namespace cmrt
