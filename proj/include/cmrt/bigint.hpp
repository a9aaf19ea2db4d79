#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace cmrt {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Integer pow(unsigned long base, unsigned long exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

inline Rational pow(const Rational& base, unsigned long exp) {
  Rational out(pow(Integer(base.get_num()), exp), pow(Integer(base.get_den()), exp));
  out.canonicalize();
  return out;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Parses a signed decimal integer; throws InputError on anything else.
Integer parse_integer(std::string_view text);

/// Parses "p/q" or "p" into a canonical rational; throws InputError.
Rational parse_rational(std::string_view text);

}  // namespace cmrt
