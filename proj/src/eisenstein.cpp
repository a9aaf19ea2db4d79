#include "cmrt/eisenstein.hpp"

namespace cmrt {

std::string EisensteinInt::str() const {
  if (b == 0) return a.get_str();
  std::string out = a == 0 ? "" : a.get_str() + (b > 0 ? "+" : "");
  if (b == 1) return out + "ζ";
  if (b == -1) return out + "-ζ";
  return out + b.get_str() + "ζ";
}

std::string EisensteinMatrix::str() const {
  return "(" + e[0].str() + ", " + e[1].str() + "; " + e[2].str() + ", " + e[3].str() + ")";
}

EisensteinMatrix c6_generator(const EisensteinMatrix& m) {
  return {{m.d().conj(), EisensteinInt::zeta() * m.c().conj(),
           EisensteinInt::zeta_bar() * m.b().conj(), m.a().conj()}};
}

std::array<EisensteinMatrix, 8> eisenstein_basis() {
  std::array<EisensteinMatrix, 8> out{};
  for (int slot = 0; slot < 4; ++slot) {
    out[2 * slot].e[slot] = {1, 0};
    out[2 * slot + 1].e[slot] = {0, 1};
  }
  return out;
}

}  // namespace cmrt
