#include "cmrt/arith.hpp"

#include "cmrt/error.hpp"

namespace cmrt {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t p = 3; p * p <= n; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw InputError("euler_phi requires m >= 1");
  std::uint64_t phi = m;
  for (auto [p, e] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((a % sm) + sm) % sm);
}

}  // namespace cmrt
