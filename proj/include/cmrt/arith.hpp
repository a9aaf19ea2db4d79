#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cmrt {

bool is_prime(std::uint64_t n);

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Euler's totient. Throws InputError for m = 0.
std::uint64_t euler_phi(std::uint64_t m);

/// base^exp mod m for m < 2^32.
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Reduces a possibly negative integer into [0, m).
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);

}  // namespace cmrt
