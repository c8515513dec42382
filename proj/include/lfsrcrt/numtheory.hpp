#pragma once

#include <cstdint>
#include <vector>

namespace lfsrcrt {

struct ExtendedGcd {
  std::int64_t gcd;
  std::int64_t x;  // gcd = a*x + b*y
  std::int64_t y;
};

ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b);

// Representative of a in [0, m).
std::uint64_t mod_normalize(std::int64_t a, std::uint64_t m);

// Inverse of a modulo m; throws Error("index not invertible") when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::int64_t a, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

bool is_prime(std::uint64_t n);

// Distinct prime factors in increasing order. Trial division up to 2^16, Pollard rho above.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Least e >= 1 with 2^e = 1 mod n (n odd). ord_1(2) is defined as 1.
std::uint64_t multiplicative_order_of_two(std::uint64_t n);

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

}  // namespace lfsrcrt
