#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghwlab {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All positive divisors of n, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

// base^exp in 64-bit arithmetic; throws InvalidArgument on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

BigInt big_pow(std::uint64_t base, unsigned exp);

// Non-negative residue of x mod m (m > 0).
inline std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

// Number of r-dimensional subspaces of F_q^k.
BigInt gaussian_binomial(unsigned k, unsigned r, std::uint64_t q);

BigInt binomial(unsigned n, unsigned r);

// Quotient of an exact division; throws InternalError when a remainder is left.
BigInt exact_div(const BigInt& num, const BigInt& den);

// Saturating conversion used when comparing against 64-bit caps.
std::uint64_t saturate_u64(const BigInt& x);

}  // namespace ghwlab
