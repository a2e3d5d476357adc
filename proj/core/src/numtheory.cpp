#include "ghwlab/numtheory.hpp"

#include <limits>

#include "ghwlab/error.hpp"

namespace ghwlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw InvalidArgument("ipow: 64-bit overflow");
    }
    r *= base;
  }
  return r;
}

BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt gaussian_binomial(unsigned k, unsigned r, std::uint64_t q) {
  if (r > k) return 0;
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < r; ++i) {
    num *= big_pow(q, k) - big_pow(q, i);
    den *= big_pow(q, r) - big_pow(q, i);
  }
  return exact_div(num, den);
}

BigInt binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  BigInt c = 1;
  for (unsigned i = 0; i < r; ++i) {
    c *= n - i;
    c /= i + 1;
  }
  return c;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InternalError("exact_div: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw InternalError("exact_div: " + num.str() + " is not divisible by " + den.str());
  }
  return q;
}

std::uint64_t saturate_u64(const BigInt& x) {
  if (x < 0) return 0;
  if (x > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(x);
}

}  // namespace ghwlab
