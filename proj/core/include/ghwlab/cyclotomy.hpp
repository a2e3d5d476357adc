#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ghwlab/field.hpp"
#include "ghwlab/poly.hpp"

namespace ghwlab {

// Exact element sum_j c_j zeta_p^j of Z[zeta_p]. The canonical form has
// c_{p-1} = 0, obtained by subtracting c_{p-1} * (1 + zeta + ... + zeta^(p-1)).
class CyclotomicInteger {
 public:
  explicit CyclotomicInteger(std::uint32_t p);
  static CyclotomicInteger integer(std::uint32_t p, std::int64_t value);
  static CyclotomicInteger zeta_power(std::uint32_t p, std::uint64_t k);

  std::uint32_t p() const noexcept { return static_cast<std::uint32_t>(c_.size()); }
  const std::vector<std::int64_t>& coefficients() const noexcept { return c_; }

  // Adds `count` copies of zeta^k without canonicalizing; call canonicalize()
  // after a batch.
  void accumulate(std::uint64_t k, std::int64_t count) { c_[k % c_.size()] += count; }
  void canonicalize();

  bool is_rational() const;
  // Throws InternalError unless is_rational().
  std::int64_t rational_value() const;

  CyclotomicInteger& operator+=(const CyclotomicInteger& o);
  CyclotomicInteger& operator-=(const CyclotomicInteger& o);
  CyclotomicInteger& operator*=(std::int64_t k);
  friend CyclotomicInteger operator+(CyclotomicInteger a, const CyclotomicInteger& b) { return a += b; }
  friend CyclotomicInteger operator-(CyclotomicInteger a, const CyclotomicInteger& b) { return a -= b; }
  friend CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b);
  friend bool operator==(const CyclotomicInteger&, const CyclotomicInteger&) = default;

  std::string to_string() const;

 private:
  std::vector<std::int64_t> c_;
};

// Orbit of `representative` under multiplication by `multiplier` modulo
// `modulus`. `representative` is the smallest member.
struct CyclotomicCoset {
  std::uint64_t modulus = 0;
  std::uint64_t multiplier = 0;
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> members;  // ascending

  std::size_t size() const { return members.size(); }
  friend bool operator==(const CyclotomicCoset&, const CyclotomicCoset&) = default;
};

CyclotomicCoset cyclotomic_coset(std::int64_t a, std::uint64_t multiplier, std::uint64_t modulus);

// Minimal polynomial of gamma^(-a) over F_q.
struct MinimalPolynomial {
  std::uint64_t exponent = 0;  // a mod Q-1
  Polynomial poly;
  int degree() const { return poly.degree(); }
};

MinimalPolynomial minimal_poly(const FieldSpec& F, std::int64_t a);

// C_i^{(N,Q)} = gamma^i <gamma^N>.
struct CyclotomyClass {
  const FieldSpec* field = nullptr;
  std::uint32_t N = 1;
  std::uint32_t index = 0;

  bool contains(FieldSpec::Code x) const { return x != 0 && field->log(x) % N == index; }
  std::size_t size() const { return field->group_order() / N; }
};

CyclotomyClass cyclotomy_class(const FieldSpec& F, std::uint32_t N, std::uint32_t i);
std::vector<FieldSpec::Code> cyclotomy_class_members(const FieldSpec& F, std::uint32_t N, std::uint32_t i);

// eta_a^{(N,Q)} = sum_{x in C_0} zeta_p^{Tr_{Q->p}(a x)}, tallied exactly.
CyclotomicInteger gauss_period_bruteforce(const FieldSpec& F, std::uint32_t N, FieldSpec::Code a);

// All Gauss periods of order N: eta at zero and at gamma^i for 0 <= i < N.
// Lookup by element costs one discrete log.
class GaussPeriodTable {
 public:
  GaussPeriodTable(const FieldSpec& F, std::uint32_t N);
  std::uint32_t N() const noexcept { return N_; }
  const CyclotomicInteger& at(FieldSpec::Code a) const;
  const CyclotomicInteger& at_zero() const noexcept { return zero_; }
  const CyclotomicInteger& at_class(std::uint32_t i) const { return by_class_.at(i); }

 private:
  const FieldSpec* field_;
  std::uint32_t N_;
  CyclotomicInteger zero_;
  std::vector<CyclotomicInteger> by_class_;
};

// Symbolic value sign * (sqrt(-1) if imaginary) * sqrt(q) of the quadratic
// Gauss sum of F_q.
struct QuadraticGaussSum {
  int sign = 1;
  bool imaginary = false;
  std::uint64_t q = 0;

  friend bool operator==(const QuadraticGaussSum&, const QuadraticGaussSum&) = default;
  std::string to_string() const;
};

// Closed form for q = p^s, p odd. Throws InvalidArgument for p = 2.
QuadraticGaussSum quadratic_gauss_sum(std::uint32_t p, unsigned s);

// G(chi) = sum_x chi(x) psi(x) over the whole field F, evaluated exactly.
CyclotomicInteger quadratic_gauss_sum_bruteforce(const FieldSpec& F);

// j in {0,1} with G(chi) = (-1)^j q^(m/2) for the quadratic character of F_Q.
// Requires p odd and s*m even.
unsigned gauss_sum_sign_j(const FieldSpec& F);

}  // namespace ghwlab
