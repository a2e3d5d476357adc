#include "ghwlab/cyclotomy.hpp"

#include <algorithm>
#include <sstream>

#include "ghwlab/error.hpp"
#include "ghwlab/numtheory.hpp"

namespace ghwlab {

CyclotomicInteger::CyclotomicInteger(std::uint32_t p) : c_(p, 0) {
  if (p < 2) throw InvalidArgument("CyclotomicInteger: p must be at least 2");
}

CyclotomicInteger CyclotomicInteger::integer(std::uint32_t p, std::int64_t value) {
  CyclotomicInteger z(p);
  z.c_[0] = value;
  return z;
}

CyclotomicInteger CyclotomicInteger::zeta_power(std::uint32_t p, std::uint64_t k) {
  CyclotomicInteger z(p);
  z.c_[k % p] = 1;
  z.canonicalize();
  return z;
}

void CyclotomicInteger::canonicalize() {
  const std::int64_t top = c_.back();
  if (top == 0) return;
  for (auto& c : c_) c -= top;
}

bool CyclotomicInteger::is_rational() const {
  for (std::size_t j = 1; j + 1 < c_.size(); ++j) {
    if (c_[j] != 0) return false;
  }
  return c_.back() == 0;
}

std::int64_t CyclotomicInteger::rational_value() const {
  if (!is_rational()) throw InternalError("CyclotomicInteger " + to_string() + " is not a rational integer");
  return c_[0];
}

CyclotomicInteger& CyclotomicInteger::operator+=(const CyclotomicInteger& o) {
  if (o.p() != p()) throw InvalidArgument("CyclotomicInteger: mismatched p");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  canonicalize();
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator-=(const CyclotomicInteger& o) {
  if (o.p() != p()) throw InvalidArgument("CyclotomicInteger: mismatched p");
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  canonicalize();
  return *this;
}

CyclotomicInteger& CyclotomicInteger::operator*=(std::int64_t k) {
  for (auto& c : c_) c *= k;
  return *this;
}

CyclotomicInteger operator*(const CyclotomicInteger& a, const CyclotomicInteger& b) {
  if (a.p() != b.p()) throw InvalidArgument("CyclotomicInteger: mismatched p");
  const std::size_t p = a.p();
  CyclotomicInteger r(a.p());
  for (std::size_t i = 0; i < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < p; ++j) r.c_[(i + j) % p] += a.c_[i] * b.c_[j];
  }
  r.canonicalize();
  return r;
}

std::string CyclotomicInteger::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    if (!first) os << (c_[j] > 0 ? " + " : " - ");
    else if (c_[j] < 0) os << "-";
    first = false;
    const auto mag = c_[j] < 0 ? -c_[j] : c_[j];
    if (j == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "z^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicCoset cyclotomic_coset(std::int64_t a, std::uint64_t multiplier, std::uint64_t modulus) {
  if (modulus == 0) throw InvalidArgument("cyclotomic_coset: zero modulus");
  CyclotomicCoset c;
  c.modulus = modulus;
  c.multiplier = multiplier % modulus;
  std::uint64_t x = static_cast<std::uint64_t>(mod(a, static_cast<std::int64_t>(modulus)));
  const std::uint64_t start = x;
  do {
    c.members.push_back(x);
    x = x * c.multiplier % modulus;
  } while (x != start && c.members.size() <= modulus);
  std::sort(c.members.begin(), c.members.end());
  c.representative = c.members.front();
  return c;
}

MinimalPolynomial minimal_poly(const FieldSpec& F, std::int64_t a) {
  const std::uint64_t n = F.group_order();
  MinimalPolynomial out;
  out.exponent = static_cast<std::uint64_t>(mod(a, static_cast<std::int64_t>(n)));
  const auto coset = cyclotomic_coset(-static_cast<std::int64_t>(out.exponent), F.q(), n);
  Polynomial prod{{1}};
  for (auto e : coset.members) {
    Polynomial lin{{F.neg(F.antilog(e)), 1}};
    prod = poly_mul(F, prod, lin);
  }
  if (!all_coefficients_in_base(F, prod)) {
    throw InternalError("minimal_poly: coefficient outside F_q for a = " + std::to_string(a));
  }
  out.poly = std::move(prod);
  return out;
}

CyclotomyClass cyclotomy_class(const FieldSpec& F, std::uint32_t N, std::uint32_t i) {
  if (N == 0 || F.group_order() % N != 0) {
    throw InvalidArgument("cyclotomy class: N = " + std::to_string(N) + " does not divide Q-1");
  }
  if (i >= N) throw InvalidArgument("cyclotomy class: index out of range");
  return CyclotomyClass{&F, N, i};
}

std::vector<FieldSpec::Code> cyclotomy_class_members(const FieldSpec& F, std::uint32_t N, std::uint32_t i) {
  cyclotomy_class(F, N, i);
  std::vector<FieldSpec::Code> out;
  out.reserve(F.group_order() / N);
  for (std::uint64_t k = i; k < F.group_order(); k += N) out.push_back(F.antilog(k));
  return out;
}

CyclotomicInteger gauss_period_bruteforce(const FieldSpec& F, std::uint32_t N, FieldSpec::Code a) {
  cyclotomy_class(F, N, 0);
  CyclotomicInteger eta(F.p());
  if (a == 0) {
    eta.accumulate(0, F.group_order() / N);
  } else {
    for (std::uint64_t k = 0; k < F.group_order(); k += N) {
      eta.accumulate(F.trace(F.mul(a, F.antilog(k)), TraceTarget::kPrime), 1);
    }
  }
  eta.canonicalize();
  return eta;
}

GaussPeriodTable::GaussPeriodTable(const FieldSpec& F, std::uint32_t N)
    : field_(&F), N_(N), zero_(gauss_period_bruteforce(F, N, 0)) {
  by_class_.reserve(N);
  for (std::uint32_t i = 0; i < N; ++i) by_class_.push_back(gauss_period_bruteforce(F, N, F.antilog(i)));
}

const CyclotomicInteger& GaussPeriodTable::at(FieldSpec::Code a) const {
  if (a == 0) return zero_;
  return by_class_[field_->log(a) % N_];
}

std::string QuadraticGaussSum::to_string() const {
  std::ostringstream os;
  os << (sign < 0 ? "-" : "+");
  if (imaginary) os << "i*";
  os << "sqrt(" << q << ")";
  return os.str();
}

QuadraticGaussSum quadratic_gauss_sum(std::uint32_t p, unsigned s) {
  if (p == 2 || !is_prime(p)) throw InvalidArgument("quadratic_gauss_sum: p must be an odd prime");
  if (s == 0) throw InvalidArgument("quadratic_gauss_sum: s must be positive");
  QuadraticGaussSum g;
  g.q = ipow(p, s);
  g.sign = (s - 1) % 2 == 0 ? 1 : -1;
  if (p % 4 == 3) {
    // (sqrt(-1))^s = 1, i, -1, -i for s = 0, 1, 2, 3 mod 4.
    if (s % 4 == 2 || s % 4 == 3) g.sign = -g.sign;
    g.imaginary = s % 2 == 1;
  }
  return g;
}

CyclotomicInteger quadratic_gauss_sum_bruteforce(const FieldSpec& F) {
  if (F.p() == 2) throw InvalidArgument("quadratic Gauss sum needs odd characteristic");
  CyclotomicInteger g(F.p());
  for (std::uint64_t k = 0; k < F.group_order(); ++k) {
    const std::int64_t chi = k % 2 == 0 ? 1 : -1;
    g.accumulate(F.trace(F.antilog(k), TraceTarget::kPrime), chi);
  }
  g.canonicalize();
  return g;
}

unsigned gauss_sum_sign_j(const FieldSpec& F) {
  if (F.p() == 2) throw InvalidArgument("gauss_sum_sign_j: q must be odd");
  if (F.degree() % 2 != 0) {
    throw InvalidArgument("gauss_sum_sign_j: G(chi) is not rational when s*m is odd");
  }
  const auto g = quadratic_gauss_sum(F.p(), F.degree());
  if (g.imaginary) throw InternalError("gauss_sum_sign_j: imaginary value for even degree");
  return g.sign > 0 ? 0 : 1;
}

}  // namespace ghwlab
