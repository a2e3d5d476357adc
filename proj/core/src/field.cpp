#include "ghwlab/field.hpp"

#include <algorithm>
#include <sstream>

#include "ghwlab/error.hpp"
#include "ghwlab/numtheory.hpp"

namespace ghwlab {
namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low to high

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// a mod f, f monic or at least with invertible leading coefficient.
Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() > df) {
    const std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - c} * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly decode(std::uint32_t code, std::uint32_t p, unsigned d) {
  Poly out(d, 0);
  for (unsigned i = 0; i < d; ++i) {
    out[i] = code % p;
    code /= p;
  }
  trim(out);
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (p == 2) return a ^ b;
  std::uint32_t out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // x^(p^i) - x shares no factor with f for all i <= d/2.
  Poly h = poly_powmod(Poly{0, 1}, p, f, p);
  for (std::size_t i = 1; i <= d / 2; ++i) {
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
    h = poly_powmod(h, p, f, p);
  }
  return true;
}

FieldPtr build_field(std::uint32_t p, unsigned s, unsigned m, const FieldOptions& opts) {
  if (!is_prime(p)) throw InvalidArgument("build_field: p = " + std::to_string(p) + " is not prime");
  if (s == 0 || m == 0) throw InvalidArgument("build_field: degrees s and m must be positive");
  const unsigned d = s * m;
  std::uint64_t order = 1;
  for (unsigned i = 0; i < d; ++i) {
    order *= p;
    if (order > opts.table_bound) {
      throw InvalidArgument("build_field: field order " + std::to_string(p) + "^" + std::to_string(d) +
                            " exceeds table bound " + std::to_string(opts.table_bound));
    }
  }

  FieldPtr holder(new FieldSpec());
  auto& f = const_cast<FieldSpec&>(*holder);
  f.p_ = p;
  f.s_ = s;
  f.m_ = m;
  f.q_ = static_cast<std::uint32_t>(ipow(p, s));
  f.order_ = static_cast<std::uint32_t>(order);

  // Monic degree-d polynomials ordered by (c_{d-1}, ..., c_0) lexicographically,
  // i.e. by the integer whose base-p digits are the non-leading coefficients.
  const std::uint64_t candidates = order;  // p^d choices of lower coefficients
  unsigned found = 0;
  bool ok = false;
  for (std::uint64_t c = 0; c < candidates; ++c) {
    Poly cand = decode(static_cast<std::uint32_t>(c), p, d);
    cand.resize(d + 1, 0);
    cand[d] = 1;
    if (!is_irreducible_mod_p(cand, p)) continue;
    if (found++ == opts.polynomial_rank) {
      f.poly_ = cand;
      ok = true;
      break;
    }
  }
  if (!ok) {
    throw InvalidArgument("build_field: fewer than " + std::to_string(opts.polynomial_rank + 1) +
                          " irreducible polynomials of degree " + std::to_string(d));
  }

  const std::uint64_t group = order - 1;
  const auto primes = prime_divisors(group);
  found = 0;
  ok = false;
  for (std::uint64_t c = 1; c < order; ++c) {
    const Poly x = decode(static_cast<std::uint32_t>(c), p, d);
    bool primitive = true;
    for (auto ell : primes) {
      const Poly y = poly_powmod(x, group / ell, f.poly_, p);
      if (y.size() == 1 && y[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (!primitive) continue;
    if (found++ == opts.primitive_rank) {
      f.gamma_ = static_cast<std::uint32_t>(c);
      ok = true;
      break;
    }
  }
  if (!ok) throw InvalidArgument("build_field: primitive_rank out of range");

  f.exp_.assign(group, 0);
  f.log_.assign(order, 0);
  const Poly g = decode(f.gamma_, p, d);
  Poly cur{1};
  for (std::uint64_t k = 0; k < group; ++k) {
    const std::uint32_t code = encode(cur, p);
    f.exp_[k] = code;
    f.log_[code] = static_cast<std::uint32_t>(k);
    cur = poly_mulmod(cur, g, f.poly_, p);
  }
  if (!(cur.size() == 1 && cur[0] == 1)) throw InternalError("build_field: gamma^(Q-1) != 1");

  f.zech_.assign(group, -1);
  for (std::uint64_t k = 0; k < group; ++k) {
    const std::uint32_t sum = add_digits(1, f.exp_[k], p);
    f.zech_[k] = sum == 0 ? -1 : static_cast<std::int64_t>(f.log_[sum]);
  }
  f.minus_one_ = p == 2 ? 1 : p - 1;
  return holder;
}

FieldElement FieldSpec::element(Code code) const {
  if (code >= order_) throw InvalidArgument("element: encoding out of range");
  return {this, code};
}
FieldElement FieldSpec::zero() const { return {this, 0}; }
FieldElement FieldSpec::one() const { return {this, 1}; }
FieldElement FieldSpec::gamma() const { return {this, gamma_}; }
FieldElement FieldSpec::gamma_pow(std::int64_t k) const {
  return {this, exp_[static_cast<std::size_t>(mod(k, group_order()))]};
}

FieldSpec::Code FieldSpec::add(Code a, Code b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint32_t diff = lb >= la ? lb - la : lb + group_order() - la;
  const std::int64_t z = zech_[diff];
  if (z < 0) return 0;
  return exp_[(la + static_cast<std::uint64_t>(z)) % group_order()];
}

FieldSpec::Code FieldSpec::neg(Code a) const noexcept {
  if (a == 0 || p_ == 2) return a;
  return mul(a, minus_one_);
}

FieldSpec::Code FieldSpec::mul(Code a, Code b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % group_order()];
}

FieldSpec::Code FieldSpec::inv(Code a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return exp_[(group_order() - log_[a]) % group_order()];
}

FieldSpec::Code FieldSpec::pow(Code a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[static_cast<std::size_t>((std::uint64_t{log_[a]} * (e % group_order())) % group_order())];
}

std::uint32_t FieldSpec::log(Code a) const {
  if (a == 0) throw InvalidArgument("discrete log of zero");
  return log_[a];
}

FieldSpec::Code FieldSpec::trace(Code a, TraceTarget target) const noexcept {
  if (a == 0) return 0;
  const unsigned terms = target == TraceTarget::kBase ? m_ : s_ * m_;
  const std::uint64_t base = target == TraceTarget::kBase ? q_ : p_;
  const std::uint64_t n = group_order();
  std::uint64_t e = log_[a];
  Code acc = 0;
  for (unsigned i = 0; i < terms; ++i) {
    acc = add(acc, exp_[e]);
    e = e * base % n;
  }
  return acc;
}

bool FieldSpec::in_base_field(Code a) const noexcept {
  if (a == 0) return true;
  return log_[a] % (group_order() / (q_ - 1)) == 0;
}

std::uint32_t FieldSpec::base_label(Code a) const {
  if (a == 0) return 0;
  const std::uint32_t step = group_order() / (q_ - 1);
  if (log_[a] % step != 0) throw InvalidArgument("base_label: element not in F_q");
  return 1 + log_[a] / step;
}

FieldSpec::Code FieldSpec::base_element(std::uint32_t label) const {
  if (label >= q_) throw InvalidArgument("base_element: label out of range");
  if (label == 0) return 0;
  const std::uint64_t step = group_order() / (q_ - 1);
  return exp_[(label - 1) * step];
}

std::string FieldSpec::format(Code a) const {
  if (a < p_) return std::to_string(a);
  return "g^" + std::to_string(log_[a]);
}

std::string FieldSpec::format_base(Code a) const {
  if (a < p_) return std::to_string(a);
  return "w^" + std::to_string(base_label(a) - 1);
}

std::string FieldSpec::polynomial_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = poly_.size(); i-- > 0;) {
    if (poly_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || poly_[i] != 1) os << poly_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

FieldElement trace(const FieldElement& x, TraceTarget target) { return x.trace(target); }

std::uint32_t discrete_log(const FieldElement& x) { return x.log(); }

}  // namespace ghwlab
