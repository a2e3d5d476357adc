#include "ghwlab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ghwlab/error.hpp"

namespace ghwlab {

void normalize(Polynomial& a) {
  while (!a.coeffs.empty() && a.coeffs.back() == 0) a.coeffs.pop_back();
}

Polynomial poly_mul(const FieldSpec& F, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Polynomial r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] = F.add(r.coeffs[i + j], F.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  normalize(r);
  return r;
}

Polynomial poly_add(const FieldSpec& F, const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const auto x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const auto y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    r.coeffs[i] = F.add(x, y);
  }
  normalize(r);
  return r;
}

void poly_divmod(const FieldSpec& F, const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem) {
  if (b.is_zero()) throw InvalidArgument("poly_divmod: division by zero polynomial");
  rem = a;
  normalize(rem);
  quot.coeffs.clear();
  const int db = b.degree();
  if (rem.degree() < db) return;
  quot.coeffs.assign(rem.degree() - db + 1, 0);
  const auto lead_inv = F.inv(b.coeffs.back());
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const auto c = F.mul(rem.coeffs.back(), lead_inv);
    quot.coeffs[shift] = c;
    for (int i = 0; i <= db; ++i) {
      rem.coeffs[shift + i] = F.sub(rem.coeffs[shift + i], F.mul(c, b.coeffs[i]));
    }
    normalize(rem);
  }
  normalize(quot);
}

FieldSpec::Code poly_eval(const FieldSpec& F, const Polynomial& a, FieldSpec::Code x) {
  FieldSpec::Code acc = 0;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.coeffs[i]);
  return acc;
}

Polynomial x_pow_minus_one(const FieldSpec& F, unsigned n) {
  Polynomial r;
  r.coeffs.assign(n + 1, 0);
  r.coeffs[0] = F.neg(1);
  r.coeffs[n] = F.add(r.coeffs[n], 1);
  normalize(r);
  return r;
}

bool all_coefficients_in_base(const FieldSpec& F, const Polynomial& a) {
  for (auto c : a.coeffs) {
    if (!F.in_base_field(c)) return false;
  }
  return true;
}

std::string poly_to_string(const FieldSpec& F, const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    const auto c = a.coeffs[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const bool show_coeff = i == 0 || c != 1;
    if (show_coeff) os << (F.in_base_field(c) ? F.format_base(c) : F.format(c));
    if (i >= 1) os << (show_coeff ? "*x" : "x");
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace ghwlab
