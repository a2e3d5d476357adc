#pragma once

#include <string>
#include <vector>

#include "ghwlab/field.hpp"

namespace ghwlab {

// Polynomial with coefficients in F_Q (as encodings), low to high. The zero
// polynomial has no coefficients; nonzero polynomials have a nonzero leading
// coefficient.
struct Polynomial {
  std::vector<FieldSpec::Code> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

void normalize(Polynomial& a);
Polynomial poly_mul(const FieldSpec& F, const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const FieldSpec& F, const Polynomial& a, const Polynomial& b);
// a = quot * b + rem with deg rem < deg b. b must be nonzero.
void poly_divmod(const FieldSpec& F, const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem);
FieldSpec::Code poly_eval(const FieldSpec& F, const Polynomial& a, FieldSpec::Code x);
// x^n - 1
Polynomial x_pow_minus_one(const FieldSpec& F, unsigned n);
bool all_coefficients_in_base(const FieldSpec& F, const Polynomial& a);
// e.g. "x^3 + x + 1"; coefficients formatted as F_q elements.
std::string poly_to_string(const FieldSpec& F, const Polynomial& a);

}  // namespace ghwlab
