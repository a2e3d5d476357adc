#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghwlab/field.hpp"

namespace ghwlab {

// Table-driven arithmetic on the subfield F_q of a FieldSpec, on labels
// 0..q-1 (see FieldSpec::base_label). Label 0 is zero and label 1 is one.
class SmallField {
 public:
  using Label = std::uint8_t;

  explicit SmallField(const FieldSpec& big);

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t p() const noexcept { return p_; }
  Label add(Label a, Label b) const noexcept { return add_[a * q_ + b]; }
  Label sub(Label a, Label b) const noexcept { return add_[a * q_ + neg_[b]]; }
  Label mul(Label a, Label b) const noexcept { return mul_[a * q_ + b]; }
  Label neg(Label a) const noexcept { return neg_[a]; }
  Label inv(Label a) const noexcept { return inv_[a]; }
  // Tr_{q->p} of the element, as an integer in [0, p).
  std::uint32_t prime_trace(Label a) const noexcept { return prime_trace_[a]; }

 private:
  std::uint32_t q_;
  std::uint32_t p_;
  std::vector<Label> add_, mul_, neg_, inv_;
  std::vector<std::uint32_t> prime_trace_;
};

// Dense row-major matrix over F_q (labels).
struct FqMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SmallField::Label> data;

  FqMatrix() = default;
  FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  SmallField::Label& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  SmallField::Label at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<SmallField::Label> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const SmallField::Label> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;
};

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot columns.
std::vector<std::size_t> rref(const SmallField& F, FqMatrix& m);

std::size_t rank(const SmallField& F, FqMatrix m);

// Basis of {x : m x^T = 0}, in RREF.
FqMatrix nullspace(const SmallField& F, const FqMatrix& m);

// F_Q viewed as an m-dimensional F_q-space with basis 1, theta, ..., theta^(m-1).
// Coordinates come from the trace-dual basis: c_l = Tr_{Q->q}(x * dual_l).
class SubfieldBasis {
 public:
  SubfieldBasis(const FieldSpec& big, const SmallField& small, FieldSpec::Code theta);

  unsigned dimension() const noexcept { return m_; }
  FieldSpec::Code theta() const noexcept { return theta_; }
  FieldSpec::Code basis(unsigned l) const { return basis_[l]; }
  FieldSpec::Code dual(unsigned l) const { return dual_[l]; }

  void coordinates(FieldSpec::Code x, std::span<SmallField::Label> out) const;
  FieldSpec::Code element(std::span<const SmallField::Label> coords) const;

 private:
  const FieldSpec* big_;
  unsigned m_;
  FieldSpec::Code theta_;
  std::vector<FieldSpec::Code> basis_;
  std::vector<FieldSpec::Code> dual_;
};

}  // namespace ghwlab
