#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ghwlab {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

// Construction knobs for build_field. The default picks the lexicographically
// smallest irreducible polynomial and the smallest primitive element; the
// rank fields select the next ones in the same order, which is how
// alternative constructions of the same field are obtained.
struct FieldOptions {
  std::uint64_t table_bound = std::uint64_t{1} << 20;
  unsigned polynomial_rank = 0;
  unsigned primitive_rank = 0;
};

enum class TraceTarget {
  kBase,   // Tr_{Q -> q}
  kPrime,  // Tr_{Q -> p}
};

class FieldElement;

// The tower F_p ⊂ F_q ⊂ F_Q with q = p^s and Q = q^m, realized as
// F_p[x]/(f) with deg f = s*m.
//
// Elements are encoded as 32-bit integers sum_i c_i p^i, where c_i is the
// coefficient of x^i. Prime-field elements are therefore the encodings
// 0..p-1. Multiplication goes through log/antilog tables, addition through a
// Zech table, so both are O(1).
//
// A FieldSpec is immutable after construction and may be shared across
// threads.
class FieldSpec {
 public:
  using Code = std::uint32_t;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  unsigned m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t order() const noexcept { return order_; }
  std::uint32_t group_order() const noexcept { return order_ - 1; }
  unsigned degree() const noexcept { return s_ * m_; }

  // Monic defining polynomial over F_p, coefficients low to high.
  const std::vector<std::uint32_t>& defining_polynomial() const noexcept { return poly_; }
  Code primitive_code() const noexcept { return gamma_; }

  FieldElement element(Code code) const;
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gamma() const;
  // gamma^k for any integer k (reduced mod Q-1).
  FieldElement gamma_pow(std::int64_t k) const;

  // Code-level arithmetic. Inputs must be valid encodings (< order()).
  Code add(Code a, Code b) const noexcept;
  Code neg(Code a) const noexcept;
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept;
  Code inv(Code a) const;  // throws InvalidArgument on zero
  Code pow(Code a, std::uint64_t e) const noexcept;
  Code antilog(std::uint64_t k) const noexcept { return exp_[k % group_order()]; }
  // Discrete log base gamma in [0, Q-2]; throws InvalidArgument on zero.
  std::uint32_t log(Code a) const;
  Code trace(Code a, TraceTarget target) const noexcept;

  // Subfield F_q = <omega> ∪ {0}, omega = gamma^((Q-1)/(q-1)).
  bool in_base_field(Code a) const noexcept;
  // Label of an F_q element: 0 for zero, 1 + log_omega(a) otherwise.
  // Throws InvalidArgument when a is not in F_q.
  std::uint32_t base_label(Code a) const;
  Code base_element(std::uint32_t label) const;

  // Human-readable element: an integer for prime-field elements, "g^k"
  // otherwise. Base-field elements of non-prime q print as "w^k".
  std::string format(Code a) const;
  std::string format_base(Code a) const;
  std::string polynomial_string() const;

 private:
  friend FieldPtr build_field(std::uint32_t p, unsigned s, unsigned m, const FieldOptions& opts);
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  unsigned s_ = 0;
  unsigned m_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t order_ = 0;
  std::vector<std::uint32_t> poly_;
  Code gamma_ = 0;
  Code minus_one_ = 0;
  std::vector<Code> exp_;            // exp_[k] = gamma^k, k in [0, Q-2]
  std::vector<std::uint32_t> log_;   // log_[code], undefined at 0
  std::vector<std::int64_t> zech_;   // gamma^zech_[k] = 1 + gamma^k, -1 when that is zero
};

// Value type pairing an encoding with its owning field. The field must
// outlive the element.
class FieldElement {
 public:
  using Code = FieldSpec::Code;

  FieldElement() = default;
  FieldElement(const FieldSpec* spec, Code code) : spec_(spec), code_(code) {}

  const FieldSpec& spec() const { return *spec_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  std::uint32_t log() const { return spec_->log(code_); }

  FieldElement operator+(const FieldElement& o) const { return {spec_, spec_->add(code_, o.code_)}; }
  FieldElement operator-(const FieldElement& o) const { return {spec_, spec_->sub(code_, o.code_)}; }
  FieldElement operator-() const { return {spec_, spec_->neg(code_)}; }
  FieldElement operator*(const FieldElement& o) const { return {spec_, spec_->mul(code_, o.code_)}; }
  FieldElement operator/(const FieldElement& o) const { return {spec_, spec_->mul(code_, spec_->inv(o.code_))}; }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement pow(std::uint64_t e) const { return {spec_, spec_->pow(code_, e)}; }
  FieldElement inverse() const { return {spec_, spec_->inv(code_)}; }
  FieldElement trace(TraceTarget target) const { return {spec_, spec_->trace(code_, target)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.spec_ == b.spec_ && a.code_ == b.code_;
  }

 private:
  const FieldSpec* spec_ = nullptr;
  Code code_ = 0;
};

// Builds F_{p^(s*m)} with deterministic choices of defining polynomial and
// primitive element. Throws InvalidArgument for non-prime p, zero degrees,
// or an order above opts.table_bound.
FieldPtr build_field(std::uint32_t p, unsigned s, unsigned m, const FieldOptions& opts = {});

// Trace of x down to the requested level, as an element of the big field.
FieldElement trace(const FieldElement& x, TraceTarget target);

// Discrete log base gamma; throws InvalidArgument for zero.
std::uint32_t discrete_log(const FieldElement& x);

// Monic irreducibility over F_p by Ben-Or's test; coefficients low to high.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace ghwlab
