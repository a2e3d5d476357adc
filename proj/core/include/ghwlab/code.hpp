#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/error.hpp"
#include "ghwlab/field.hpp"
#include "ghwlab/fq.hpp"
#include "ghwlab/poly.hpp"

namespace ghwlab {

// The parameter tuple (q = p^s, m, e, t, a, Delta) of a code in the family.
struct CodeParams {
  std::uint32_t p = 2;
  unsigned s = 1;
  unsigned m = 1;
  std::uint64_t e = 1;
  unsigned t = 1;
  std::int64_t a = 1;
  std::vector<std::int64_t> delta;

  // {"p":..,"s":..,"m":..,"e":..,"t":..,"a":..,"delta":[..]} with a reduced
  // mod Q-1 and each delta reduced mod e. Used as the scan key.
  std::string key() const;
  std::uint64_t q() const;
  std::uint64_t Q() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

// Reduces a mod Q-1 and delta mod e, in place.
void canonicalize(CodeParams& params);

enum class Assumption {
  kEDividesGroupOrder,  // i)   e | Q-1
  kANonzero,            // i)   a != 0 mod Q-1
  kERange,              // i)   e >= t >= 1
  kDeltaArity,          // ii)  |Delta| = t
  kDeltaDistinct,       // ii)  Delta_i distinct mod e
  kDeltaGcd,            // ii)  gcd(Delta_2-Delta_1, ..., e) = 1
  kDegree,              // iii) deg h_{a_i} = m
  kDistinctMinimalPolys,  // iii) h_{a_i} pairwise distinct
};

// "i", "ii" or "iii".
std::string assumption_group(Assumption a);
// Stable identifier such as "ii.delta_distinct".
std::string assumption_id(Assumption a);

struct Rejection {
  Assumption assumption;
  std::vector<std::int64_t> witness;
  std::string message;
};

struct Validation {
  std::vector<Rejection> rejections;
  // t = 1 leaves assumption ii's gcd over an empty list; treated as true.
  bool gcd_vacuous = false;
  // N <= sqrt(Q), the sufficient condition for iii. Advisory only.
  std::optional<bool> n_at_most_sqrt_q;

  bool ok() const { return rejections.empty(); }
};

Validation validate(const FieldSpec& F, const CodeParams& params);

struct DerivedParams {
  std::vector<std::uint64_t> a;  // a_i = a + (Q-1)/e * Delta_i mod Q-1
  std::uint64_t delta = 0;       // gcd(Q-1, a_1, ..., a_t)
  std::uint64_t n = 0;           // (Q-1)/delta
  std::uint64_t N = 0;           // gcd((Q-1)/(q-1), a*e)
  FieldSpec::Code beta = 0;      // gamma^((Q-1)/e)
  std::vector<FieldSpec::Code> beta_j;
  FieldSpec::Code g = 0;         // gamma^a
};

// Requires validated params; throws InternalError if a derived invariant
// (delta | (Q-1)/e, e*delta | N*(q-1)) fails.
DerivedParams derive(const FieldSpec& F, const CodeParams& params);

// Thrown by CyclicCode construction for parameters that fail validation.
class ParamsRejected : public Error {
 public:
  explicit ParamsRejected(Validation v);
  const Validation& validation() const noexcept { return v_; }

 private:
  Validation v_;
};

// A validated [n, tm] code of the family, realized through the trace map
// c_i(x) = Tr_{Q->q}(sum_j x_j gamma^(a_j i)).
//
// Coordinates are stored 0-based; position i holds c_i for 1 <= i < n and
// position 0 holds c_n (gamma^(a_j n) = 1, so c_0 = c_n).
//
// F_Q^t is identified with F_q^(tm) through the power basis of `theta` over
// F_q: slot j, coordinate l carries the coefficient of theta^l in x_j, at
// position j*m + l.
class CyclicCode {
 public:
  CyclicCode(FieldPtr field, CodeParams params, std::optional<FieldSpec::Code> theta = std::nullopt);

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const SmallField& base() const { return base_; }
  const SubfieldBasis& basis() const { return basis_; }
  const CodeParams& params() const { return params_; }
  const DerivedParams& derived() const { return derived_; }
  const Validation& validation() const { return validation_; }

  std::size_t length() const { return derived_.n; }
  std::size_t dimension() const { return std::size_t{params_.t} * params_.m; }

  // Codeword of x in F_Q^t; throws InvalidArgument on arity mismatch.
  std::vector<SmallField::Label> codeword(std::span<const FieldSpec::Code> x) const;
  // Codeword of the F_q-coordinate vector v (length tm), via the generator.
  std::vector<SmallField::Label> codeword_of_coords(std::span<const SmallField::Label> v) const;
  std::vector<FieldSpec::Code> to_field_vector(std::span<const SmallField::Label> v) const;
  std::vector<SmallField::Label> to_coords(std::span<const FieldSpec::Code> x) const;

  // tm x n generator matrix: row j*m + l is the codeword of theta^l in slot j.
  const FqMatrix& generator() const { return generator_; }

  const std::vector<MinimalPolynomial>& minimal_polys() const { return minimal_polys_; }
  // prod_i h_{a_i}(x); degree tm, divides x^n - 1.
  const Polynomial& parity_check_poly() const { return parity_check_; }
  // (x^n - 1) / h(x)
  const Polynomial& generator_poly() const { return generator_poly_; }

 private:
  FieldPtr field_;
  CodeParams params_;
  Validation validation_;
  DerivedParams derived_;
  SmallField base_;
  SubfieldBasis basis_;
  FqMatrix generator_;
  std::vector<MinimalPolynomial> minimal_polys_;
  Polynomial parity_check_;
  Polynomial generator_poly_;
};

Polynomial parity_check_poly(const CyclicCode& code);

// Codewords of the cyclic code <g(x)> in R_n, as label vectors, for all
// q^(tm) messages; used to cross-check against the trace representation.
std::vector<std::vector<SmallField::Label>> polynomial_code_words(const CyclicCode& code);

}  // namespace ghwlab
