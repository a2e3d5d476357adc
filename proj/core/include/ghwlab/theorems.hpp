#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghwlab/code.hpp"
#include "ghwlab/numtheory.hpp"

namespace ghwlab {

// f(l) = q^l - 1                                       for l <= m/2,
//        (q^l - 1)/2 + (q^(m/2) - q^(l - m/2))/2       for l >  m/2 (m even).
BigInt f_of_l(std::uint64_t q, unsigned m, unsigned l);

// Nonincreasing tuple (l_1 >= ... >= l_t) with entries in [0, m].
using Profile = std::vector<unsigned>;

bool is_profile(const Profile& l, unsigned m);
unsigned profile_sum(const Profile& l);

// a ⊐ b: at the first index where they differ, a is larger.
bool profile_dominates(const Profile& a, const Profile& b);

// All profiles of length t over [0, m] with the given sum, ⊐-descending.
std::vector<Profile> profiles_with_sum(unsigned t, unsigned m, unsigned sum);

BigInt profile_f_sum(std::uint64_t q, unsigned m, const Profile& l);

// S_{i,j}: raises l_i and lowers l_j by one (1-based, i < j). Requires
// l_i < l_{i-1} (l_0 = m), l_j >= 1 and l_j - 1 >= l_{j+1}, so that the
// result is again a profile; throws InvalidArgument otherwise.
Profile exchange_step(const Profile& l, unsigned i, unsigned j, unsigned m);

struct ProfileMax {
  Profile profile;
  BigInt value;
  unsigned s = 0;
};

// Optimal (v_1, ..., v_t) for e = t, N = 1, with value sum_h q^(v_h).
// Requires 1 <= t <= q - 1 and 1 <= r <= tm.
ProfileMax profile_max_N1_et(unsigned t, unsigned m, std::uint64_t q, unsigned r);

// Optimal (u_1, ..., u_t) with sum tm - r for N = 2, with value sum_h f(u_h).
// Requires q odd, m even, 1 <= r <= tm.
ProfileMax profile_max_N2(unsigned t, unsigned m, std::uint64_t q, unsigned r);

// Optimal (w_1, ..., w_e) for e > t, N = 1, with value sum_h q^(w_h).
// Requires e > t >= 1, e <= q - 1 and 1 <= r <= tm.
ProfileMax profile_max_theorem2(std::uint64_t e, unsigned t, unsigned m, std::uint64_t q, unsigned r);

enum class Formula { kTheorem1i, kTheorem1ii, kTheorem2 };

// "theorem1i", "theorem1ii", "theorem2"
std::string to_string(Formula f);

// The closed-form inputs; everything the formulas depend on.
struct FormulaInputs {
  std::uint64_t q = 0;
  unsigned m = 0;
  std::uint64_t e = 0;
  unsigned t = 0;
  std::uint64_t delta = 0;
  std::uint64_t N = 0;
  bool arithmetic_progression = false;

  static FormulaInputs of(const CyclicCode& code);
};

struct FormulaValue {
  Formula formula;
  unsigned r = 0;
  unsigned s = 0;
  std::string branch;       // short branch label
  std::string explanation;  // the inequality that selected the branch
  BigInt d;
};

// e = t, N in {1, 2}. Throws HypothesisError outside the hypotheses.
FormulaValue theorem1_formula(const FormulaInputs& in, unsigned r);
FormulaValue theorem1_formula(const CyclicCode& code, unsigned r);

// e > t >= 1, N = 1, Delta an arithmetic progression mod e.
FormulaValue theorem2_formula(const FormulaInputs& in, unsigned r);
FormulaValue theorem2_formula(const CyclicCode& code, unsigned r);

// The formula whose hypotheses hold, if any. `reason` receives a short
// explanation when none applies.
std::optional<Formula> applicable_formula(const FormulaInputs& in, std::string* reason = nullptr);

FormulaValue evaluate_formula(Formula f, const FormulaInputs& in, unsigned r);

// True when the residues Delta_i mod e, as a set, are {c, c+d, ..., c+(t-1)d}
// mod e for some c and d.
bool is_arithmetic_progression(const std::vector<std::int64_t>& delta, std::uint64_t e);

// Row h-t-1 holds lambda_{h,1..t} with y_h = sum_i lambda_{h,i} y_i for
// t < h <= e, where y_h = sum_j (g beta_j)^h b_j. Empty when e = t.
// Throws InternalError if the t x t transform is singular.
std::vector<std::vector<FieldSpec::Code>> lambda_matrix(const CyclicCode& code);

}  // namespace ghwlab
