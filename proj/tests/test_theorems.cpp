#include <gtest/gtest.h>

#include "ghwlab/theorems.hpp"

namespace ghwlab {
namespace {

CyclicCode make(const CodeParams& p) { return CyclicCode(build_field(p.p, p.s, p.m), p); }

std::vector<std::uint64_t> formula_hierarchy(const CyclicCode& code, Formula f) {
  const auto in = FormulaInputs::of(code);
  std::vector<std::uint64_t> d;
  for (unsigned r = 1; r <= code.dimension(); ++r) d.push_back(saturate_u64(evaluate_formula(f, in, r).d));
  return d;
}

BigInt q_sum(std::uint64_t q, const Profile& l) {
  BigInt v = 0;
  for (auto x : l) v += big_pow(q, x);
  return v;
}

TEST(FOfL, Values) {
  EXPECT_EQ(f_of_l(3, 2, 0), 0);
  EXPECT_EQ(f_of_l(3, 2, 1), 2);
  EXPECT_EQ(f_of_l(3, 2, 2), 4);
  EXPECT_EQ(f_of_l(3, 4, 3), 16);
  EXPECT_EQ(f_of_l(3, 4, 4), 40);
  EXPECT_EQ(f_of_l(9, 2, 1), 8);
  EXPECT_EQ(f_of_l(5, 2, 2), 12);
}

TEST(FOfL, IncrementsNondecreasing) {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    for (unsigned m : {2u, 4u, 6u}) {
      BigInt prev = 0;
      for (unsigned l = 1; l <= m; ++l) {
        const BigInt step = f_of_l(q, m, l) - f_of_l(q, m, l - 1);
        EXPECT_GE(step, prev) << "q=" << q << " m=" << m << " l=" << l;
        prev = step;
      }
    }
  }
}

TEST(Profiles, EnumerationAndOrder) {
  const auto ps = profiles_with_sum(3, 3, 4);
  ASSERT_FALSE(ps.empty());
  EXPECT_EQ(ps.front(), (Profile{3, 1, 0}));
  EXPECT_EQ(ps.back(), (Profile{2, 1, 1}));
  for (std::size_t i = 0; i < ps.size(); ++i) {
    EXPECT_TRUE(is_profile(ps[i], 3));
    EXPECT_EQ(profile_sum(ps[i]), 4u);
    if (i) EXPECT_TRUE(profile_dominates(ps[i - 1], ps[i]));
  }
  EXPECT_EQ(ps.size(), 3u);
  EXPECT_FALSE(is_profile({1, 2}, 3));
  EXPECT_FALSE(is_profile({4, 0}, 3));
}

TEST(Profiles, ExchangeSteps) {
  EXPECT_EQ(exchange_step({1, 1}, 1, 2, 2), (Profile{2, 0}));
  EXPECT_EQ(exchange_step({2, 2, 1}, 1, 3, 3), (Profile{3, 2, 0}));
  EXPECT_THROW(exchange_step({2, 0}, 1, 2, 2), InvalidArgument);
  EXPECT_THROW(exchange_step({2, 1}, 1, 2, 2), InvalidArgument);
  EXPECT_THROW(exchange_step({1, 1, 1}, 2, 3, 3), InvalidArgument);
}

// An exchange step never lowers either objective, so the ⊐-largest profile
// wins.
TEST(Profiles, ExchangeMonotoneExhaustive) {
  const std::uint64_t q = 3;
  for (unsigned t = 1; t <= 3; ++t) {
    for (unsigned m = 1; m <= 4; ++m) {
      for (unsigned sum = 0; sum <= t * m; ++sum) {
        const auto ps = profiles_with_sum(t, m, sum);
        for (const auto& l : ps) {
          for (unsigned i = 1; i <= t; ++i) {
            for (unsigned j = i + 1; j <= t; ++j) {
              Profile next;
              try {
                next = exchange_step(l, i, j, m);
              } catch (const InvalidArgument&) {
                continue;
              }
              EXPECT_TRUE(profile_dominates(next, l));
              EXPECT_GE(q_sum(q, next), q_sum(q, l));
              if (m % 2 == 0) EXPECT_GE(profile_f_sum(q, m, next), profile_f_sum(q, m, l));
            }
          }
        }
        if (m % 2 == 0 && !ps.empty()) {
          BigInt best = 0;
          for (const auto& l : ps) best = std::max(best, profile_f_sum(q, m, l));
          EXPECT_EQ(profile_f_sum(q, m, ps.front()), best);
        }
      }
    }
  }
}

TEST(Profiles, MaximizerExamples) {
  const auto a = profile_max_N1_et(2, 2, 3, 2);
  EXPECT_EQ(a.profile, (Profile{2, 0}));
  EXPECT_EQ(a.value, 10);
  const auto b = profile_max_N2(2, 2, 3, 1);
  EXPECT_EQ(b.profile, (Profile{2, 1}));
  EXPECT_EQ(b.value, 6);
  EXPECT_THROW(profile_max_N1_et(3, 2, 3, 1), HypothesisError);
  EXPECT_THROW(profile_max_N2(2, 2, 4, 1), HypothesisError);
  EXPECT_THROW(profile_max_theorem2(2, 2, 2, 7, 1), HypothesisError);
}

TEST(Formulas, FrozenHierarchies) {
  EXPECT_EQ(formula_hierarchy(make({2, 1, 3, 1, 1, 1, {0}}), Formula::kTheorem1i), (std::vector<std::uint64_t>{4, 6, 7}));
  EXPECT_EQ(formula_hierarchy(make({3, 1, 3, 2, 2, 1, {0, 1}}), Formula::kTheorem1i),
            (std::vector<std::uint64_t>{9, 12, 13, 22, 25, 26}));
  EXPECT_EQ(formula_hierarchy(make({3, 1, 2, 2, 2, 1, {0, 1}}), Formula::kTheorem1ii),
            (std::vector<std::uint64_t>{2, 4, 6, 8}));
  EXPECT_EQ(formula_hierarchy(make({7, 1, 2, 3, 2, 1, {0, 1}}), Formula::kTheorem2),
            (std::vector<std::uint64_t>{28, 32, 46, 48}));
}

TEST(Formulas, ApplicableFormula) {
  EXPECT_EQ(applicable_formula(FormulaInputs::of(make({2, 1, 3, 1, 1, 1, {0}}))), Formula::kTheorem1i);
  EXPECT_EQ(applicable_formula(FormulaInputs::of(make({3, 1, 2, 2, 2, 1, {0, 1}}))), Formula::kTheorem1ii);
  EXPECT_EQ(applicable_formula(FormulaInputs::of(make({7, 1, 2, 3, 2, 1, {0, 1}}))), Formula::kTheorem2);
  std::string why;
  FormulaInputs in = FormulaInputs::of(make({7, 1, 2, 3, 2, 1, {0, 1}}));
  in.arithmetic_progression = false;
  EXPECT_FALSE(applicable_formula(in, &why).has_value());
  EXPECT_FALSE(why.empty());
  EXPECT_THROW(theorem1_formula(in, 1), HypothesisError);
  EXPECT_THROW(theorem2_formula(in, 1), HypothesisError);
}

TEST(Formulas, FullRankIsLength) {
  for (const auto& p : std::vector<CodeParams>{{2, 1, 3, 1, 1, 1, {0}}, {2, 2, 2, 3, 2, 1, {0, 1}}, {3, 1, 2, 2, 2, 1, {0, 1}}}) {
    const auto code = make(p);
    const auto in = FormulaInputs::of(code);
    const auto f = applicable_formula(in);
    ASSERT_TRUE(f.has_value()) << p.key();
    EXPECT_EQ(evaluate_formula(*f, in, static_cast<unsigned>(code.dimension())).d, BigInt(code.length()));
  }
}

TEST(ArithmeticProgression, Detection) {
  EXPECT_TRUE(is_arithmetic_progression({0}, 5));
  EXPECT_TRUE(is_arithmetic_progression({0, 1}, 5));
  EXPECT_TRUE(is_arithmetic_progression({0, 2, 4}, 6));
  EXPECT_TRUE(is_arithmetic_progression({0, 3, 1}, 5));   // 0, 3, 6=1
  EXPECT_TRUE(is_arithmetic_progression({4, 0, 1}, 5));   // 4, 0, 1
  EXPECT_FALSE(is_arithmetic_progression({0, 1, 3}, 7));
}

TEST(Lambda, MatrixShapeAndNonzero) {
  const auto code = make({7, 1, 2, 3, 2, 1, {0, 1}});
  const auto L = lambda_matrix(code);
  ASSERT_EQ(L.size(), 1u);
  ASSERT_EQ(L[0].size(), 2u);
  for (auto c : L[0]) EXPECT_NE(c, 0u);
  EXPECT_TRUE(lambda_matrix(make({3, 1, 2, 2, 2, 1, {0, 1}})).empty());
}

}  // namespace
}  // namespace ghwlab
