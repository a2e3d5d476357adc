#include <gtest/gtest.h>

#include "ghwlab/error.hpp"
#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/field.hpp"
#include "ghwlab/numtheory.hpp"
#include "ghwlab/poly.hpp"

namespace ghwlab {
namespace {

TEST(Coset, MembersAndRepresentative) {
  const auto c = cyclotomic_coset(3, 2, 7);
  EXPECT_EQ(c.representative, 3u);
  EXPECT_EQ(c.members, (std::vector<std::uint64_t>{3, 5, 6}));
  EXPECT_EQ(cyclotomic_coset(-1, 2, 7).members, (std::vector<std::uint64_t>{3, 5, 6}));
  EXPECT_EQ(cyclotomic_coset(0, 3, 26).size(), 1u);
}

TEST(MinimalPoly, SmallCases) {
  auto F8 = build_field(2, 1, 3);
  const auto h0 = minimal_poly(*F8, 0);
  EXPECT_EQ(h0.degree(), 1);
  // x - 1 = x + 1 over F_2
  EXPECT_EQ(h0.poly.coeffs, (std::vector<FieldSpec::Code>{1, 1}));
  EXPECT_EQ(minimal_poly(*F8, 1).degree(), 3);
}

TEST(MinimalPoly, DegreeEqualsCosetSizeQ27) {
  auto F = build_field(3, 1, 3);
  for (std::int64_t a = 0; a < 26; ++a) {
    const auto mp = minimal_poly(*F, a);
    EXPECT_EQ(static_cast<std::size_t>(mp.degree()), cyclotomic_coset(a, 3, 26).size()) << a;
    EXPECT_TRUE(all_coefficients_in_base(*F, mp.poly));
    // gamma^(-a) is a root
    EXPECT_EQ(poly_eval(*F, mp.poly, F->antilog(static_cast<std::uint64_t>(26 - a) % 26)), 0u);
  }
}

TEST(CyclotomyClasses, PartitionAndMembership) {
  auto F9 = build_field(3, 1, 2);
  const auto c0 = cyclotomy_class(*F9, 1, 0);
  EXPECT_EQ(c0.size(), 8u);
  const auto sq = cyclotomy_class_members(*F9, 2, 0);
  const auto non = cyclotomy_class_members(*F9, 2, 1);
  EXPECT_EQ(sq.size(), 4u);
  EXPECT_EQ(non.size(), 4u);
  for (auto x : sq) {
    EXPECT_EQ(F9->log(x) % 2, 0u);
    EXPECT_TRUE(std::find(non.begin(), non.end(), x) == non.end());
  }
}

TEST(GaussPeriods, OrderOne) {
  auto F = build_field(2, 1, 4);
  EXPECT_EQ(gauss_period_bruteforce(*F, 1, 0).rational_value(), 15);
  for (FieldSpec::Code a = 1; a < F->order(); ++a) {
    EXPECT_EQ(gauss_period_bruteforce(*F, 1, a).rational_value(), -1);
  }
}

TEST(GaussPeriods, QuadraticQ9) {
  auto F9 = build_field(3, 1, 2);
  GaussPeriodTable T(*F9, 2);
  EXPECT_EQ(T.at_class(0).rational_value(), 1);
  EXPECT_EQ(T.at_class(1).rational_value(), -2);
  EXPECT_EQ(T.at_zero().rational_value(), 4);
}

TEST(GaussPeriods, TableMatchesBruteForce) {
  auto F = build_field(5, 1, 2);
  for (std::uint32_t N : {1u, 2u, 3u, 6u}) {
    GaussPeriodTable T(*F, N);
    for (FieldSpec::Code a = 0; a < F->order(); ++a) {
      EXPECT_EQ(T.at(a), gauss_period_bruteforce(*F, N, a)) << "N=" << N << " a=" << a;
    }
  }
}

TEST(QuadraticGaussSum, ClosedForms) {
  EXPECT_EQ(quadratic_gauss_sum(5, 1), (QuadraticGaussSum{1, false, 5}));
  EXPECT_EQ(quadratic_gauss_sum(3, 2), (QuadraticGaussSum{1, false, 9}));
  EXPECT_EQ(quadratic_gauss_sum(3, 1), (QuadraticGaussSum{1, true, 3}));
  EXPECT_THROW(quadratic_gauss_sum(2, 3), InvalidArgument);
}

TEST(QuadraticGaussSum, SignIndex) {
  EXPECT_EQ(gauss_sum_sign_j(*build_field(3, 1, 2)), 0u);
  EXPECT_EQ(gauss_sum_sign_j(*build_field(5, 1, 2)), 1u);
  EXPECT_EQ(gauss_sum_sign_j(*build_field(3, 1, 4)), 1u);
  EXPECT_EQ(gauss_sum_sign_j(*build_field(3, 2, 2)), 1u);
}

TEST(QuadraticGaussSum, BruteForceSquaresToCharacterSign) {
  // G^2 = chi(-1) q
  for (auto [p, d] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}}) {
    auto F = build_field(p, 1, d);
    const auto G = quadratic_gauss_sum_bruteforce(*F);
    const auto sq = G * G;
    ASSERT_TRUE(sq.is_rational());
    const std::int64_t q = static_cast<std::int64_t>(F->order());
    const std::int64_t chi_minus_one = (F->log(F->neg(1)) % 2 == 0) ? 1 : -1;
    EXPECT_EQ(sq.rational_value(), chi_minus_one * q);
  }
}

TEST(CyclotomicIntegerTest, Canonicalization) {
  // 1 + zeta + zeta^2 = 0 in Z[zeta_3]
  CyclotomicInteger x(3);
  for (std::uint64_t k = 0; k < 3; ++k) x.accumulate(k, 1);
  x.canonicalize();
  EXPECT_TRUE(x.is_rational());
  EXPECT_EQ(x.rational_value(), 0);
  EXPECT_EQ(CyclotomicInteger::integer(3, 5) - CyclotomicInteger::integer(3, 2), CyclotomicInteger::integer(3, 3));
  EXPECT_FALSE(CyclotomicInteger::zeta_power(3, 1).is_rational());
}

}  // namespace
}  // namespace ghwlab
