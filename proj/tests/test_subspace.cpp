#include <gtest/gtest.h>

#include <set>

#include "ghwlab/error.hpp"
#include "ghwlab/field.hpp"
#include "ghwlab/subspace.hpp"

namespace ghwlab {
namespace {

SmallField small(std::uint32_t p, unsigned s) { return SmallField(*build_field(p, s, 1)); }

TEST(SubspaceCount, Values) {
  EXPECT_EQ(subspace_count(5, 0, 3), 1);
  EXPECT_EQ(subspace_count(3, 1, 2), 7);
  EXPECT_EQ(subspace_count(4, 2, 3), 130);
  EXPECT_EQ(subspace_count(4, 3, 3), 40);
  EXPECT_EQ(subspace_count(6, 3, 3), 33880);
}

TEST(Enumerator, CountsMatchAndSubspacesAreDistinct) {
  for (auto [p, s, k] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 3u}}) {
    const auto S = small(p, s);
    for (std::size_t r = 0; r <= k; ++r) {
      SubspaceEnumerator it(S, k, r);
      std::set<std::vector<SmallField::Label>> seen;
      while (it.next()) {
        const auto& m = it.current();
        EXPECT_EQ(rank(S, m), r);
        // the stream is already canonical
        EXPECT_EQ(span_of(S, m).basis, m);
        seen.insert(m.data);
      }
      EXPECT_EQ(BigInt(seen.size()), subspace_count(k, r, S.q())) << "q=" << S.q() << " k=" << k << " r=" << r;
    }
  }
}

TEST(Enumerator, PivotSetPartition) {
  const auto S = small(3, 1);
  const std::size_t sets = SubspaceEnumerator::pivot_set_count(4, 2);
  EXPECT_EQ(sets, 6u);
  std::size_t total = 0;
  for (std::size_t i = 0; i < sets; ++i) {
    SubspaceEnumerator it(S, 4, 2);
    it.restrict_pivot_sets(i, i + 1);
    while (it.next()) ++total;
  }
  EXPECT_EQ(total, 130u);
}

TEST(Enumerator, CapExceeded) {
  const auto S = small(3, 1);
  EXPECT_THROW(enumerate_subspaces(S, 6, 3, 1000), CapExceeded);
  EXPECT_NO_THROW(enumerate_subspaces(S, 6, 3, 33880));
}

TEST(SpanOf, CanonicalAndContains) {
  const auto S = small(3, 1);
  FqMatrix a(2, 3), b(2, 3);
  // rows (1,1,0), (0,1,1) and (1,2,1), (1,0,2) span the same plane
  a.at(0, 0) = 1, a.at(0, 1) = 1, a.at(1, 1) = 1, a.at(1, 2) = 1;
  b.at(0, 0) = 1, b.at(0, 1) = 2, b.at(0, 2) = 1, b.at(1, 0) = 1, b.at(1, 2) = 2;
  const auto A = span_of(S, a), B = span_of(S, b);
  EXPECT_EQ(A, B);
  EXPECT_EQ(A.dimension(), 2u);
  const std::vector<SmallField::Label> in{1, 2, 1}, out{1, 0, 0};
  EXPECT_TRUE(contains(S, A, in));
  EXPECT_FALSE(contains(S, A, out));
  const auto els = elements(S, A);
  EXPECT_EQ(els.size(), 9u);
  EXPECT_TRUE(std::all_of(els.front().begin(), els.front().end(), [](auto x) { return x == 0; }));
  for (const auto& v : els) EXPECT_TRUE(contains(S, A, v));
}

TEST(SpanOf, DropsDependentRows) {
  const auto S = small(2, 1);
  FqMatrix m(3, 3);
  m.at(0, 0) = 1, m.at(1, 0) = 1, m.at(2, 2) = 1;
  EXPECT_EQ(span_of(S, m).dimension(), 2u);
}

}  // namespace
}  // namespace ghwlab
