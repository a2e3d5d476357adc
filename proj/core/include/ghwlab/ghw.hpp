#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghwlab/code.hpp"
#include "ghwlab/cyclotomy.hpp"
#include "ghwlab/subspace.hpp"

namespace ghwlab {

// N(H): number of coordinates on which every codeword of H vanishes.
//
// Subspaces live in the message space F_q^(tm) of the code (see CyclicCode
// for the identification with F_Q^t). When q^(tm) is small enough, the zero
// pattern of every message is precomputed as a bitmask and N(H) is the
// popcount of the AND over a basis.
class VanishingCounter {
 public:
  explicit VanishingCounter(const CyclicCode& code, std::uint64_t mask_budget_words = std::uint64_t{1} << 23);

  std::size_t count(const FqMatrix& basis) const;
  std::size_t count(const Subspace& H) const { return count(H.basis); }
  bool uses_masks() const noexcept { return !masks_.empty(); }

 private:
  std::uint64_t index_of(std::span<const SmallField::Label> v) const;

  const CyclicCode* code_;
  std::size_t words_;
  std::vector<std::uint64_t> masks_;  // q^k blocks of words_, bit set = coordinate vanishes
};

std::size_t count_vanishing(const CyclicCode& code, const Subspace& H);

// Evaluates N(H) through Gauss periods of order N:
//   N(H) = N/(e delta q^r) sum_{b in H} sum_{h=1}^{e} eta(g^h sum_j b_j beta_j^h).
// The sum is accumulated exactly in Z[zeta_p]; a non-rational or
// non-divisible total raises InternalError.
class GaussPeriodCounter {
 public:
  explicit GaussPeriodCounter(const CyclicCode& code);
  std::uint64_t count(const Subspace& H) const;
  const GaussPeriodTable& periods() const noexcept { return table_; }

 private:
  const CyclicCode* code_;
  GaussPeriodTable table_;
  std::vector<std::vector<FieldSpec::Code>> weights_;  // weights_[h-1][j] = g^h beta_j^h
};

std::uint64_t count_vanishing_eq1(const CyclicCode& code, const Subspace& H);

// w_h = dim(H ∩ W_h) for h = 1..e, where W_h = {b : sum_j b_j beta_j^h = 0}.
std::vector<unsigned> kernel_profile(const CyclicCode& code, const Subspace& H);

// N(H) from a kernel profile when N = 1:
//   (Q sum_h q^(w_h) - e q^r) / (e delta q^r).
BigInt count_from_kernel_profile(const CyclicCode& code, unsigned r, const std::vector<unsigned>& w);

enum class OracleStrategy { kAuto, kSubspaces, kFlats, kSearch };

std::string to_string(OracleStrategy s);

struct OracleOptions {
  OracleStrategy strategy = OracleStrategy::kAuto;
  std::uint64_t cap = 1000000;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One rank of the brute-force hierarchy.
struct RankResult {
  unsigned r = 0;
  bool skipped = false;
  std::uint64_t required = 0;  // enumeration size of the chosen (or cheapest) route
  OracleStrategy method = OracleStrategy::kSubspaces;
  std::uint64_t N = 0;         // N_r = max N(H)
  std::uint64_t d = 0;         // n - N_r
  Subspace witness;
  double seconds = 0;
};

// Exact d_r by exhaustive search, by one of three routes:
//
// kSubspaces walks every r-dimensional subspace of the message space and
// keeps the first maximizer of N(H) in enumeration order.
//
// kFlats walks the flats of the column matroid of the generator matrix. The
// coordinates vanishing on H are the columns lying in the annihilator of H,
// so N_r is the largest number of columns in a flat of rank tm - r; the
// witness is the annihilator of the lexicographically first such flat.
// Flat counts are bounded by the number of column subsets, which keeps the
// route cheap when n is small and q^(tm) is not.
//
// kSearch is a branch and bound over projective message vectors. Every H is
// reached through a basis v_1, v_2, ... where v_1 has the most zeros in H
// and later vectors follow in a fixed order, so a partial basis whose common
// zeros cannot beat the incumbent is cut. The code is invariant under the
// cyclic shift x_j -> x_j gamma^(a_j) and under x_j -> x_j^q, which map
// subspaces to subspaces with the same N(H); v_1 therefore only ranges over
// orbit representatives. The node budget is 64 * cap.
//
// kAuto uses the search for r <= 2 (unless there are few subspaces), walks
// subspaces when their count is within the cap and no larger than the
// a-priori flat bound, then flats when that bound is within the
// cap, then the search, then flats with levels checked against the cap as
// they are built.
class HierarchyOracle {
 public:
  HierarchyOracle(const CyclicCode& code, OracleOptions opts = {});

  // a-priori enumeration bound for rank r on each route
  BigInt subspace_bound(unsigned r) const;
  BigInt flat_bound(unsigned r) const;

  // Computes rank r. A rank whose chosen route exceeds the cap is returned
  // with skipped = true.
  RankResult rank(unsigned r);
  std::vector<RankResult> hierarchy();

 private:
  struct FlatLevel {
    std::uint64_t best = 0;
    std::vector<std::size_t> witness;  // projective column classes
    std::uint64_t count = 0;
  };

  RankResult by_subspaces(unsigned r);
  RankResult by_flats(unsigned r);
  void build_flat_levels(unsigned up_to);
  RankResult by_search(unsigned r);
  bool prepare_search();

  const CyclicCode* code_;
  OracleOptions opts_;
  std::optional<VanishingCounter> counter_;  // built on first subspace walk
  std::size_t k_;
  // Distinct projective column classes of the generator and their sizes.
  std::vector<std::vector<SmallField::Label>> points_;
  std::vector<std::uint64_t> multiplicity_;
  std::uint64_t zero_columns_ = 0;
  std::vector<FlatLevel> levels_;
  std::vector<std::vector<std::uint64_t>> frontier_;  // flats of the deepest built level
  std::optional<unsigned> flat_overflow_;              // first level that exceeded the cap

  // Search state: all projective message vectors with their zero sets.
  struct SearchSpace {
    std::vector<std::vector<SmallField::Label>> vectors;
    std::vector<std::uint64_t> zeros;  // words per vector, bit set = coordinate vanishes
    std::vector<std::uint32_t> zero_count;
    std::vector<std::uint32_t> order;  // by zero count descending, then index
    std::vector<bool> representative;
    std::size_t words = 0;
  };
  std::optional<SearchSpace> search_;
  bool search_unavailable_ = false;
};

// d_r with witness; throws CapExceeded if the rank is over the cap.
RankResult ghw_bruteforce(const CyclicCode& code, unsigned r, const OracleOptions& opts = {});

// Orthogonal complement of H under <x, y> = Tr_{Q->q}(sum_i x_i y_i),
// in message-space coordinates.
Subspace dual_space(const CyclicCode& code, const Subspace& H);

// The trace form <x, y> on coordinate vectors, as a label.
SmallField::Label trace_form(const CyclicCode& code, std::span<const SmallField::Label> x,
                             std::span<const SmallField::Label> y);

// Checks sum_{y in H^perp} psi_q(<x, y>) = q^(tm - r) [x in H] exactly.
bool indicator_identity_holds(const CyclicCode& code, const Subspace& H, std::span<const SmallField::Label> x);

// max |H ∩ C_i^(2,Q)| over the l-dimensional F_q-subspaces H of F_Q.
// Throws CapExceeded when there are more than `cap` such subspaces.
std::uint64_t max_intersection_oracle(const FieldSpec& F, unsigned N, unsigned i, unsigned l,
                                      std::uint64_t cap = 1000000);

}  // namespace ghwlab
