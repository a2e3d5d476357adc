#pragma once

#include <cstdint>
#include <vector>

#include "ghwlab/fq.hpp"
#include "ghwlab/numtheory.hpp"

namespace ghwlab {

// An r-dimensional subspace of F_q^k, stored as its unique RREF basis.
struct Subspace {
  std::size_t ambient = 0;
  FqMatrix basis;  // r x ambient, RREF
  std::vector<std::size_t> pivots;

  std::size_t dimension() const { return basis.rows; }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

// Span of the rows of `generators`, in canonical form.
Subspace span_of(const SmallField& F, FqMatrix generators);

bool contains(const SmallField& F, const Subspace& H, std::span<const SmallField::Label> v);

// Every element of H, as label vectors (q^r of them, zero first).
std::vector<std::vector<SmallField::Label>> elements(const SmallField& F, const Subspace& H);

// Streams every r-dimensional subspace of F_q^k exactly once.
//
// Order: pivot sets in lexicographic order; within a pivot set, the free
// entries (row-major) count like an odometer whose first entry is most
// significant. Pivot sets can be enumerated individually so the stream
// partitions cleanly across workers.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const SmallField& F, std::size_t k, std::size_t r);

  // Restricts the stream to pivot sets [first, last) in lexicographic order.
  void restrict_pivot_sets(std::size_t first, std::size_t last);
  static std::size_t pivot_set_count(std::size_t k, std::size_t r);

  // Advances to the next subspace. Returns false once exhausted.
  bool next();
  const FqMatrix& current() const { return m_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Subspace current_subspace() const { return Subspace{k_, m_, pivots_}; }

 private:
  bool load_pivot_set();
  bool advance_pivots();

  std::uint32_t q_;
  std::size_t k_, r_;
  std::vector<std::size_t> pivots_;
  std::vector<std::pair<std::size_t, std::size_t>> free_;  // (row, col)
  FqMatrix m_;
  std::size_t set_index_ = 0, set_last_ = 0;
  bool started_ = false;
  bool done_ = false;
};

// Number of r-dimensional subspaces of F_q^k (Gaussian binomial).
BigInt subspace_count(std::size_t k, std::size_t r, std::uint64_t q);

// Checks the Gaussian-binomial count against `cap` (CapExceeded otherwise)
// and returns the stream.
SubspaceEnumerator enumerate_subspaces(const SmallField& F, std::size_t k, std::size_t r, std::uint64_t cap = 1000000);

}  // namespace ghwlab
