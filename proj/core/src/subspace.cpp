#include "ghwlab/subspace.hpp"

#include "ghwlab/error.hpp"

namespace ghwlab {

Subspace span_of(const SmallField& F, FqMatrix generators) {
  Subspace s;
  s.ambient = generators.cols;
  s.pivots = rref(F, generators);
  s.basis = std::move(generators);
  return s;
}

bool contains(const SmallField& F, const Subspace& H, std::span<const SmallField::Label> v) {
  std::vector<SmallField::Label> w(v.begin(), v.end());
  for (std::size_t i = 0; i < H.basis.rows; ++i) {
    const auto c = w[H.pivots[i]];
    if (c == 0) continue;
    const auto row = H.basis.row(i);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] = F.sub(w[j], F.mul(c, row[j]));
  }
  for (auto x : w) {
    if (x != 0) return false;
  }
  return true;
}

std::vector<std::vector<SmallField::Label>> elements(const SmallField& F, const Subspace& H) {
  const std::size_t r = H.dimension(), k = H.ambient;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= F.q();
  std::vector<std::vector<SmallField::Label>> out;
  out.reserve(total);
  std::vector<SmallField::Label> coeff(r, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < r; ++i) {
      coeff[i] = static_cast<SmallField::Label>(x % F.q());
      x /= F.q();
    }
    std::vector<SmallField::Label> v(k, 0);
    for (std::size_t i = 0; i < r; ++i) {
      if (coeff[i] == 0) continue;
      const auto row = H.basis.row(i);
      for (std::size_t j = 0; j < k; ++j) v[j] = F.add(v[j], F.mul(coeff[i], row[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

SubspaceEnumerator::SubspaceEnumerator(const SmallField& F, std::size_t k, std::size_t r)
    : q_(F.q()), k_(k), r_(r), m_(r, k) {
  if (r > k) throw InvalidArgument("enumerate_subspaces: r > k");
  set_last_ = pivot_set_count(k, r);
  pivots_.resize(r);
  for (std::size_t i = 0; i < r; ++i) pivots_[i] = i;
}

std::size_t SubspaceEnumerator::pivot_set_count(std::size_t k, std::size_t r) {
  return static_cast<std::size_t>(binomial(static_cast<unsigned>(k), static_cast<unsigned>(r)));
}

void SubspaceEnumerator::restrict_pivot_sets(std::size_t first, std::size_t last) {
  if (started_) throw InvalidArgument("restrict_pivot_sets after iteration started");
  for (std::size_t i = 0; i < r_; ++i) pivots_[i] = i;
  for (std::size_t i = 0; i < first; ++i) {
    if (!advance_pivots()) break;
  }
  set_index_ = first;
  set_last_ = std::min(last, pivot_set_count(k_, r_));
}

bool SubspaceEnumerator::advance_pivots() {
  // Next r-combination of {0..k-1} in lexicographic order.
  if (r_ == 0) return false;
  std::size_t i = r_;
  while (i-- > 0) {
    if (pivots_[i] < k_ - r_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SubspaceEnumerator::load_pivot_set() {
  std::fill(m_.data.begin(), m_.data.end(), 0);
  free_.clear();
  std::vector<bool> is_pivot(k_, false);
  for (auto c : pivots_) is_pivot[c] = true;
  for (std::size_t i = 0; i < r_; ++i) {
    m_.at(i, pivots_[i]) = 1;
    for (std::size_t c = pivots_[i] + 1; c < k_; ++c) {
      if (!is_pivot[c]) free_.emplace_back(i, c);
    }
  }
  return true;
}

bool SubspaceEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (set_index_ >= set_last_) {
      done_ = true;
      return false;
    }
    return load_pivot_set();
  }
  // Odometer over free entries, last entry fastest.
  for (std::size_t f = free_.size(); f-- > 0;) {
    auto& cell = m_.at(free_[f].first, free_[f].second);
    if (cell + 1u < q_) {
      ++cell;
      return true;
    }
    cell = 0;
  }
  ++set_index_;
  if (set_index_ >= set_last_ || !advance_pivots()) {
    done_ = true;
    return false;
  }
  return load_pivot_set();
}

BigInt subspace_count(std::size_t k, std::size_t r, std::uint64_t q) {
  return gaussian_binomial(static_cast<unsigned>(k), static_cast<unsigned>(r), q);
}

SubspaceEnumerator enumerate_subspaces(const SmallField& F, std::size_t k, std::size_t r, std::uint64_t cap) {
  if (r > k) throw InvalidArgument("enumerate_subspaces: r > k");
  const BigInt count = subspace_count(k, r, F.q());
  if (count > cap) {
    throw CapExceeded("enumerate_subspaces(" + std::to_string(k) + ", " + std::to_string(r) + ") over F_" +
                          std::to_string(F.q()),
                      saturate_u64(count), cap);
  }
  return SubspaceEnumerator(F, k, r);
}

}  // namespace ghwlab
