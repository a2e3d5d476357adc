#include "ghwlab/fq.hpp"

#include <utility>

#include "ghwlab/error.hpp"

namespace ghwlab {

SmallField::SmallField(const FieldSpec& big) : q_(big.q()), p_(big.p()) {
  if (q_ > 256) throw InvalidArgument("SmallField: q must be at most 256");
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.resize(q_);
  prime_trace_.resize(q_);
  std::vector<FieldSpec::Code> el(q_);
  for (std::uint32_t a = 0; a < q_; ++a) el[a] = big.base_element(a);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<Label>(big.base_label(big.add(el[a], el[b])));
      mul_[a * q_ + b] = static_cast<Label>(big.base_label(big.mul(el[a], el[b])));
    }
    neg_[a] = static_cast<Label>(big.base_label(big.neg(el[a])));
    inv_[a] = a == 0 ? 0 : static_cast<Label>(big.base_label(big.inv(el[a])));
    // Tr_{q->p}(z) = sum_{i<s} z^(p^i); the result is a prime-field encoding.
    FieldSpec::Code acc = 0, z = el[a];
    for (unsigned i = 0; i < big.s(); ++i) {
      acc = big.add(acc, z);
      z = big.pow(z, big.p());
    }
    if (acc >= p_) throw InternalError("SmallField: trace left the prime field");
    prime_trace_[a] = acc;
  }
}

std::vector<std::size_t> rref(const SmallField& F, FqMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    const auto inv = F.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const auto f = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.data.resize(r * m.cols);
  return pivots;
}

std::size_t rank(const SmallField& F, FqMatrix m) { return rref(F, m).size(); }

FqMatrix nullspace(const SmallField& F, const FqMatrix& m) {
  FqMatrix red = m;
  const auto pivots = rref(F, red);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  FqMatrix out(free_cols.size(), m.cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t fc = free_cols[k];
    out.at(k, fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      out.at(k, pivots[i]) = F.neg(red.at(i, fc));
    }
  }
  rref(F, out);
  return out;
}

SubfieldBasis::SubfieldBasis(const FieldSpec& big, const SmallField& small, FieldSpec::Code theta)
    : big_(&big), m_(big.m()), theta_(theta) {
  basis_.resize(m_);
  FieldSpec::Code cur = 1;
  for (unsigned l = 0; l < m_; ++l) {
    basis_[l] = cur;
    cur = big.mul(cur, theta);
  }
  // Gram matrix of the trace form, augmented with the identity.
  FqMatrix gram(m_, 2 * m_);
  for (unsigned i = 0; i < m_; ++i) {
    for (unsigned j = 0; j < m_; ++j) {
      gram.at(i, j) = static_cast<SmallField::Label>(
          big.base_label(big.trace(big.mul(basis_[i], basis_[j]), TraceTarget::kBase)));
    }
    gram.at(i, m_ + i) = 1;
  }
  const auto piv = rref(small, gram);
  if (piv.size() != m_ || (m_ > 0 && piv.back() != m_ - 1)) {
    throw InvalidArgument("SubfieldBasis: powers of theta do not span F_Q over F_q");
  }
  dual_.assign(m_, 0);
  for (unsigned j = 0; j < m_; ++j) {
    FieldSpec::Code acc = 0;
    for (unsigned i = 0; i < m_; ++i) {
      acc = big.add(acc, big.mul(big.base_element(gram.at(j, m_ + i)), basis_[i]));
    }
    dual_[j] = acc;
  }
}

void SubfieldBasis::coordinates(FieldSpec::Code x, std::span<SmallField::Label> out) const {
  for (unsigned l = 0; l < m_; ++l) {
    out[l] = static_cast<SmallField::Label>(big_->base_label(big_->trace(big_->mul(x, dual_[l]), TraceTarget::kBase)));
  }
}

FieldSpec::Code SubfieldBasis::element(std::span<const SmallField::Label> coords) const {
  FieldSpec::Code acc = 0;
  for (unsigned l = 0; l < m_; ++l) {
    if (coords[l] != 0) acc = big_->add(acc, big_->mul(big_->base_element(coords[l]), basis_[l]));
  }
  return acc;
}

}  // namespace ghwlab
