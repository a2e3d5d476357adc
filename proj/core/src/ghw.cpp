#include "ghwlab/ghw.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <thread>
#include <unordered_set>

#include "ghwlab/error.hpp"

namespace ghwlab {

namespace {

using Label = SmallField::Label;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t total_vectors(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > (std::uint64_t{1} << 40) / q) return std::numeric_limits<std::uint64_t>::max();
    total *= q;
  }
  return total;
}

// Scales v so its first nonzero entry is 1. Returns false for the zero vector.
bool normalize_projective(const SmallField& F, std::vector<Label>& v) {
  for (auto x : v) {
    if (x == 0) continue;
    const auto inv = F.inv(x);
    for (auto& y : v) y = F.mul(y, inv);
    return true;
  }
  return false;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

VanishingCounter::VanishingCounter(const CyclicCode& code, std::uint64_t mask_budget_words)
    : code_(&code), words_((code.length() + 63) / 64) {
  const auto& F = code.base();
  const std::size_t k = code.dimension(), n = code.length();
  const std::uint64_t total = total_vectors(F.q(), k);
  if (total == std::numeric_limits<std::uint64_t>::max() || total * words_ > mask_budget_words) return;

  masks_.assign(total * words_, 0);
  const auto& G = code.generator();
  // Odometer over labels with digit 0 fastest; partial[i] is the codeword of
  // the digits at positions >= i.
  std::vector<std::vector<Label>> partial(k + 1, std::vector<Label>(n, 0));
  std::vector<Label> digits(k, 0);
  for (std::uint64_t idx = 0;; ++idx) {
    auto* mask = masks_.data() + idx * words_;
    for (std::size_t i = 0; i < n; ++i) {
      if (partial[0][i] == 0) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    std::size_t d = 0;
    while (d < k && digits[d] == F.q() - 1) digits[d++] = 0;
    if (d == k) break;
    ++digits[d];
    const auto row = G.row(d);
    for (std::size_t i = 0; i < n; ++i) partial[d][i] = F.add(partial[d + 1][i], F.mul(digits[d], row[i]));
    for (std::size_t j = 0; j < d; ++j) partial[j] = partial[d];
  }
}

std::uint64_t VanishingCounter::index_of(std::span<const Label> v) const {
  const std::uint64_t q = code_->base().q();
  std::uint64_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

std::size_t VanishingCounter::count(const FqMatrix& basis) const {
  const std::size_t n = code_->length();
  if (basis.rows == 0) return n;
  if (!masks_.empty()) {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = ~std::uint64_t{0};
      for (std::size_t r = 0; r < basis.rows; ++r) acc &= masks_[index_of(basis.row(r)) * words_ + w];
      total += static_cast<std::size_t>(std::popcount(acc));
    }
    return total;
  }
  std::vector<bool> alive(n, true);
  for (std::size_t r = 0; r < basis.rows; ++r) {
    const auto cw = code_->codeword_of_coords(basis.row(r));
    for (std::size_t i = 0; i < n; ++i) {
      if (cw[i] != 0) alive[i] = false;
    }
  }
  return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true));
}

std::size_t count_vanishing(const CyclicCode& code, const Subspace& H) {
  return VanishingCounter(code, 0).count(H);
}

GaussPeriodCounter::GaussPeriodCounter(const CyclicCode& code)
    : code_(&code), table_(code.field(), static_cast<std::uint32_t>(code.derived().N)) {
  const auto& F = code.field();
  const auto& d = code.derived();
  const std::uint64_t e = code.params().e;
  weights_.resize(e);
  for (std::uint64_t h = 1; h <= e; ++h) {
    for (auto bj : d.beta_j) weights_[h - 1].push_back(F.pow(F.mul(d.g, bj), h));
  }
}

std::uint64_t GaussPeriodCounter::count(const Subspace& H) const {
  const auto& F = code_->field();
  const std::uint32_t N = table_.N();
  std::int64_t zeros = 0;
  std::vector<std::int64_t> per_class(N, 0);
  for (const auto& v : elements(code_->base(), H)) {
    const auto b = code_->to_field_vector(v);
    for (const auto& w : weights_) {
      FieldSpec::Code arg = 0;
      for (std::size_t j = 0; j < b.size(); ++j) arg = F.add(arg, F.mul(w[j], b[j]));
      if (arg == 0) {
        ++zeros;
      } else {
        ++per_class[F.log(arg) % N];
      }
    }
  }
  auto total = table_.at_zero();
  total *= zeros;
  for (std::uint32_t c = 0; c < N; ++c) {
    auto term = table_.at_class(c);
    term *= per_class[c];
    total += term;
  }
  if (!total.is_rational()) throw InternalError("Gauss-period sum is not rational for " + code_->params().key());
  const BigInt num = BigInt(total.rational_value()) * N;
  const BigInt den = BigInt(code_->params().e) * code_->derived().delta * big_pow(code_->base().q(), H.dimension());
  const BigInt value = exact_div(num, den);
  if (value < 0) throw InternalError("negative Gauss-period count for " + code_->params().key());
  return static_cast<std::uint64_t>(value);
}

std::uint64_t count_vanishing_eq1(const CyclicCode& code, const Subspace& H) {
  return GaussPeriodCounter(code).count(H);
}

std::vector<unsigned> kernel_profile(const CyclicCode& code, const Subspace& H) {
  const auto& F = code.field();
  const auto& S = code.base();
  const auto& d = code.derived();
  const unsigned m = code.params().m;
  const std::size_t r = H.dimension();
  std::vector<std::vector<FieldSpec::Code>> rows;
  for (std::size_t i = 0; i < r; ++i) rows.push_back(code.to_field_vector(H.basis.row(i)));

  std::vector<unsigned> w;
  for (std::uint64_t h = 1; h <= code.params().e; ++h) {
    FqMatrix img(r, m);
    for (std::size_t i = 0; i < r; ++i) {
      FieldSpec::Code y = 0;
      for (std::size_t j = 0; j < rows[i].size(); ++j) y = F.add(y, F.mul(rows[i][j], F.pow(d.beta_j[j], h)));
      code.basis().coordinates(y, img.row(i));
    }
    w.push_back(static_cast<unsigned>(r - rank(S, img)));
  }
  return w;
}

BigInt count_from_kernel_profile(const CyclicCode& code, unsigned r, const std::vector<unsigned>& w) {
  if (code.derived().N != 1) throw HypothesisError("kernel-profile count requires N = 1");
  const std::uint64_t q = code.base().q();
  const std::uint64_t e = code.params().e;
  if (w.size() != e) throw InvalidArgument("kernel profile must have e entries");
  BigInt sum = 0;
  for (auto x : w) sum += big_pow(q, x);
  const BigInt num = BigInt(code.params().Q()) * sum - BigInt(e) * big_pow(q, r);
  return exact_div(num, BigInt(e) * code.derived().delta * big_pow(q, r));
}

std::string to_string(OracleStrategy s) {
  switch (s) {
    case OracleStrategy::kAuto:
      return "auto";
    case OracleStrategy::kSubspaces:
      return "subspaces";
    case OracleStrategy::kFlats:
      return "flats";
    case OracleStrategy::kSearch:
      return "search";
  }
  return "unknown";
}

HierarchyOracle::HierarchyOracle(const CyclicCode& code, OracleOptions opts)
    : code_(&code), opts_(opts), k_(code.dimension()) {
  const auto& S = code.base();
  const auto& G = code.generator();
  for (std::size_t c = 0; c < G.cols; ++c) {
    std::vector<Label> col(k_);
    for (std::size_t i = 0; i < k_; ++i) col[i] = G.at(i, c);
    if (!normalize_projective(S, col)) {
      ++zero_columns_;
      continue;
    }
    auto it = std::find(points_.begin(), points_.end(), col);
    if (it == points_.end()) {
      points_.push_back(std::move(col));
      multiplicity_.push_back(1);
    } else {
      ++multiplicity_[static_cast<std::size_t>(it - points_.begin())];
    }
  }
}

BigInt HierarchyOracle::subspace_bound(unsigned r) const {
  return subspace_count(k_, r, code_->base().q());
}

BigInt HierarchyOracle::flat_bound(unsigned r) const {
  const unsigned rho = static_cast<unsigned>(k_) - r;
  BigInt total = 0;
  for (unsigned i = 0; i <= rho; ++i) {
    const BigInt by_points =
        i <= points_.size() ? binomial(static_cast<unsigned>(points_.size()), i) : BigInt(0);
    total += std::min(by_points, subspace_count(k_, i, code_->base().q()));
  }
  return total;
}

RankResult HierarchyOracle::rank(unsigned r) {
  if (r < 1 || r > k_) throw InvalidArgument("rank out of range: " + std::to_string(r));
  const unsigned rho = static_cast<unsigned>(k_) - r;
  const BigInt sub = subspace_bound(r);
  auto skipped = [&](OracleStrategy method, const BigInt& need) {
    RankResult res;
    res.r = r;
    res.skipped = true;
    res.method = method;
    res.required = saturate_u64(need);
    return res;
  };
  auto by_subspaces_counted = [&]() {
    auto res = by_subspaces(r);
    res.required = saturate_u64(sub);
    return res;
  };
  // Flat levels are only known after they are built, so the cap is checked
  // against the number of flats actually produced.
  auto try_flats = [&]() -> std::optional<RankResult> {
    if (flat_overflow_ && rho >= *flat_overflow_) return std::nullopt;
    try {
      auto res = by_flats(r);
      res.required = levels_[rho].count;
      return res;
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
  };

  auto try_search = [&]() -> std::optional<RankResult> {
    if (!prepare_search()) return std::nullopt;
    try {
      return by_search(r);
    } catch (const CapExceeded&) {
      return std::nullopt;
    }
  };

  switch (opts_.strategy) {
    case OracleStrategy::kSubspaces:
      return sub > opts_.cap ? skipped(OracleStrategy::kSubspaces, sub) : by_subspaces_counted();
    case OracleStrategy::kFlats:
      if (auto res = try_flats()) return *res;
      return skipped(OracleStrategy::kFlats, flat_bound(r));
    case OracleStrategy::kSearch:
      if (auto res = try_search()) return *res;
      return skipped(OracleStrategy::kSearch, BigInt(opts_.cap) * 64);
    case OracleStrategy::kAuto:
      break;
  }
  if (levels_.size() > rho) return *try_flats();
  // At r <= 2 the search visits at most (representatives) x (points) nodes.
  if (r <= 2 && subspace_bound(r) > 1024) {
    if (auto res = try_search()) return *res;
  }
  const BigInt flats = flat_bound(r);
  if (sub <= opts_.cap && sub <= flats) return by_subspaces_counted();
  if (flats <= opts_.cap) {
    if (auto res = try_flats()) return *res;
  }
  if (auto res = try_search()) return *res;
  if (auto res = try_flats()) return *res;
  if (sub <= opts_.cap) return by_subspaces_counted();
  return skipped(OracleStrategy::kAuto, std::min(sub, flat_bound(r)));
}

std::vector<RankResult> HierarchyOracle::hierarchy() {
  // Top rank first: flats of low rank are built before deeper ones.
  std::vector<RankResult> out(k_);
  for (unsigned r = static_cast<unsigned>(k_); r >= 1; --r) out[r - 1] = rank(r);
  return out;
}

RankResult HierarchyOracle::by_subspaces(unsigned r) {
  const auto start = Clock::now();
  // A handful of subspaces is cheaper to count directly than to build masks.
  std::optional<VanishingCounter> direct;
  const VanishingCounter* counter = nullptr;
  if (counter_ || subspace_bound(r) > 1024) {
    if (!counter_) counter_.emplace(*code_);
    counter = &*counter_;
  } else {
    counter = &direct.emplace(*code_, 0);
  }
  const auto& S = code_->base();
  const std::size_t sets = SubspaceEnumerator::pivot_set_count(k_, r);
  const unsigned threads = std::min<std::size_t>(resolve_threads(opts_.threads), std::max<std::size_t>(sets, 1));

  struct Best {
    std::size_t value = 0;
    bool found = false;
    FqMatrix basis;
    std::vector<std::size_t> pivots;
  };
  // Worker w handles pivot sets w, w + threads, ...; a set is scanned in
  // enumeration order, so the per-set first maximizer plus the smallest set
  // index reproduces the sequential first maximizer.
  std::vector<std::vector<Best>> per_set(threads);
  std::vector<std::vector<std::size_t>> set_ids(threads);
  auto work = [&](unsigned w) {
    for (std::size_t set = w; set < sets; set += threads) {
      SubspaceEnumerator it(S, k_, r);
      it.restrict_pivot_sets(set, set + 1);
      Best best;
      while (it.next()) {
        const std::size_t v = counter->count(it.current());
        if (!best.found || v > best.value) {
          best.found = true;
          best.value = v;
          best.basis = it.current();
          best.pivots = it.pivots();
        }
      }
      per_set[w].push_back(std::move(best));
      set_ids[w].push_back(set);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }

  Best best;
  std::size_t best_set = 0;
  for (unsigned w = 0; w < threads; ++w) {
    for (std::size_t i = 0; i < per_set[w].size(); ++i) {
      const auto& b = per_set[w][i];
      if (!b.found) continue;
      const std::size_t set = set_ids[w][i];
      if (!best.found || b.value > best.value || (b.value == best.value && set < best_set)) {
        best = b;
        best_set = set;
      }
    }
  }
  if (!best.found) throw InternalError("subspace enumeration produced nothing");

  RankResult res;
  res.r = r;
  res.method = OracleStrategy::kSubspaces;
  res.N = best.value;
  res.d = code_->length() - best.value;
  res.witness = Subspace{k_, std::move(best.basis), std::move(best.pivots)};
  res.seconds = seconds_since(start);
  return res;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ull ^ (h >> 29);
    return h;
  }
};

// True if a precedes b as sorted index lists (same-rank flats never nest).
bool bits_less(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    const auto diff = a[w] ^ b[w];
    if (diff == 0) continue;
    const auto low = diff & (~diff + 1);
    return (a[w] & low) != 0;
  }
  return false;
}

std::vector<std::size_t> bits_to_indices(const Bits& b) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < b.size(); ++w) {
    for (auto x = b[w]; x != 0; x &= x - 1) out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
  return out;
}

}  // namespace

void HierarchyOracle::build_flat_levels(unsigned up_to) {
  if (levels_.size() > up_to) return;
  const auto& S = code_->base();
  const std::size_t P = points_.size(), words = (P + 63) / 64;

  // Only the deepest level's flats are kept, as the frontier.
  if (levels_.empty()) {
    frontier_.assign(1, Bits(words, 0));
    levels_.push_back(FlatLevel{zero_columns_, {}, 1});
  }
  auto& current = frontier_;

  for (unsigned rho = static_cast<unsigned>(levels_.size()) - 1; rho < up_to; ++rho) {
    std::unordered_set<Bits, BitsHash> next;
    std::vector<std::pair<std::vector<Label>, std::size_t>> residuals;
    for (const auto& flat : current) {
      const auto members = bits_to_indices(flat);
      FqMatrix basis(members.size(), k_);
      for (std::size_t i = 0; i < members.size(); ++i) {
        std::copy(points_[members[i]].begin(), points_[members[i]].end(), basis.row(i).begin());
      }
      const auto pivots = rref(S, basis);
      residuals.clear();
      for (std::size_t pt = 0; pt < P; ++pt) {
        if (flat[pt / 64] >> (pt % 64) & 1) continue;
        auto v = points_[pt];
        for (std::size_t i = 0; i < pivots.size(); ++i) {
          const auto c = v[pivots[i]];
          if (c == 0) continue;
          const auto row = basis.row(i);
          for (std::size_t j = 0; j < k_; ++j) v[j] = S.sub(v[j], S.mul(c, row[j]));
        }
        if (!normalize_projective(S, v)) throw InternalError("flat is not closed");
        residuals.emplace_back(std::move(v), pt);
      }
      std::sort(residuals.begin(), residuals.end());
      for (std::size_t i = 0; i < residuals.size();) {
        Bits child = flat;
        std::size_t j = i;
        for (; j < residuals.size() && residuals[j].first == residuals[i].first; ++j) {
          child[residuals[j].second / 64] |= std::uint64_t{1} << (residuals[j].second % 64);
        }
        next.insert(std::move(child));
        i = j;
      }
      if (next.size() > opts_.cap) {
        flat_overflow_ = rho + 1;
        throw CapExceeded("flats of rank " + std::to_string(rho + 1), next.size(), opts_.cap);
      }
    }

    FlatLevel level;
    level.count = next.size();
    const Bits* best = nullptr;
    for (const auto& flat : next) {
      std::uint64_t size = zero_columns_;
      for (auto idx : bits_to_indices(flat)) size += multiplicity_[idx];
      if (best == nullptr || size > level.best || (size == level.best && bits_less(flat, *best))) {
        level.best = size;
        best = &flat;
      }
    }
    if (best != nullptr) level.witness = bits_to_indices(*best);
    levels_.push_back(std::move(level));
    current.assign(next.begin(), next.end());
  }
}

RankResult HierarchyOracle::by_flats(unsigned r) {
  const auto start = Clock::now();
  const unsigned rho = static_cast<unsigned>(k_) - r;
  build_flat_levels(rho);
  const auto& level = levels_[rho];
  if (level.count == 0) throw InternalError("no flat of rank " + std::to_string(rho));

  FqMatrix span(level.witness.size(), k_);
  for (std::size_t i = 0; i < level.witness.size(); ++i) {
    std::copy(points_[level.witness[i]].begin(), points_[level.witness[i]].end(), span.row(i).begin());
  }
  FqMatrix annihilator(k_, k_);
  if (span.rows == 0) {
    for (std::size_t i = 0; i < k_; ++i) annihilator.at(i, i) = 1;
  } else {
    annihilator = nullspace(code_->base(), span);
  }
  RankResult res;
  res.r = r;
  res.method = OracleStrategy::kFlats;
  res.N = level.best;
  res.d = code_->length() - level.best;
  res.witness = span_of(code_->base(), std::move(annihilator));
  if (res.witness.dimension() != r) throw InternalError("flat witness has the wrong dimension");
  res.seconds = seconds_since(start);
  return res;
}

bool HierarchyOracle::prepare_search() {
  if (search_) return true;
  if (search_unavailable_) return false;
  const auto& S = code_->base();
  const auto& F = code_->field();
  const std::uint64_t q = S.q();
  const std::size_t n = code_->length();
  const std::uint64_t total = total_vectors(q, k_);
  const std::size_t words = (n + 63) / 64;
  if (total > (std::uint64_t{1} << 24) || total / (q - 1) * words > opts_.cap * 64) {
    search_unavailable_ = true;
    return false;
  }

  SearchSpace sp;
  sp.words = words;
  // index_of[sum v_i q^i] = position among projective vectors
  std::vector<std::uint32_t> index_of(total, std::numeric_limits<std::uint32_t>::max());
  auto encode = [&](const std::vector<Label>& v) {
    std::uint64_t x = 0;
    for (std::size_t i = k_; i-- > 0;) x = x * q + v[i];
    return x;
  };
  for (std::size_t lead = 0; lead < k_; ++lead) {
    std::vector<Label> v(k_, 0);
    v[lead] = 1;
    while (true) {
      index_of[encode(v)] = static_cast<std::uint32_t>(sp.vectors.size());
      sp.vectors.push_back(v);
      std::size_t i = k_;
      while (i-- > lead + 1) {
        if (++v[i] < q) break;
        v[i] = 0;
      }
      if (i == lead) break;
    }
  }
  const std::size_t P = sp.vectors.size();

  const auto& G = code_->generator();
  sp.zeros.assign(P * words, 0);
  sp.zero_count.assign(P, 0);
  std::vector<Label> word(n);
  for (std::size_t v = 0; v < P; ++v) {
    std::fill(word.begin(), word.end(), Label{0});
    for (std::size_t i = 0; i < k_; ++i) {
      const Label c = sp.vectors[v][i];
      if (c == 0) continue;
      const auto row = G.row(i);
      for (std::size_t col = 0; col < n; ++col) word[col] = S.add(word[col], S.mul(c, row[col]));
    }
    auto* z = &sp.zeros[v * words];
    for (std::size_t col = 0; col < n; ++col) {
      if (word[col] == 0) z[col / 64] |= std::uint64_t{1} << (col % 64);
    }
    sp.zero_count[v] = static_cast<std::uint32_t>(std::count(word.begin(), word.end(), Label{0}));
  }

  // Orbits under the shift and the Frobenius.
  const auto& a = code_->derived().a;
  std::vector<FieldSpec::Code> shift(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) shift[j] = F.antilog(a[j]);
  auto image = [&](std::uint32_t v, bool frobenius) {
    auto x = code_->to_field_vector(sp.vectors[v]);
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = frobenius ? F.pow(x[j], q) : F.mul(x[j], shift[j]);
    auto w = code_->to_coords(x);
    normalize_projective(S, w);
    return index_of[encode(w)];
  };
  sp.representative.assign(P, false);
  std::vector<bool> seen(P, false);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t v = 0; v < P; ++v) {
    if (seen[v]) continue;
    sp.representative[v] = true;
    seen[v] = true;
    stack.assign(1, v);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (bool frob : {false, true}) {
        const auto w = image(u, frob);
        if (w >= P) throw InternalError("automorphism left the projective space");
        if (sp.zero_count[w] != sp.zero_count[u]) throw InternalError("automorphism changed a zero count");
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }

  sp.order.resize(P);
  for (std::uint32_t v = 0; v < P; ++v) sp.order[v] = v;
  std::stable_sort(sp.order.begin(), sp.order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return sp.zero_count[x] > sp.zero_count[y]; });
  search_ = std::move(sp);
  return true;
}

RankResult HierarchyOracle::by_search(unsigned r) {
  const auto start = Clock::now();
  const auto& S = code_->base();
  const auto& sp = *search_;
  const std::size_t P = sp.vectors.size(), W = sp.words;
  const std::uint64_t budget = opts_.cap * 64;
  std::uint64_t nodes = 0;

  std::int64_t best = -1;
  std::vector<std::uint32_t> best_basis, chosen;
  // Reduced copies of the chosen vectors, for span membership.
  std::vector<std::vector<Label>> reduced;
  std::vector<std::size_t> pivot;
  std::vector<std::uint64_t> masks((r + 1) * W);

  auto reduce = [&](std::vector<Label> v) {
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      const Label c = v[pivot[i]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) v[j] = S.sub(v[j], S.mul(c, reduced[i][j]));
    }
    return v;
  };
  auto push = [&](std::uint32_t w) -> bool {
    auto v = reduce(sp.vectors[w]);
    if (!normalize_projective(S, v)) return false;
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    for (auto& row : reduced) {
      const Label c = row[lead];
      if (c == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) row[j] = S.sub(row[j], S.mul(c, v[j]));
    }
    reduced.push_back(std::move(v));
    pivot.push_back(lead);
    chosen.push_back(w);
    return true;
  };
  auto pop = [&]() {
    // Reduced rows are rebuilt from the chosen vectors, which is cheap at
    // these dimensions and keeps the rows a plain RREF of the prefix.
    chosen.pop_back();
    const auto keep = chosen;
    chosen.clear();
    reduced.clear();
    pivot.clear();
    for (auto w : keep) push(w);
  };

  auto dfs = [&](auto&& self, unsigned depth, std::size_t from) -> void {
    const auto* M = &masks[depth * W];
    auto* next = &masks[(depth + 1) * W];
    for (std::size_t pos = from; pos < P; ++pos) {
      const auto w = sp.order[pos];
      if (static_cast<std::int64_t>(sp.zero_count[w]) <= best) return;
      if (++nodes > budget) throw CapExceeded("search for d_" + std::to_string(r), nodes, budget);
      const auto* Z = &sp.zeros[std::size_t{w} * W];
      std::int64_t c = 0;
      for (std::size_t i = 0; i < W; ++i) {
        next[i] = M[i] & Z[i];
        c += std::popcount(next[i]);
      }
      if (c <= best) continue;
      if (!push(w)) continue;
      if (depth + 1 == r) {
        best = c;
        best_basis = chosen;
      } else {
        self(self, depth + 1, pos + 1);
      }
      pop();
    }
  };

  for (std::size_t pos = 0; pos < P; ++pos) {
    const auto u = sp.order[pos];
    if (!sp.representative[u]) continue;
    if (static_cast<std::int64_t>(sp.zero_count[u]) <= best) break;
    ++nodes;
    std::copy_n(&sp.zeros[std::size_t{u} * W], W, &masks[W]);
    push(u);
    if (r == 1) {
      best = sp.zero_count[u];
      best_basis = chosen;
    } else {
      // Later vectors have no more zeros than u; they start at the first
      // position whose zero count is at most u's.
      const auto first = std::partition_point(sp.order.begin(), sp.order.end(), [&](std::uint32_t w) {
        return sp.zero_count[w] > sp.zero_count[u];
      });
      dfs(dfs, 1, static_cast<std::size_t>(first - sp.order.begin()));
    }
    pop();
  }
  if (best < 0) throw InternalError("search found no subspace of dimension " + std::to_string(r));

  FqMatrix basis(r, k_);
  for (unsigned i = 0; i < r; ++i) std::copy(sp.vectors[best_basis[i]].begin(), sp.vectors[best_basis[i]].end(), basis.row(i).begin());
  RankResult res;
  res.r = r;
  res.method = OracleStrategy::kSearch;
  res.required = nodes;
  res.N = static_cast<std::uint64_t>(best);
  res.d = code_->length() - res.N;
  res.witness = span_of(S, std::move(basis));
  if (res.witness.dimension() != r) throw InternalError("search witness has the wrong dimension");
  res.seconds = seconds_since(start);
  return res;
}

RankResult ghw_bruteforce(const CyclicCode& code, unsigned r, const OracleOptions& opts) {
  HierarchyOracle oracle(code, opts);
  auto res = oracle.rank(r);
  if (res.skipped) {
    throw CapExceeded("d_" + std::to_string(r) + " of " + code.params().key(), res.required, opts.cap);
  }
  return res;
}

namespace {

FqMatrix gram_matrix(const CyclicCode& code) {
  const auto& F = code.field();
  const unsigned m = code.params().m, t = code.params().t;
  FqMatrix g(std::size_t{t} * m, std::size_t{t} * m);
  for (unsigned l = 0; l < m; ++l) {
    for (unsigned l2 = 0; l2 < m; ++l2) {
      const auto v = static_cast<Label>(
          F.base_label(F.trace(F.mul(code.basis().basis(l), code.basis().basis(l2)), TraceTarget::kBase)));
      for (unsigned j = 0; j < t; ++j) g.at(j * m + l, j * m + l2) = v;
    }
  }
  return g;
}

}  // namespace

Subspace dual_space(const CyclicCode& code, const Subspace& H) {
  const auto& S = code.base();
  const std::size_t k = code.dimension();
  if (H.dimension() == 0) {
    FqMatrix id(k, k);
    for (std::size_t i = 0; i < k; ++i) id.at(i, i) = 1;
    return span_of(S, std::move(id));
  }
  const auto g = gram_matrix(code);
  FqMatrix bg(H.dimension(), k);
  for (std::size_t i = 0; i < H.dimension(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      Label acc = 0;
      for (std::size_t j = 0; j < k; ++j) acc = S.add(acc, S.mul(H.basis.at(i, j), g.at(j, c)));
      bg.at(i, c) = acc;
    }
  }
  return span_of(S, nullspace(S, bg));
}

Label trace_form(const CyclicCode& code, std::span<const Label> x, std::span<const Label> y) {
  const auto& F = code.field();
  const auto a = code.to_field_vector(x), b = code.to_field_vector(y);
  FieldSpec::Code acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
  return static_cast<Label>(F.base_label(F.trace(acc, TraceTarget::kBase)));
}

bool indicator_identity_holds(const CyclicCode& code, const Subspace& H, std::span<const Label> x) {
  const auto& S = code.base();
  const auto dual = dual_space(code, H);
  CyclotomicInteger sum(S.p());
  for (const auto& y : elements(S, dual)) sum.accumulate(S.prime_trace(trace_form(code, x, y)), 1);
  sum.canonicalize();
  const std::int64_t expected =
      contains(S, H, x) ? static_cast<std::int64_t>(ipow(S.q(), static_cast<unsigned>(dual.dimension()))) : 0;
  return sum == CyclotomicInteger::integer(S.p(), expected);
}

std::uint64_t max_intersection_oracle(const FieldSpec& F, unsigned N, unsigned i, unsigned l, std::uint64_t cap) {
  if (N == 0 || F.group_order() % N != 0) throw InvalidArgument("N must divide Q-1");
  if (i >= N) throw InvalidArgument("class index out of range");
  if (l > F.m()) throw InvalidArgument("l exceeds m");
  const SmallField S(F);
  const SubfieldBasis basis(F, S, F.primitive_code());
  auto it = enumerate_subspaces(S, F.m(), l, cap);
  std::uint64_t best = 0;
  while (it.next()) {
    std::uint64_t hits = 0;
    for (const auto& v : elements(S, it.current_subspace())) {
      const auto x = basis.element(v);
      if (x != 0 && F.log(x) % N == i) ++hits;
    }
    best = std::max(best, hits);
  }
  return best;
}

}  // namespace ghwlab
