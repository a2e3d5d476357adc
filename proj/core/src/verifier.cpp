#include "ghwlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include "ghwlab/error.hpp"
#include "json.hpp"

namespace ghwlab {

namespace {

using Clock = std::chrono::steady_clock;
using json = nlohmann::ordered_json;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// q = p^s, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const auto primes = prime_divisors(q);
  if (primes.size() != 1) return std::nullopt;
  unsigned s = 0;
  for (std::uint64_t x = q; x > 1; x /= primes[0]) ++s;
  return std::pair{static_cast<std::uint32_t>(primes[0]), s};
}

// Residues a in [0, Q-2] with (Q-1)/gcd(a, Q-1) <= max_n.
std::vector<std::int64_t> a_range(std::uint64_t group, std::uint64_t max_n) {
  std::vector<bool> keep(group, false);
  for (auto d : divisors(group)) {
    if (group / d > max_n) continue;
    for (std::uint64_t a = 0; a < group; a += d) keep[a] = true;
  }
  std::vector<std::int64_t> out;
  for (std::uint64_t a = 0; a < group; ++a) {
    if (keep[a]) out.push_back(static_cast<std::int64_t>(a));
  }
  return out;
}

// Calls fn on every (0, d_2, ..., d_t) with 0 < d_2 < ... < d_t < e.
template <class Fn>
void for_each_delta(std::uint64_t e, unsigned t, Fn&& fn) {
  std::vector<std::int64_t> delta(t, 0);
  if (t == 1) {
    fn(delta);
    return;
  }
  if (e < t) return;
  for (unsigned i = 1; i < t; ++i) delta[i] = i;
  while (true) {
    fn(delta);
    unsigned i = t - 1;
    while (i >= 1 && delta[i] == static_cast<std::int64_t>(e) - static_cast<std::int64_t>(t - i)) --i;
    if (i == 0) return;
    ++delta[i];
    for (unsigned j = i + 1; j < t; ++j) delta[j] = delta[j - 1] + 1;
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

// Uniform random subspace of F_q^k of dimension r.
Subspace random_subspace(const SmallField& S, std::size_t k, std::size_t r, std::mt19937_64& rng) {
  while (true) {
    FqMatrix m(r, k);
    for (auto& x : m.data) x = static_cast<SmallField::Label>(rng() % S.q());
    auto H = span_of(S, std::move(m));
    if (H.dimension() == r) return H;
  }
}

std::string describe_field(const FieldSpec& F) {
  std::ostringstream os;
  os << "f = " << F.polynomial_string() << ", gamma = " << F.format(F.primitive_code());
  return os.str();
}

}  // namespace

void ScanConfig::check() const {
  if (q_values.empty()) throw InvalidArgument("scan: no q values");
  for (auto q : q_values) {
    if (!prime_power(q)) throw InvalidArgument("scan: q = " + std::to_string(q) + " is not a prime power");
    if (q > 256) throw InvalidArgument("scan: q must be at most 256");
  }
  if (m_min < 1 || m_min > m_max) throw InvalidArgument("scan: empty m range");
  if (t_min < 1 || t_min > t_max) throw InvalidArgument("scan: empty t range");
  if (e_min < 1 || (e_max != 0 && e_max < e_min)) throw InvalidArgument("scan: empty e range");
  if (max_tm < 1 || max_n < 1 || max_Q < 2) throw InvalidArgument("scan: caps must be positive");
  if (cap < 1) throw InvalidArgument("scan: subspace cap must be positive");
  if (a_values && a_values->empty()) throw InvalidArgument("scan: empty a list");
}

std::uint64_t ScanTally::total_rejected() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : rejected) s += v;
  return s;
}

std::uint64_t ScanTally::total_filtered() const {
  std::uint64_t s = 0;
  for (const auto& [k, v] : filtered) s += v;
  return s;
}

ScanResult scan(const ScanConfig& config) {
  config.check();
  ScanResult out;
  auto& tally = out.tally;
  std::set<std::string> seen_keys;
  std::set<std::vector<std::uint64_t>> seen_codes;
  // Closed forms need N <= 2, and e delta | N(q-1) holds for every valid
  // tuple, so e | 2(q-1) unless unmatched codes are wanted.
  const bool formula_only = !config.include_unmatched;

  for (auto q : config.q_values) {
    const auto [p, s] = *prime_power(q);
    for (unsigned m = config.m_min; m <= config.m_max && m <= config.max_tm; ++m) {
      BigInt Qbig = big_pow(q, m);
      if (Qbig > config.max_Q) break;
      const auto Q = static_cast<std::uint64_t>(Qbig);
      const std::uint64_t group = Q - 1;
      if (group == 0) continue;
      const auto field = build_field(p, s, m);
      const auto as = config.a_values ? *config.a_values : a_range(group, config.max_n);

      const unsigned t_hi = std::min(config.t_max, config.max_tm / m);
      for (unsigned t = config.t_min; t <= t_hi; ++t) {
        for (auto e : divisors(group)) {
          if (e < std::max<std::uint64_t>(t, config.e_min)) continue;
          if (config.e_max != 0 && e > config.e_max) continue;
          if (e > config.max_n) continue;
          if (formula_only && (2 * (q - 1)) % e != 0) continue;
          for_each_delta(e, t, [&](const std::vector<std::int64_t>& delta) {
            for (auto a : as) {
              ++tally.candidates;
              CodeParams params{p, s, m, e, t, a, delta};
              const auto v = validate(*field, params);
              if (!v.ok()) {
                ++tally.rejected[assumption_id(v.rejections.front().assumption)];
                continue;
              }
              const auto d = derive(*field, params);
              if (d.n > config.max_n) {
                ++tally.filtered["n_above_max"];
                continue;
              }
              FormulaInputs in{q, m, e, t, d.delta, d.N, is_arithmetic_progression(delta, e)};
              const auto f = applicable_formula(in);
              if (f ? !config.suites.count(*f) : !config.include_unmatched) {
                ++tally.filtered["outside_suites"];
                continue;
              }
              canonicalize(params);
              if (!seen_keys.insert(params.key()).second) {
                ++tally.filtered["duplicate_key"];
                continue;
              }
              if (config.dedupe_equivalent) {
                std::vector<std::uint64_t> sig{q, m, e, t, d.delta, d.N, in.arithmetic_progression};
                std::vector<std::uint64_t> reps;
                for (auto ai : d.a) reps.push_back(cyclotomic_coset(static_cast<std::int64_t>(ai), q, group).representative);
                std::sort(reps.begin(), reps.end());
                sig.insert(sig.end(), reps.begin(), reps.end());
                if (!seen_codes.insert(sig).second) {
                  ++tally.filtered["equivalent"];
                  continue;
                }
              }
              ++tally.emitted;
              out.instances.push_back(std::move(params));
            }
          });
        }
      }
    }
  }
  return out;
}

std::optional<Formula> formula_for(const CyclicCode& code, std::string* reason) {
  return applicable_formula(FormulaInputs::of(code), reason);
}

std::vector<std::string> hierarchy_violations(const std::vector<std::uint64_t>& d, std::uint64_t n) {
  std::vector<std::string> out;
  const std::size_t k = d.size();
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t r = i + 1;
    if (i > 0 && d[i] <= d[i - 1]) {
      out.push_back("d_" + std::to_string(r) + " = " + std::to_string(d[i]) + " is not above d_" + std::to_string(r - 1) +
                    " = " + std::to_string(d[i - 1]));
    }
    if (d[i] > n) out.push_back("d_" + std::to_string(r) + " = " + std::to_string(d[i]) + " exceeds n = " + std::to_string(n));
    if (d[i] + k > n + r) {
      out.push_back("d_" + std::to_string(r) + " = " + std::to_string(d[i]) + " exceeds n - k + r = " +
                    std::to_string(n + r - k));
    }
  }
  return out;
}

std::uint64_t InstanceReport::disagreements() const {
  std::uint64_t bad = 0;
  for (const auto& rk : ranks) bad += rk.agree.has_value() && !*rk.agree;
  bad += eq1.mismatches;
  bad += profile_consistent.has_value() && !*profile_consistent;
  bad += kernel_profile_consistent.has_value() && !*kernel_profile_consistent;
  bad += lambda_nonzero.has_value() && !*lambda_nonzero;
  bad += sanity_violations.size();
  bad += gamma_invariant.has_value() && !*gamma_invariant;
  return bad;
}

std::uint64_t InstanceReport::skipped() const {
  return static_cast<std::uint64_t>(std::count_if(ranks.begin(), ranks.end(), [](const RankRecord& r) { return r.skipped; }));
}

InstanceReport verify_instance(const CyclicCode& code, const ScanConfig& config) {
  const auto start = Clock::now();
  InstanceReport rep;
  rep.params = code.params();
  canonicalize(rep.params);
  rep.delta = code.derived().delta;
  rep.n = code.length();
  rep.N = code.derived().N;
  rep.formula = formula_for(code, &rep.no_formula_reason);
  const auto in = FormulaInputs::of(code);
  const std::size_t k = code.dimension();
  const std::uint64_t q = code.base().q();

  HierarchyOracle oracle(code, OracleOptions{OracleStrategy::kAuto, config.cap, config.threads});
  const auto results = oracle.hierarchy();
  for (const auto& res : results) {
    RankRecord rec;
    rec.r = res.r;
    rec.skipped = res.skipped;
    rec.required = res.required;
    rec.route = to_string(res.method);
    rec.seconds = res.seconds;
    if (!res.skipped) {
      rec.d_oracle = res.d;
      rec.witness = res.witness;
    }
    if (rep.formula) {
      const auto fv = evaluate_formula(*rep.formula, in, res.r);
      rec.d_formula = static_cast<std::uint64_t>(fv.d);
      rec.branch = fv.branch;
      rec.explanation = fv.explanation;
      if (rec.d_oracle) rec.agree = *rec.d_oracle == *rec.d_formula;
    }
    rep.ranks.push_back(std::move(rec));
  }

  // Sanity on the computed ranks (skipped ranks are left out).
  std::vector<std::uint64_t> computed;
  std::vector<unsigned> computed_r;
  for (const auto& rk : rep.ranks) {
    if (rk.d_oracle) {
      computed.push_back(*rk.d_oracle);
      computed_r.push_back(rk.r);
    }
  }
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const unsigned r = computed_r[i];
    if (i > 0 && computed[i] <= computed[i - 1]) {
      rep.sanity_violations.push_back("d_" + std::to_string(r) + " is not above d_" + std::to_string(computed_r[i - 1]));
    }
    if (computed[i] > rep.n) rep.sanity_violations.push_back("d_" + std::to_string(r) + " exceeds n");
    if (computed[i] + k > rep.n + r) rep.sanity_violations.push_back("d_" + std::to_string(r) + " exceeds n - k + r");
  }

  // Gauss-period identity on seeded samples plus every witness. Subspaces
  // are kept to q^r <= 1024 elements because the identity sums over all of H.
  {
    GaussPeriodCounter gp(code);
    VanishingCounter vc(code, 0);
    auto check = [&](const Subspace& H) {
      ++rep.eq1.checked;
      if (gp.count(H) != vc.count(H)) {
        if (rep.eq1.mismatches++ == 0) rep.eq1.first_mismatch = H;
      }
    };
    std::size_t r_max = 0;
    for (std::uint64_t size = q; r_max < k && size <= 1024; size *= q) ++r_max;
    std::mt19937_64 rng(config.seed ^ fnv1a(rep.params.key()));
    if (r_max >= 1) {
      for (unsigned i = 0; i < config.eq1_samples; ++i) {
        const std::size_t r = 1 + rng() % r_max;
        check(random_subspace(code.base(), k, r, rng));
      }
    }
    for (const auto& rk : rep.ranks) {
      if (rk.d_oracle && ipow(q, rk.r) <= 1024) check(rk.witness);
    }
  }

  if (rep.formula) {
    bool ok = true;
    const BigInt Q = BigInt(code.params().Q());
    for (const auto& rk : rep.ranks) {
      const BigInt expected = BigInt(rep.n) - BigInt(*rk.d_formula);
      const BigInt qr = big_pow(q, rk.r);
      BigInt got;
      try {
        switch (*rep.formula) {
          case Formula::kTheorem1i: {
            const auto pm = profile_max_N1_et(in.t, in.m, q, rk.r);
            got = exact_div(Q * pm.value - BigInt(in.t) * qr, BigInt(in.t) * in.delta * qr);
            break;
          }
          case Formula::kTheorem1ii: {
            const auto pm = profile_max_N2(in.t, in.m, q, rk.r);
            got = exact_div(2 * pm.value, BigInt(in.t) * in.delta);
            break;
          }
          case Formula::kTheorem2: {
            const auto pm = profile_max_theorem2(in.e, in.t, in.m, q, rk.r);
            got = exact_div(Q * pm.value - BigInt(in.e) * qr, BigInt(in.e) * in.delta * qr);
            break;
          }
        }
      } catch (const Error&) {
        ok = false;
        continue;
      }
      ok = ok && got == expected;
    }
    rep.profile_consistent = ok;
  }

  if (rep.N == 1) {
    bool ok = true;
    for (const auto& rk : rep.ranks) {
      if (!rk.d_oracle) continue;
      const auto w = kernel_profile(code, rk.witness);
      ok = ok && count_from_kernel_profile(code, rk.r, w) == BigInt(rep.n - *rk.d_oracle);
    }
    rep.kernel_profile_consistent = ok;
  }

  if (code.params().e > code.params().t && in.arithmetic_progression) {
    bool ok = true;
    for (const auto& row : lambda_matrix(code)) {
      for (auto x : row) ok = ok && x != 0;
    }
    rep.lambda_nonzero = ok;
  }

  if (config.gamma_invariance) {
    const auto& p = code.params();
    const auto alt = alternative_field(p.p, p.s, p.m, &rep.gamma_alternative);
    const CyclicCode other(alt, code.params());
    const auto other_h = oracle_hierarchy(other, OracleOptions{OracleStrategy::kAuto, config.cap, config.threads});
    bool same = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (rep.ranks[i].d_oracle && other_h[i]) same = same && *rep.ranks[i].d_oracle == *other_h[i];
    }
    rep.gamma_invariant = same;
  }

  rep.seconds = seconds_since(start);
  return rep;
}

std::vector<std::optional<std::uint64_t>> oracle_hierarchy(const CyclicCode& code, const OracleOptions& opts) {
  HierarchyOracle oracle(code, opts);
  std::vector<std::optional<std::uint64_t>> out;
  for (const auto& res : oracle.hierarchy()) {
    out.push_back(res.skipped ? std::nullopt : std::optional<std::uint64_t>(res.d));
  }
  return out;
}

std::vector<std::uint64_t> eq1_hierarchy(const CyclicCode& code, std::uint64_t cap) {
  GaussPeriodCounter gp(code);
  std::vector<std::uint64_t> out;
  for (std::size_t r = 1; r <= code.dimension(); ++r) {
    auto it = enumerate_subspaces(code.base(), code.dimension(), r, cap);
    std::uint64_t best = 0;
    while (it.next()) best = std::max(best, gp.count(it.current_subspace()));
    out.push_back(code.length() - best);
  }
  return out;
}

FieldPtr alternative_field(std::uint32_t p, unsigned s, unsigned m, std::string* description) {
  FieldPtr alt;
  if (s * m >= 2) {
    try {
      alt = build_field(p, s, m, FieldOptions{.polynomial_rank = 1});
    } catch (const InvalidArgument&) {
    }
  }
  if (!alt) {
    try {
      alt = build_field(p, s, m, FieldOptions{.primitive_rank = 1});
    } catch (const InvalidArgument&) {
      alt = build_field(p, s, m);
    }
  }
  if (description != nullptr) *description = describe_field(*alt);
  return alt;
}

bool gamma_invariance_check(const CodeParams& params, const FieldPtr& alt, const OracleOptions& opts) {
  if (alt->p() != params.p || alt->degree() != params.s * params.m) {
    throw InvalidArgument("gamma_invariance_check: alternative field has a different order");
  }
  const auto base = build_field(params.p, params.s, params.m);
  const CyclicCode a(base, params), b(alt, params);
  auto ha = oracle_hierarchy(a, opts), hb = oracle_hierarchy(b, opts);
  for (std::size_t i = 0; i < ha.size(); ++i) {
    if (!ha[i] || !hb[i]) {
      throw CapExceeded("gamma_invariance_check: rank " + std::to_string(i + 1), 0, opts.cap);
    }
  }
  return ha == hb;
}

bool trace_code_matches_polynomial_code(const CyclicCode& code) {
  const auto& S = code.base();
  const std::size_t k = code.dimension();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= S.q();
  std::vector<std::vector<SmallField::Label>> trace_words;
  trace_words.reserve(total);
  std::vector<SmallField::Label> msg(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (auto& v : msg) {
      v = static_cast<SmallField::Label>(x % S.q());
      x /= S.q();
    }
    trace_words.push_back(code.codeword(code.to_field_vector(msg)));
  }
  auto poly_words = polynomial_code_words(code);
  std::sort(trace_words.begin(), trace_words.end());
  std::sort(poly_words.begin(), poly_words.end());
  if (std::adjacent_find(trace_words.begin(), trace_words.end()) != trace_words.end()) return false;
  if (trace_words != poly_words) return false;
  for (const auto& w : trace_words) {
    std::vector<SmallField::Label> shifted(w.size());
    std::rotate_copy(w.begin(), w.end() - 1, w.end(), shifted.begin());
    if (!std::binary_search(trace_words.begin(), trace_words.end(), shifted)) return false;
  }
  return true;
}

std::uint64_t VerificationReport::agreements() const {
  std::uint64_t n = 0;
  for (const auto& inst : instances) {
    for (const auto& rk : inst.ranks) n += rk.agree.value_or(false);
  }
  return n;
}

std::uint64_t VerificationReport::disagreements() const {
  std::uint64_t n = 0;
  for (const auto& inst : instances) n += inst.disagreements();
  return n;
}

std::uint64_t VerificationReport::skipped() const {
  std::uint64_t n = 0;
  for (const auto& inst : instances) n += inst.skipped();
  return n;
}

VerificationReport run_verification(const ScanConfig& config) {
  const auto start = Clock::now();
  VerificationReport rep;
  rep.config = config;
  auto sr = scan(config);
  rep.tally = sr.tally;
  std::map<std::tuple<std::uint32_t, unsigned, unsigned>, FieldPtr> fields;
  for (const auto& params : sr.instances) {
    auto& F = fields[{params.p, params.s, params.m}];
    if (!F) F = build_field(params.p, params.s, params.m);
    const CyclicCode code(F, params);
    rep.instances.push_back(verify_instance(code, config));
  }
  rep.seconds = seconds_since(start);
  return rep;
}

std::vector<std::vector<unsigned>> subspace_rows(const Subspace& H) {
  std::vector<std::vector<unsigned>> rows;
  for (std::size_t i = 0; i < H.basis.rows; ++i) {
    const auto row = H.basis.row(i);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

namespace {

json params_json(const CodeParams& p) {
  return json{{"p", p.p}, {"s", p.s}, {"m", p.m}, {"e", p.e}, {"t", p.t}, {"a", p.a}, {"delta", p.delta}};
}

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json instance_to_json(const InstanceReport& r, bool timings) {
  json ranks = json::array();
  for (const auto& rk : r.ranks) {
    json j{{"r", rk.r},
           {"skipped", rk.skipped},
           {"required", rk.required},
           {"route", rk.route},
           {"d_oracle", opt(rk.d_oracle)},
           {"d_formula", opt(rk.d_formula)},
           {"agree", opt(rk.agree)},
           {"branch", rk.branch},
           {"explanation", rk.explanation},
           {"witness", rk.d_oracle ? json(subspace_rows(rk.witness)) : json(nullptr)}};
    if (timings) j["seconds"] = rk.seconds;
    ranks.push_back(std::move(j));
  }
  json eq1{{"checked", r.eq1.checked},
           {"mismatches", r.eq1.mismatches},
           {"first_mismatch", r.eq1.first_mismatch ? json(subspace_rows(*r.eq1.first_mismatch)) : json(nullptr)}};
  json j{{"key", r.params.key()},
         {"params", params_json(r.params)},
         {"derived", {{"delta", r.delta}, {"n", r.n}, {"N", r.N}}},
         {"formula", r.formula ? json(to_string(*r.formula)) : json(nullptr)},
         {"no_formula_reason", r.formula ? json(nullptr) : json(r.no_formula_reason)},
         {"ranks", std::move(ranks)},
         {"eq1", std::move(eq1)},
         {"profile_consistent", opt(r.profile_consistent)},
         {"kernel_profile_consistent", opt(r.kernel_profile_consistent)},
         {"lambda_nonzero", opt(r.lambda_nonzero)},
         {"sanity_violations", r.sanity_violations},
         {"gamma_invariant", opt(r.gamma_invariant)},
         {"gamma_alternative", r.gamma_invariant ? json(r.gamma_alternative) : json(nullptr)},
         {"disagreements", r.disagreements()}};
  if (timings) j["seconds"] = r.seconds;
  return j;
}

json config_json(const ScanConfig& c) {
  json suites = json::array();
  for (auto f : c.suites) suites.push_back(to_string(f));
  return json{{"q_values", c.q_values},
              {"m", {c.m_min, c.m_max}},
              {"t", {c.t_min, c.t_max}},
              {"e", {c.e_min, c.e_max}},
              {"a_values", opt(c.a_values)},
              {"max_tm", c.max_tm},
              {"max_n", c.max_n},
              {"max_Q", c.max_Q},
              {"suites", suites},
              {"include_unmatched", c.include_unmatched},
              {"cap", c.cap},
              {"eq1_samples", c.eq1_samples},
              {"seed", c.seed},
              {"gamma_invariance", c.gamma_invariance},
              {"dedupe_equivalent", c.dedupe_equivalent}};
}

}  // namespace

std::string instance_json(const InstanceReport& r, int indent) {
  json j = instance_to_json(r, false);
  j = json{{"schema", kReportSchema}, {"instance", std::move(j)}};
  return j.dump(indent);
}

std::string report_json(const VerificationReport& r, int indent) {
  const bool timings = r.config.timings;
  json instances = json::array();
  std::uint64_t eq1_checked = 0, eq1_bad = 0;
  for (const auto& inst : r.instances) {
    instances.push_back(instance_to_json(inst, timings));
    eq1_checked += inst.eq1.checked;
    eq1_bad += inst.eq1.mismatches;
  }
  json j{{"schema", kReportSchema},
         {"config", config_json(r.config)},
         {"tally",
          {{"candidates", r.tally.candidates},
           {"emitted", r.tally.emitted},
           {"rejected", r.tally.rejected},
           {"filtered", r.tally.filtered}}},
         {"summary",
          {{"instances", r.instances.size()},
           {"agreements", r.agreements()},
           {"disagreements", r.disagreements()},
           {"skipped_ranks", r.skipped()},
           {"eq1_checked", eq1_checked},
           {"eq1_mismatches", eq1_bad}}},
         {"instances", std::move(instances)}};
  if (timings) j["seconds"] = r.seconds;
  return j.dump(indent);
}

std::string report_csv(const std::vector<InstanceReport>& rows) {
  std::ostringstream os;
  os << "p,s,m,e,t,a,delta,delta_list,n,N,r,d_oracle,d_formula,agree,method,seconds\n";
  for (const auto& inst : rows) {
    std::string dl;
    for (std::size_t i = 0; i < inst.params.delta.size(); ++i) {
      if (i) dl += ';';
      dl += std::to_string(inst.params.delta[i]);
    }
    const auto& p = inst.params;
    for (const auto& rk : inst.ranks) {
      os << p.p << ',' << p.s << ',' << p.m << ',' << p.e << ',' << p.t << ',' << p.a << ',' << inst.delta << ',' << dl
         << ',' << inst.n << ',' << inst.N << ',' << rk.r << ',';
      if (rk.d_oracle) os << *rk.d_oracle;
      os << ',';
      if (rk.d_formula) os << *rk.d_formula;
      os << ',';
      if (rk.agree) os << (*rk.agree ? "true" : "false");
      os << ',' << (inst.formula ? to_string(*inst.formula) : std::string("oracle")) << ',' << rk.seconds << '\n';
    }
  }
  return os.str();
}

}  // namespace ghwlab
