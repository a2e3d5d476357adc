// Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ghwlab/verifier.hpp"

using namespace ghwlab;

namespace {

using Hier = std::vector<std::uint64_t>;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  Outcome outcome(const std::string& extra) const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!extra.empty()) os << ", " << extra;
    if (failures_) os << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0 && checks_ > 0, os.str()};
  }

 private:
  std::uint64_t checks_ = 0, failures_ = 0;
  std::string first_;
};

CyclicCode make(const CodeParams& p) { return CyclicCode(build_field(p.p, p.s, p.m), p); }

Hier oracle_of(const InstanceReport& r) {
  Hier d;
  for (const auto& rk : r.ranks) d.push_back(rk.d_oracle.value_or(0));
  return d;
}

std::string show(const Hier& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

ScanConfig suite(Formula f, unsigned max_tm) {
  ScanConfig c;
  c.suites = {f};
  c.max_tm = max_tm;
  c.max_n = 80;
  c.eq1_samples = 100;
  return c;
}

// Reports from the three theorem suites, kept for criteria 5, 9 and 10.
std::map<Formula, VerificationReport> g_reports;

Outcome run_suite(Formula f, unsigned max_tm, const CodeParams& anchor, const Hier& expected) {
  auto rep = run_verification(suite(f, max_tm));
  Check c;
  bool found = false;
  for (const auto& inst : rep.instances) {
    c.expect(inst.formula == f, inst.params.key() + " formula");
    c.expect(inst.skipped() == 0, inst.params.key() + " skipped rank");
    for (const auto& rk : inst.ranks)
      c.expect(rk.agree == true, inst.params.key() + " r=" + std::to_string(rk.r) + " oracle != formula");
    if (inst.params == anchor) {
      found = true;
      c.expect(oracle_of(inst) == expected, "anchor hierarchy " + show(oracle_of(inst)));
    }
  }
  c.expect(found, "anchor " + anchor.key() + " missing from the grid");
  std::ostringstream extra;
  extra << rep.instances.size() << " instances, " << rep.agreements() << " rank agreements";
  g_reports[f] = std::move(rep);
  return c.outcome(extra.str());
}

Outcome criterion1() {
  Check c;
  const CodeParams p{2, 1, 3, 1, 1, 1, {0}};
  const auto code = make(p);
  const Hier expected{4, 6, 7};
  Hier oracle, formula;
  HierarchyOracle o(code);
  for (const auto& rk : o.hierarchy()) oracle.push_back(rk.d);
  const auto in = FormulaInputs::of(code);
  for (unsigned r = 1; r <= 3; ++r) formula.push_back(saturate_u64(theorem1_formula(in, r).d));
  c.expect(oracle == expected, "oracle " + show(oracle));
  c.expect(eq1_hierarchy(code, 1000) == expected, "eq1");
  c.expect(formula == expected, "formula " + show(formula));
  return c.outcome("hierarchy (4,6,7)");
}

Outcome criterion5() {
  Check c;
  std::uint64_t sampled = 0, instances = 0;
  for (const auto& [f, rep] : g_reports) {
    for (const auto& inst : rep.instances) {
      ++instances;
      sampled += inst.eq1.checked;
      c.expect(inst.eq1.checked >= 100, inst.params.key() + " fewer than 100 samples");
      c.expect(inst.eq1.mismatches == 0, inst.params.key() + " eq1 mismatch");
    }
  }
  ScanConfig cfg;
  cfg.q_values = {3};
  cfg.m_min = cfg.m_max = 2;
  cfg.t_min = cfg.t_max = 2;
  cfg.include_unmatched = true;
  std::uint64_t exhaustive = 0;
  const auto grid = scan(cfg);
  c.expect(!grid.instances.empty(), "no q=3, m=2, t=2 instances");
  for (const auto& p : grid.instances) {
    const auto code = make(p);
    VanishingCounter vc(code, 0);
    GaussPeriodCounter gp(code);
    for (std::size_t r = 0; r <= code.dimension(); ++r) {
      SubspaceEnumerator it(code.base(), code.dimension(), r);
      while (it.next()) {
        ++exhaustive;
        c.expect(gp.count(it.current_subspace()) == vc.count(it.current()), p.key() + " exhaustive eq1");
      }
    }
  }
  std::ostringstream extra;
  extra << sampled << " sampled over " << instances << " instances, " << exhaustive << " exhaustive over "
        << grid.instances.size() << " instances";
  return c.outcome(extra.str());
}

Outcome criterion6() {
  Check c;
  struct F {
    std::uint32_t p;
    unsigned s, m;
  };
  for (const auto& f : {F{3, 1, 2}, F{5, 1, 2}, F{3, 1, 4}, F{3, 2, 2}}) {
    const auto field = build_field(f.p, f.s, f.m);
    const std::uint64_t q = field->q();
    for (unsigned l = 0; l <= f.m; ++l) {
      const auto expected = f_of_l(q, f.m, l);
      for (unsigned i = 0; i < 2; ++i) {
        const auto got = max_intersection_oracle(*field, 2, i, l, 1000000);
        c.expect(BigInt(got) == expected, "Q=" + std::to_string(field->order()) + " q=" + std::to_string(q) +
                                              " l=" + std::to_string(l) + " i=" + std::to_string(i));
      }
    }
  }
  return c.outcome("Q in {9, 25, 81(q=3), 81(q=9)}");
}

Outcome criterion7() {
  Check c;
  for (std::uint64_t q : {3, 5, 7, 9}) {
    for (unsigned m : {2u, 4u, 6u}) {
      BigInt prev = 0;
      for (unsigned l = 1; l <= m; ++l) {
        const BigInt g = f_of_l(q, m, l) - f_of_l(q, m, l - 1);
        c.expect(g >= prev, "g not nondecreasing q=" + std::to_string(q) + " m=" + std::to_string(m));
        prev = g;
      }
    }
  }
  const std::uint64_t q = 3;
  for (unsigned t = 1; t <= 3; ++t) {
    for (unsigned m : {2u, 4u}) {
      for (unsigned sum = 0; sum <= t * m; ++sum) {
        const auto ps = profiles_with_sum(t, m, sum);
        for (std::size_t a = 0; a < ps.size(); ++a) {
          for (std::size_t b = a + 1; b < ps.size(); ++b) {
            c.expect(profile_dominates(ps[a], ps[b]), "enumeration order");
            c.expect(profile_f_sum(q, m, ps[a]) >= profile_f_sum(q, m, ps[b]), "sum f not monotone along the order");
          }
          for (unsigned i = 1; i <= t; ++i) {
            for (unsigned j = i + 1; j <= t; ++j) {
              Profile next;
              try {
                next = exchange_step(ps[a], i, j, m);
              } catch (const InvalidArgument&) {
                continue;
              }
              c.expect(profile_f_sum(q, m, next) >= profile_f_sum(q, m, ps[a]), "exchange step decreased sum f");
            }
          }
        }
      }
    }
  }
  return c.outcome("");
}

Outcome criterion8() {
  Check c;
  std::uint64_t fields = 0;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u, 73u, 79u}) {
    for (unsigned m = 1; ipow(p, m) <= 81; ++m) {
      const auto F = build_field(p, 1, m);
      const std::int64_t Q = F->order();
      ++fields;
      for (FieldSpec::Code a = 0; a < F->order(); ++a) {
        const auto eta = gauss_period_bruteforce(*F, 1, a);
        c.expect(eta.is_rational() && eta.rational_value() == (a == 0 ? Q - 1 : -1),
                 "N=1 period Q=" + std::to_string(Q) + " a=" + std::to_string(a));
      }
      for (auto N : divisors(F->group_order())) {
        CyclotomicInteger total(p);
        for (std::uint32_t i = 0; i < N; ++i) total += gauss_period_bruteforce(*F, static_cast<std::uint32_t>(N), F->antilog(i));
        total.canonicalize();
        c.expect(total == CyclotomicInteger::integer(p, -1), "sum of periods Q=" + std::to_string(Q) + " N=" + std::to_string(N));
      }
    }
  }
  struct Fq {
    std::uint32_t p;
    unsigned s, m;
  };
  for (const auto& f : {Fq{3, 1, 2}, Fq{5, 1, 2}, Fq{7, 1, 2}, Fq{3, 1, 4}, Fq{3, 2, 2}}) {
    const auto F = build_field(f.p, f.s, f.m);
    const auto eta0 = gauss_period_bruteforce(*F, 2, 1);
    const auto eta1 = gauss_period_bruteforce(*F, 2, F->primitive_code());
    auto diff = eta0 - eta1;
    diff.canonicalize();
    const auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(F->order()))));
    const auto G = quadratic_gauss_sum(f.p, f.s * f.m);
    const std::int64_t closed = G.sign * root;
    const std::int64_t from_j = (gauss_sum_sign_j(*F) ? -1 : 1) * root;
    const std::string tag = "Q=" + std::to_string(F->order()) + " q=" + std::to_string(F->q());
    c.expect(!G.imaginary, tag + " imaginary Gauss sum");
    c.expect(diff.is_rational() && diff.rational_value() == closed, tag + " eta0-eta1 vs closed form");
    c.expect(closed == from_j, tag + " sign j");
  }
  return c.outcome(std::to_string(fields) + " fields with Q <= 81");
}

Outcome criterion9() {
  Check c;
  std::uint64_t hierarchies = 0;
  for (const auto& [f, rep] : g_reports) {
    for (const auto& inst : rep.instances) {
      const auto d = oracle_of(inst);
      const std::uint64_t n = inst.n, k = d.size();
      ++hierarchies;
      c.expect(inst.sanity_violations.empty(), inst.params.key() + " sanity");
      for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t r = i + 1;
        c.expect(i == 0 || d[i] > d[i - 1], inst.params.key() + " not strictly increasing");
        c.expect(d[i] <= n, inst.params.key() + " d_r > n");
        c.expect(d[i] + k <= n + r, inst.params.key() + " d_r > n - tm + r");
      }
      c.expect(d.back() == n, inst.params.key() + " d_k != n");
    }
  }
  ScanConfig cfg;
  cfg.include_unmatched = true;
  cfg.max_tm = 6;
  std::uint64_t traced = 0;
  for (const auto& p : scan(cfg).instances) {
    if (ipow(p.q(), p.t * p.m) > 729) continue;
    ++traced;
    c.expect(trace_code_matches_polynomial_code(make(p)), p.key() + " trace code != polynomial code");
  }
  return c.outcome(std::to_string(hierarchies) + " hierarchies, " + std::to_string(traced) + " trace codes");
}

Outcome criterion10() {
  Check c;
  ScanConfig cfg;
  cfg.include_unmatched = true;
  cfg.max_tm = 6;
  std::uint64_t n = 0;
  for (const auto& p : scan(cfg).instances) {
    if (p.e <= p.t || !is_arithmetic_progression(p.delta, p.e)) continue;
    ++n;
    const auto L = lambda_matrix(make(p));
    c.expect(L.size() == p.e - p.t, p.key() + " lambda shape");
    for (const auto& row : L)
      for (auto x : row) c.expect(x != 0, p.key() + " zero lambda");
  }
  for (const auto& inst : g_reports[Formula::kTheorem2].instances)
    c.expect(inst.lambda_nonzero == true, inst.params.key() + " lambda_nonzero");
  return c.outcome(std::to_string(n) + " AP instances with e > t");
}

Outcome criterion11() {
  Check c;
  const std::vector<std::pair<CodeParams, Formula>> cases{
      {{2, 1, 3, 1, 1, 1, {0}}, Formula::kTheorem1i},      {{3, 1, 3, 2, 2, 1, {0, 1}}, Formula::kTheorem1i},
      {{3, 1, 2, 2, 2, 1, {0, 1}}, Formula::kTheorem1ii},  {{5, 1, 2, 2, 2, 1, {0, 1}}, Formula::kTheorem1ii},
      {{7, 1, 2, 3, 2, 1, {0, 1}}, Formula::kTheorem2},    {{2, 2, 2, 3, 2, 1, {0, 1}}, Formula::kTheorem2},
  };
  std::set<Formula> covered;
  for (const auto& [p, f] : cases) {
    c.expect(applicable_formula(FormulaInputs::of(make(p))) == f, p.key() + " formula");
    covered.insert(f);
    const auto alt = alternative_field(p.p, p.s, p.m);
    c.expect(gamma_invariance_check(p, alt), p.key() + " hierarchies differ");
  }
  c.expect(covered.size() == 3, "theorem coverage");
  return c.outcome(std::to_string(cases.size()) + " instances");
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  struct Criterion {
    int id;
    std::string name;
    double limit;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "simplex baseline", 1, criterion1},
      {2, "theorem 1(i) suite", 300,
       [] { return run_suite(Formula::kTheorem1i, 8, {3, 1, 3, 2, 2, 1, {0, 1}}, {9, 12, 13, 22, 25, 26}); }},
      {3, "theorem 1(ii) suite", 120,
       [] { return run_suite(Formula::kTheorem1ii, 6, {3, 1, 2, 2, 2, 1, {0, 1}}, {2, 4, 6, 8}); }},
      {4, "theorem 2 suite", 180,
       [] { return run_suite(Formula::kTheorem2, 6, {7, 1, 2, 3, 2, 1, {0, 1}}, {28, 32, 46, 48}); }},
      {5, "gauss-period identity", 0, criterion5},
      {6, "max-intersection oracle", 120, criterion6},
      {7, "profile order properties", 0, criterion7},
      {8, "gauss machinery", 0, criterion8},
      {9, "structural invariants", 0, criterion9},
      {10, "lambda nonvanishing", 0, criterion10},
      {11, "gamma invariance", 0, criterion11},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double sec = std::chrono::duration<double>(Clock::now() - start).count();
    if (cr.limit > 0 && sec > cr.limit) {
      o.pass = false;
      o.detail += ", over the " + std::to_string(static_cast<int>(cr.limit)) + " s limit";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", cr.id, cr.name.c_str(), sec,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
