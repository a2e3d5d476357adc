#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ghwlab/code.hpp"
#include "ghwlab/ghw.hpp"
#include "ghwlab/theorems.hpp"

namespace ghwlab {

// Parameter grid and budgets for scan / verification.
//
// The grid is every (q, m, e, t, a, Delta) with q in q_values, m in
// [m_min, m_max], t in [t_min, t_max], t*m <= max_tm, Q <= max_Q, e a divisor
// of Q-1 in [max(t, e_min), e_max], Delta = (0, Delta_2, ..., Delta_t) with
// 0 < Delta_2 < ... < Delta_t < e, and a in [0, Q-2] restricted to residues
// with (Q-1)/gcd(a, Q-1) <= max_n (larger ones cannot give n <= max_n).
// Fixing Delta_1 = 0 and sorting loses nothing: shifting Delta is the same as
// changing a, and permuting Delta permutes the code's blocks.
struct ScanConfig {
  std::vector<std::uint64_t> q_values{2, 3, 4, 5, 7, 8, 9};
  unsigned m_min = 1, m_max = 8;
  unsigned t_min = 1, t_max = 8;
  std::uint64_t e_min = 1, e_max = 0;  // e_max 0: bounded by max_n only
  std::optional<std::vector<std::int64_t>> a_values;  // overrides the a range
  unsigned max_tm = 8;
  std::uint64_t max_n = 80;
  std::uint64_t max_Q = std::uint64_t{1} << 20;

  std::set<Formula> suites{Formula::kTheorem1i, Formula::kTheorem1ii, Formula::kTheorem2};
  bool include_unmatched = false;  // also emit codes no closed form covers

  std::uint64_t cap = 200000;
  unsigned threads = 0;
  unsigned eq1_samples = 100;
  std::uint64_t seed = 20160101;
  bool gamma_invariance = false;
  // Drop instances whose code and closed-form inputs repeat an earlier one
  // (same multiset of q-cyclotomic cosets of the a_i).
  bool dedupe_equivalent = false;
  // Include wall-clock seconds in JSON (they break byte-identical output).
  bool timings = false;

  // Throws InvalidArgument for empty ranges or non-positive caps.
  void check() const;
};

struct ScanTally {
  std::uint64_t candidates = 0;
  std::uint64_t emitted = 0;
  // Each rejected tuple counts once, under its first violated assumption.
  std::map<std::string, std::uint64_t> rejected;
  // Valid tuples left out: "n_above_max", "outside_suites", "equivalent".
  std::map<std::string, std::uint64_t> filtered;
  std::uint64_t total_rejected() const;
  std::uint64_t total_filtered() const;
};

struct ScanResult {
  std::vector<CodeParams> instances;
  ScanTally tally;
};

// Deterministic: instances come out in grid order (q, m, t, e, Delta, a).
ScanResult scan(const ScanConfig& config);

// Which formula (if any) covers a code.
std::optional<Formula> formula_for(const CyclicCode& code, std::string* reason = nullptr);

// Violations of d_1 < ... < d_k <= n and d_r <= n - k + r; empty if sane.
std::vector<std::string> hierarchy_violations(const std::vector<std::uint64_t>& d, std::uint64_t n);

struct RankRecord {
  unsigned r = 0;
  bool skipped = false;
  std::uint64_t required = 0;
  std::optional<std::uint64_t> d_oracle;
  std::optional<std::uint64_t> d_formula;
  std::optional<bool> agree;
  std::string route;  // oracle route, "flats" or "subspaces"
  std::string branch;
  std::string explanation;
  Subspace witness;
  double seconds = 0;
};

struct Eq1Check {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<Subspace> first_mismatch;
};

struct InstanceReport {
  CodeParams params;
  std::uint64_t delta = 0, n = 0, N = 0;
  std::optional<Formula> formula;
  std::string no_formula_reason;
  std::vector<RankRecord> ranks;
  Eq1Check eq1;
  // Closed-form profile values reproduce n - d_r; empty when no formula.
  std::optional<bool> profile_consistent;
  // For N = 1: the kernel-profile count equals N(H) on every witness.
  std::optional<bool> kernel_profile_consistent;
  // e > t with an arithmetic-progression Delta: every lambda_{h,i} != 0.
  std::optional<bool> lambda_nonzero;
  std::vector<std::string> sanity_violations;
  std::optional<bool> gamma_invariant;
  std::string gamma_alternative;
  double seconds = 0;

  std::uint64_t disagreements() const;
  std::uint64_t skipped() const;
};

InstanceReport verify_instance(const CyclicCode& code, const ScanConfig& config);

// Hierarchy of each rank by the oracle; skipped ranks are nullopt.
std::vector<std::optional<std::uint64_t>> oracle_hierarchy(const CyclicCode& code, const OracleOptions& opts);

// Hierarchy obtained by maximizing the Gauss-period count over every
// subspace; throws CapExceeded when a rank has more than `cap` subspaces.
std::vector<std::uint64_t> eq1_hierarchy(const CyclicCode& code, std::uint64_t cap);

// Another construction of F_{p^(sm)}: the next irreducible polynomial, or the
// next primitive element when there is only one polynomial choice.
FieldPtr alternative_field(std::uint32_t p, unsigned s, unsigned m, std::string* description = nullptr);

// True iff the oracle hierarchies of `params` over the default field and over
// `alt` coincide. Throws InvalidArgument if alt has a different order, and
// CapExceeded if some rank is over the cap.
bool gamma_invariance_check(const CodeParams& params, const FieldPtr& alt, const OracleOptions& opts = {});

// The trace code equals the code generated by g(x) = (x^n - 1)/h(x), as sets,
// and is closed under cyclic shifts. Enumerates all q^(tm) codewords.
bool trace_code_matches_polynomial_code(const CyclicCode& code);

struct VerificationReport {
  ScanConfig config;
  ScanTally tally;
  std::vector<InstanceReport> instances;
  double seconds = 0;

  std::uint64_t agreements() const;
  std::uint64_t disagreements() const;
  std::uint64_t skipped() const;
};

VerificationReport run_verification(const ScanConfig& config);

// Serialization. The JSON schema is documented in docs/report-schema.md.
inline constexpr const char* kReportSchema = "ghwlab.report/1";
std::string instance_json(const InstanceReport& r, int indent = 2);
std::string report_json(const VerificationReport& r, int indent = 2);
std::string report_csv(const std::vector<InstanceReport>& rows);

// Subspace basis as a list of label rows.
std::vector<std::vector<unsigned>> subspace_rows(const Subspace& H);

}  // namespace ghwlab
