// ghwlab: construct codes of the family, print weight hierarchies, verify the
// closed forms against brute force and scan parameter grids.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghwlab/verifier.hpp"
#include "json.hpp"

namespace {

using namespace ghwlab;
using json = nlohmann::ordered_json;

enum Exit : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kRejected = 3,
  kCapExceeded = 4,
  kInternal = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceFlags {
  std::uint32_t p = 0;
  unsigned s = 1, m = 0, t = 1;
  std::uint64_t e = 1;
  std::int64_t a = 1;
  std::vector<std::int64_t> delta;
  unsigned poly_rank = 0, gamma_rank = 0;
};

struct Common {
  std::string format = "table";
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::string config_path;
  std::string output_path;
  bool explain = false;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& f, bool code_params) {
  cmd->add_option("--p", f.p, "characteristic")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--s", f.s, "q = p^s")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--m", f.m, "Q = q^m")->required()->check(CLI::PositiveNumber);
  if (code_params) {
    cmd->add_option("--e", f.e, "index of the subgroup generated by beta")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--t", f.t, "number of nonzeroes")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--a", f.a, "exponent, reduced mod Q-1")->capture_default_str();
    cmd->add_option("--delta", f.delta, "comma-separated residues mod e (default 0 when t = 1)")->delimiter(',');
  }
  cmd->add_option("--poly-rank", f.poly_rank, "use the k-th irreducible polynomial (0 = smallest)");
  cmd->add_option("--gamma-rank", f.gamma_rank, "use the k-th primitive element (0 = smallest)");
}

void add_common_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}))->capture_default_str();
  cmd->add_option("--cap", c.cap, "subspace / flat enumeration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "seed for the sampled Gauss-period checks");
  cmd->add_option("--threads", c.threads, "worker threads (0 = all cores)");
  cmd->add_option("--config", c.config_path, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--output,-o", c.output_path, "write the report to a file instead of stdout");
  cmd->add_flag("--explain", c.explain, "show the formula branch chosen at each rank");
}

std::uint64_t parse_env_u64(const char* name) {
  const char* v = std::getenv(name);
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(name);
    return x;
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be a non-negative integer, got '" + v + "'");
  }
}

std::optional<Formula> parse_suite(const std::string& s) {
  for (auto f : {Formula::kTheorem1i, Formula::kTheorem1ii, Formula::kTheorem2}) {
    if (s == to_string(f)) return f;
  }
  if (s == "1i") return Formula::kTheorem1i;
  if (s == "1ii") return Formula::kTheorem1ii;
  if (s == "2") return Formula::kTheorem2;
  return std::nullopt;
}

// Config file keys mirror the "config" object of the JSON report.
void apply_config_file(const std::string& path, ScanConfig& c) {
  std::ifstream in(path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError("config " + path + ": expected a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "q_values") c.q_values = v.get<std::vector<std::uint64_t>>();
      else if (key == "m") std::tie(c.m_min, c.m_max) = v.get<std::pair<unsigned, unsigned>>();
      else if (key == "t") std::tie(c.t_min, c.t_max) = v.get<std::pair<unsigned, unsigned>>();
      else if (key == "e") std::tie(c.e_min, c.e_max) = v.get<std::pair<std::uint64_t, std::uint64_t>>();
      else if (key == "a_values") {
        if (v.is_null()) c.a_values.reset();
        else c.a_values = v.get<std::vector<std::int64_t>>();
      }
      else if (key == "max_tm") c.max_tm = v.get<unsigned>();
      else if (key == "max_n") c.max_n = v.get<std::uint64_t>();
      else if (key == "max_Q") c.max_Q = v.get<std::uint64_t>();
      else if (key == "suites") {
        c.suites.clear();
        for (const auto& s : v.get<std::vector<std::string>>()) {
          const auto f = parse_suite(s);
          if (!f) throw UsageError("config " + path + ": unknown suite '" + s + "'");
          c.suites.insert(*f);
        }
      }
      else if (key == "include_unmatched") c.include_unmatched = v.get<bool>();
      else if (key == "cap") c.cap = v.get<std::uint64_t>();
      else if (key == "threads") c.threads = v.get<unsigned>();
      else if (key == "eq1_samples") c.eq1_samples = v.get<unsigned>();
      else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "gamma_invariance") c.gamma_invariance = v.get<bool>();
      else if (key == "dedupe_equivalent") c.dedupe_equivalent = v.get<bool>();
      else if (key == "timings") c.timings = v.get<bool>();
      else throw UsageError("config " + path + ": unknown key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw UsageError("config " + path + ": " + e.what());
  }
}

// Precedence: defaults < config file < environment < flags.
ScanConfig make_config(const Common& c) {
  ScanConfig cfg;
  if (!c.config_path.empty()) apply_config_file(c.config_path, cfg);
  if (std::getenv("GHWLAB_CAP_SUBSPACES")) cfg.cap = parse_env_u64("GHWLAB_CAP_SUBSPACES");
  if (std::getenv("GHWLAB_SEED")) cfg.seed = parse_env_u64("GHWLAB_SEED");
  if (c.cap) cfg.cap = *c.cap;
  if (c.seed) cfg.seed = *c.seed;
  if (c.threads) cfg.threads = *c.threads;
  try {
    cfg.check();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

FieldPtr make_field(const InstanceFlags& f) {
  FieldOptions opts;
  opts.polynomial_rank = f.poly_rank;
  opts.primitive_rank = f.gamma_rank;
  try {
    return build_field(f.p, f.s, f.m, opts);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

CodeParams make_params(const InstanceFlags& f) {
  CodeParams params{f.p, f.s, f.m, f.e, f.t, f.a, f.delta};
  if (params.delta.empty() && f.t == 1) params.delta = {0};
  return params;
}

// Prints every violated assumption and returns the rejection exit code.
int report_rejection(const Validation& v) {
  for (const auto& r : v.rejections) {
    std::cerr << "rejected [" << assumption_id(r.assumption) << "]: " << r.message << "\n";
  }
  return kRejected;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string hierarchy_string(const InstanceReport& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.ranks.size(); ++i) {
    if (i) s += ",";
    s += r.ranks[i].d_oracle ? std::to_string(*r.ranks[i].d_oracle) : "?";
  }
  return s + ")";
}

json params_json(const CodeParams& p) {
  return json{{"p", p.p}, {"s", p.s}, {"m", p.m}, {"e", p.e}, {"t", p.t}, {"a", p.a}, {"delta", p.delta}};
}

// ---- field ----------------------------------------------------------------

// Element code sum c_i p^i printed as the polynomial sum c_i x^i.
std::string as_polynomial(const FieldSpec& F, FieldSpec::Code a) {
  std::vector<std::uint32_t> c;
  for (; a != 0; a /= F.p()) c.push_back(a % F.p());
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

int run_field(const InstanceFlags& f, const Common& c, unsigned periods_N) {
  const auto F = make_field(f);
  Output out(c.output_path);
  auto& os = out.os();
  std::vector<std::pair<std::string, std::string>> rows{
      {"p", std::to_string(F->p())},
      {"s", std::to_string(F->s())},
      {"m", std::to_string(F->m())},
      {"q", std::to_string(F->q())},
      {"Q", std::to_string(F->order())},
      {"polynomial", F->polynomial_string()},
      {"gamma", as_polynomial(*F, F->primitive_code())},
  };
  std::optional<GaussPeriodTable> table;
  if (periods_N != 0) {
    if ((F->order() - 1) % periods_N != 0 || ((F->order() - 1) / (F->q() - 1)) % periods_N != 0) {
      throw UsageError("--periods N must divide (Q-1)/(q-1)");
    }
    table.emplace(*F, periods_N);
  }
  if (c.format == "json") {
    json j{{"schema", kReportSchema},
           {"p", F->p()},
           {"s", F->s()},
           {"m", F->m()},
           {"q", F->q()},
           {"Q", F->order()},
           {"polynomial", F->polynomial_string()},
           {"gamma", as_polynomial(*F, F->primitive_code())}};
    if (table) {
      json per = json::array();
      for (std::uint32_t i = 0; i < periods_N; ++i) per.push_back(table->at_class(i).to_string());
      j["gauss_periods"] = {{"N", periods_N}, {"eta", per}};
    }
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << '"' << v << '"' << "\n";
    if (table) {
      for (std::uint32_t i = 0; i < periods_N; ++i) os << "eta_" << i << ",\"" << table->at_class(i).to_string() << "\"\n";
    }
  } else {
    for (const auto& [k, v] : rows) os << std::left << std::setw(12) << k << v << "\n";
    if (table) {
      for (std::uint32_t i = 0; i < periods_N; ++i) {
        os << std::left << std::setw(12) << ("eta_" + std::to_string(i)) << table->at_class(i).to_string() << "\n";
      }
    }
  }
  return kOk;
}

// ---- code -----------------------------------------------------------------

int run_code(const InstanceFlags& f, const Common& c) {
  const auto F = make_field(f);
  auto params = make_params(f);
  const auto v = validate(*F, params);
  if (!v.ok()) return report_rejection(v);
  const CyclicCode code(F, params);
  const auto& d = code.derived();
  std::string reason;
  const auto formula = formula_for(code, &reason);
  const auto in = FormulaInputs::of(code);

  std::vector<std::string> minpolys;
  for (const auto& mp : code.minimal_polys()) minpolys.push_back(poly_to_string(*F, mp.poly));

  Output out(c.output_path);
  auto& os = out.os();
  std::vector<std::pair<std::string, std::string>> rows{
      {"key", code.params().key()},
      {"q", std::to_string(code.params().q())},
      {"Q", std::to_string(code.params().Q())},
      {"a_i", join(std::vector<std::int64_t>(d.a.begin(), d.a.end()))},
      {"delta", std::to_string(d.delta)},
      {"n", std::to_string(d.n)},
      {"k", std::to_string(code.dimension())},
      {"N", std::to_string(d.N)},
      {"beta", F->format(d.beta)},
      {"g", F->format(d.g)},
      {"arithmetic_progression", in.arithmetic_progression ? "true" : "false"},
      {"parity_check", poly_to_string(*F, code.parity_check_poly())},
      {"generator", poly_to_string(*F, code.generator_poly())},
      {"formula", formula ? to_string(*formula) : "none (" + reason + ")"},
  };
  if (c.format == "json") {
    json j{{"schema", kReportSchema},
           {"params", params_json(code.params())},
           {"a_i", d.a},
           {"derived", {{"delta", d.delta}, {"n", d.n}, {"k", code.dimension()}, {"N", d.N}}},
           {"beta", F->format(d.beta)},
           {"g", F->format(d.g)},
           {"arithmetic_progression", in.arithmetic_progression},
           {"minimal_polynomials", minpolys},
           {"parity_check", poly_to_string(*F, code.parity_check_poly())},
           {"generator", poly_to_string(*F, code.generator_poly())},
           {"formula", formula ? json(to_string(*formula)) : json(nullptr)},
           {"no_formula_reason", formula ? json(nullptr) : json(reason)},
           {"gcd_vacuous", v.gcd_vacuous},
           {"n_at_most_sqrt_q", v.n_at_most_sqrt_q ? json(*v.n_at_most_sqrt_q) : json(nullptr)}};
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, val] : rows) os << k << ",\"" << val << "\"\n";
  } else {
    for (const auto& [k, val] : rows) os << std::left << std::setw(24) << k << val << "\n";
    for (std::size_t i = 0; i < minpolys.size(); ++i) {
      os << std::left << std::setw(24) << ("h_a" + std::to_string(i + 1)) << minpolys[i] << "\n";
    }
  }
  return kOk;
}

// ---- ghw ------------------------------------------------------------------

struct GhwRow {
  unsigned r = 0;
  std::optional<std::uint64_t> d;
  std::string method;
  std::uint64_t required = 0;
  std::string branch, explanation;
};

int run_ghw(const InstanceFlags& f, const Common& c, const std::string& method) {
  const auto cfg = make_config(c);
  const auto F = make_field(f);
  auto params = make_params(f);
  const auto v = validate(*F, params);
  if (!v.ok()) return report_rejection(v);
  const CyclicCode code(F, params);
  const auto in = FormulaInputs::of(code);

  std::vector<GhwRow> rows;
  std::optional<Formula> formula;
  std::string reason;
  formula = formula_for(code, &reason);
  if (method == "formula") {
    if (!formula) {
      std::cerr << "no closed form applies: " << reason << "\n";
      return kRejected;
    }
    for (unsigned r = 1; r <= code.dimension(); ++r) {
      const auto fv = evaluate_formula(*formula, in, r);
      rows.push_back({r, static_cast<std::uint64_t>(fv.d), to_string(*formula), 0, fv.branch, fv.explanation});
    }
  } else if (method == "eq1") {
    const auto h = eq1_hierarchy(code, cfg.cap);
    for (unsigned r = 1; r <= h.size(); ++r) rows.push_back({r, h[r - 1], "eq1", 0, "", ""});
  } else {
    OracleOptions opts{OracleStrategy::kAuto, cfg.cap, cfg.threads};
    if (method == "subspaces") opts.strategy = OracleStrategy::kSubspaces;
    if (method == "flats") opts.strategy = OracleStrategy::kFlats;
    HierarchyOracle oracle(code, opts);
    for (const auto& res : oracle.hierarchy()) {
      GhwRow row{res.r, std::nullopt, to_string(res.method), res.required, "", ""};
      if (!res.skipped) row.d = res.d;
      if (formula) {
        const auto fv = evaluate_formula(*formula, in, res.r);
        row.branch = fv.branch;
        row.explanation = fv.explanation;
      }
      rows.push_back(std::move(row));
    }
  }
  const bool skipped = std::any_of(rows.begin(), rows.end(), [](const GhwRow& r) { return !r.d; });

  Output out(c.output_path);
  auto& os = out.os();
  if (c.format == "json") {
    json ranks = json::array();
    for (const auto& r : rows) {
      json j{{"r", r.r}, {"d", r.d ? json(*r.d) : json(nullptr)}, {"method", r.d ? json(r.method) : json("skipped")}};
      if (!r.d) j["required"] = r.required;
      if (c.explain && !r.branch.empty()) {
        j["branch"] = r.branch;
        j["explanation"] = r.explanation;
      }
      ranks.push_back(std::move(j));
    }
    json j{{"schema", kReportSchema},
           {"params", params_json(code.params())},
           {"derived", {{"delta", code.derived().delta}, {"n", code.length()}, {"k", code.dimension()}, {"N", code.derived().N}}},
           {"hierarchy", std::move(ranks)}};
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "r,d,method" << (c.explain ? ",branch,explanation" : "") << "\n";
    for (const auto& r : rows) {
      os << r.r << ',' << (r.d ? std::to_string(*r.d) : "") << ',' << (r.d ? r.method : "skipped");
      if (c.explain) os << ',' << r.branch << ",\"" << r.explanation << '"';
      os << "\n";
    }
  } else {
    os << "n = " << code.length() << ", k = " << code.dimension() << ", N = " << code.derived().N << "\n";
    os << std::left << std::setw(4) << "r" << std::setw(8) << "d_r" << "method\n";
    for (const auto& r : rows) {
      os << std::left << std::setw(4) << r.r << std::setw(8) << (r.d ? std::to_string(*r.d) : "-")
         << (r.d ? r.method : "skipped (" + std::to_string(r.required) + " > cap)");
      if (c.explain && !r.branch.empty()) os << "  [" << r.branch << "] " << r.explanation;
      os << "\n";
    }
  }
  if (skipped) {
    std::cerr << "cap exceeded: some ranks were skipped (cap " << cfg.cap << ")\n";
    return kCapExceeded;
  }
  return kOk;
}

// ---- verify / scan ----------------------------------------------------------

void print_instance_table(std::ostream& os, const InstanceReport& r, bool explain) {
  os << "instance " << r.params.key() << "\n";
  os << "  delta = " << r.delta << ", n = " << r.n << ", N = " << r.N
     << ", formula = " << (r.formula ? to_string(*r.formula) : "none (" + r.no_formula_reason + ")") << "\n";
  os << "  " << std::left << std::setw(4) << "r" << std::setw(10) << "d_oracle" << std::setw(11) << "d_formula"
     << std::setw(7) << "agree" << "route\n";
  for (const auto& rk : r.ranks) {
    os << "  " << std::left << std::setw(4) << rk.r << std::setw(10) << (rk.d_oracle ? std::to_string(*rk.d_oracle) : "-")
       << std::setw(11) << (rk.d_formula ? std::to_string(*rk.d_formula) : "-") << std::setw(7)
       << (rk.agree ? (*rk.agree ? "yes" : "NO") : "-") << (rk.skipped ? "skipped" : rk.route);
    if (explain && !rk.branch.empty()) os << "  [" << rk.branch << "] " << rk.explanation;
    os << "\n";
  }
  os << "  eq1 spot checks: " << r.eq1.checked << ", mismatches: " << r.eq1.mismatches << "\n";
  auto flag = [&](const char* name, const std::optional<bool>& v) {
    if (v) os << "  " << name << ": " << (*v ? "ok" : "FAILED") << "\n";
  };
  flag("profile check", r.profile_consistent);
  flag("kernel-profile check", r.kernel_profile_consistent);
  flag("lambda nonzero", r.lambda_nonzero);
  flag("gamma invariance", r.gamma_invariant);
  for (const auto& s : r.sanity_violations) os << "  sanity: " << s << "\n";
}

int verdict(std::uint64_t disagreements, std::uint64_t skipped) {
  if (disagreements != 0) {
    std::cerr << disagreements << " disagreement(s)\n";
    return kDisagreement;
  }
  if (skipped != 0) {
    std::cerr << "cap exceeded: " << skipped << " rank(s) skipped\n";
    return kCapExceeded;
  }
  return kOk;
}

int run_verify(const InstanceFlags& f, const Common& c, bool gamma) {
  auto cfg = make_config(c);
  cfg.gamma_invariance = cfg.gamma_invariance || gamma;
  const auto F = make_field(f);
  auto params = make_params(f);
  const auto v = validate(*F, params);
  if (!v.ok()) return report_rejection(v);
  const CyclicCode code(F, params);
  const auto rep = verify_instance(code, cfg);

  Output out(c.output_path);
  auto& os = out.os();
  if (c.format == "json") {
    os << instance_json(rep) << "\n";
  } else if (c.format == "csv") {
    os << report_csv({rep});
  } else {
    print_instance_table(os, rep, c.explain);
    os << (rep.disagreements() == 0 ? "result: all agree" : "result: DISAGREEMENT") << " " << hierarchy_string(rep) << "\n";
  }
  return verdict(rep.disagreements(), rep.skipped());
}

struct ScanFlags {
  std::vector<std::uint64_t> q_values;
  std::vector<unsigned> m_range, t_range;
  std::vector<std::uint64_t> e_range;
  std::vector<std::int64_t> a_values;
  std::optional<unsigned> max_tm, eq1_samples;
  std::optional<std::uint64_t> max_n;
  std::vector<std::string> suites;
  bool include_unmatched = false, gamma = false, dedupe = false, timings = false, list_only = false;
};

int run_scan(const ScanFlags& s, const Common& c) {
  auto cfg = make_config(c);
  if (!s.q_values.empty()) cfg.q_values = s.q_values;
  if (!s.m_range.empty()) std::tie(cfg.m_min, cfg.m_max) = std::pair{s.m_range.front(), s.m_range.back()};
  if (!s.t_range.empty()) std::tie(cfg.t_min, cfg.t_max) = std::pair{s.t_range.front(), s.t_range.back()};
  if (!s.e_range.empty()) std::tie(cfg.e_min, cfg.e_max) = std::pair{s.e_range.front(), s.e_range.back()};
  if (!s.a_values.empty()) cfg.a_values = s.a_values;
  if (s.max_tm) cfg.max_tm = *s.max_tm;
  if (s.max_n) cfg.max_n = *s.max_n;
  if (s.eq1_samples) cfg.eq1_samples = *s.eq1_samples;
  if (!s.suites.empty()) {
    cfg.suites.clear();
    for (const auto& name : s.suites) {
      const auto f = parse_suite(name);
      if (!f) throw UsageError("unknown suite '" + name + "' (expected 1i, 1ii or 2)");
      cfg.suites.insert(*f);
    }
  }
  cfg.include_unmatched = cfg.include_unmatched || s.include_unmatched;
  cfg.gamma_invariance = cfg.gamma_invariance || s.gamma;
  cfg.dedupe_equivalent = cfg.dedupe_equivalent || s.dedupe;
  cfg.timings = cfg.timings || s.timings;
  try {
    cfg.check();
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }

  Output out(c.output_path);
  auto& os = out.os();
  if (s.list_only) {
    const auto sr = scan(cfg);
    if (c.format == "json") {
      json list = json::array();
      for (const auto& p : sr.instances) list.push_back(params_json(p));
      json j{{"schema", kReportSchema},
             {"tally",
              {{"candidates", sr.tally.candidates},
               {"emitted", sr.tally.emitted},
               {"rejected", sr.tally.rejected},
               {"filtered", sr.tally.filtered}}},
             {"instances", std::move(list)}};
      os << j.dump(2) << "\n";
    } else if (c.format == "csv") {
      os << "p,s,m,e,t,a,delta_list\n";
      for (const auto& p : sr.instances) {
        std::string dl = join(p.delta);
        std::replace(dl.begin(), dl.end(), ',', ';');
        os << p.p << ',' << p.s << ',' << p.m << ',' << p.e << ',' << p.t << ',' << p.a << ',' << dl << "\n";
      }
    } else {
      for (const auto& p : sr.instances) os << p.key() << "\n";
      os << sr.tally.emitted << " of " << sr.tally.candidates << " candidates emitted\n";
    }
    return kOk;
  }

  const auto rep = run_verification(cfg);
  if (c.format == "json") {
    os << report_json(rep) << "\n";
  } else if (c.format == "csv") {
    os << report_csv(rep.instances);
  } else {
    for (const auto& inst : rep.instances) {
      os << std::left << std::setw(72) << inst.params.key() << std::setw(12)
         << (inst.formula ? to_string(*inst.formula) : "oracle") << hierarchy_string(inst)
         << (inst.disagreements() ? "  DISAGREE" : "") << (inst.skipped() ? "  (skipped ranks)" : "") << "\n";
      if (c.explain || inst.disagreements()) print_instance_table(os, inst, c.explain);
    }
    os << "candidates " << rep.tally.candidates << ", emitted " << rep.tally.emitted << ", rejected "
       << rep.tally.total_rejected() << ", filtered " << rep.tally.total_filtered() << "\n";
    for (const auto& [id, n] : rep.tally.rejected) os << "  rejected " << id << ": " << n << "\n";
    for (const auto& [id, n] : rep.tally.filtered) os << "  filtered " << id << ": " << n << "\n";
    os << "agreements " << rep.agreements() << ", disagreements " << rep.disagreements() << ", skipped ranks "
       << rep.skipped() << "\n";
  }
  return verdict(rep.disagreements(), rep.skipped());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Hamming weights of a family of reducible cyclic codes"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "ghwlab 0.1.0");

  Common common;
  InstanceFlags inst;
  unsigned periods_N = 0;
  std::string method = "auto";
  bool gamma = false;
  ScanFlags sf;

  auto* field_cmd = app.add_subcommand("field", "describe the field F_Q built for (p, s, m)");
  add_instance_flags(field_cmd, inst, false);
  add_common_flags(field_cmd, common);
  field_cmd->add_option("--periods", periods_N, "also print the Gauss periods of order N");

  auto* code_cmd = app.add_subcommand("code", "validate parameters and print the derived code data");
  add_instance_flags(code_cmd, inst, true);
  add_common_flags(code_cmd, common);

  auto* ghw_cmd = app.add_subcommand("ghw", "print the weight hierarchy");
  add_instance_flags(ghw_cmd, inst, true);
  add_common_flags(ghw_cmd, common);
  ghw_cmd->add_option("--method", method, "auto, subspaces or flats (brute force), eq1 (Gauss periods), formula")
      ->check(CLI::IsMember({"auto", "subspaces", "flats", "eq1", "formula"}))
      ->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "compare brute force, Gauss periods and the closed form");
  add_instance_flags(verify_cmd, inst, true);
  add_common_flags(verify_cmd, common);
  verify_cmd->add_flag("--gamma", gamma, "also compare against another construction of F_Q");

  auto* scan_cmd = app.add_subcommand("scan", "verify every instance of a parameter grid");
  add_common_flags(scan_cmd, common);
  scan_cmd->add_option("--q", sf.q_values, "comma-separated q values")->delimiter(',');
  scan_cmd->add_option("--m-range", sf.m_range, "min,max")->delimiter(',')->expected(2);
  scan_cmd->add_option("--t-range", sf.t_range, "min,max")->delimiter(',')->expected(2);
  scan_cmd->add_option("--e-range", sf.e_range, "min,max (max 0: no bound)")->delimiter(',')->expected(2);
  scan_cmd->add_option("--a", sf.a_values, "comma-separated a values")->delimiter(',');
  scan_cmd->add_option("--max-tm", sf.max_tm, "bound on the dimension tm");
  scan_cmd->add_option("--max-n", sf.max_n, "bound on the length n");
  scan_cmd->add_option("--eq1-samples", sf.eq1_samples, "random subspaces per instance for the Gauss-period check");
  scan_cmd->add_option("--suite", sf.suites, "1i, 1ii, 2 (comma-separated; default all)")->delimiter(',');
  scan_cmd->add_flag("--include-unmatched", sf.include_unmatched, "also verify codes no closed form covers");
  scan_cmd->add_flag("--gamma", sf.gamma, "compare against another construction of F_Q");
  scan_cmd->add_flag("--dedupe", sf.dedupe, "skip codes equal to an earlier one");
  scan_cmd->add_flag("--timings", sf.timings, "include timings in the JSON report");
  scan_cmd->add_flag("--list", sf.list_only, "only list the instances, do not verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (field_cmd->parsed()) return run_field(inst, common, periods_N);
    if (code_cmd->parsed()) return run_code(inst, common);
    if (ghw_cmd->parsed()) return run_ghw(inst, common, method);
    if (verify_cmd->parsed()) return run_verify(inst, common, gamma);
    return run_scan(sf, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParamsRejected& e) {
    return report_rejection(e.validation());
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const HypothesisError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
