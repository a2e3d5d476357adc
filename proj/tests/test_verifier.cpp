#include <gtest/gtest.h>

#include <set>

#include "ghwlab/verifier.hpp"
#include "json.hpp"

namespace ghwlab {
namespace {

CyclicCode make(const CodeParams& p) { return CyclicCode(build_field(p.p, p.s, p.m), p); }

ScanConfig small_grid() {
  ScanConfig c;
  c.q_values = {2, 3};
  c.m_max = 3;
  c.t_max = 2;
  c.max_tm = 4;
  c.max_n = 30;
  c.eq1_samples = 10;
  c.threads = 1;
  return c;
}

TEST(Scan, SimplexFamily) {
  ScanConfig c;
  c.q_values = {2};
  c.m_min = c.m_max = 3;
  c.t_min = c.t_max = 1;
  c.e_max = 1;
  const auto res = scan(c);
  ASSERT_EQ(res.instances.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(res.instances[i].a, static_cast<std::int64_t>(i + 1));
}

TEST(Scan, NoValidTuplesForQ3M2E4T3) {
  ScanConfig c;
  c.q_values = {3};
  c.m_min = c.m_max = 2;
  c.t_min = c.t_max = 3;
  c.e_min = c.e_max = 4;
  c.include_unmatched = true;
  const auto res = scan(c);
  EXPECT_TRUE(res.instances.empty());
  EXPECT_GT(res.tally.total_rejected(), 0u);
}

TEST(Scan, TallyIdentityAndUniqueKeys) {
  auto c = small_grid();
  c.include_unmatched = true;
  const auto res = scan(c);
  const auto& t = res.tally;
  EXPECT_EQ(t.candidates, t.emitted + t.total_rejected() + t.total_filtered());
  EXPECT_EQ(t.emitted, res.instances.size());
  std::set<std::string> keys;
  for (const auto& p : res.instances) EXPECT_TRUE(keys.insert(p.key()).second) << p.key();
  for (const auto& p : res.instances) EXPECT_TRUE(validate(*build_field(p.p, p.s, p.m), p).ok());
}

TEST(Scan, DedupeOnlyShrinks) {
  auto c = small_grid();
  const auto all = scan(c);
  c.dedupe_equivalent = true;
  const auto few = scan(c);
  EXPECT_LT(few.instances.size(), all.instances.size());
  EXPECT_GT(few.tally.filtered.at("equivalent"), 0u);
}

TEST(Scan, RejectsBadConfig) {
  ScanConfig c;
  c.m_min = 3;
  c.m_max = 2;
  EXPECT_THROW(scan(c), InvalidArgument);
}

TEST(Verify, ThreeInstancesAgree) {
  ScanConfig c = small_grid();
  for (const auto& p : std::vector<CodeParams>{{3, 1, 2, 2, 2, 1, {0, 1}}, {7, 1, 2, 3, 2, 1, {0, 1}}, {3, 1, 3, 2, 2, 1, {0, 1}}}) {
    const auto rep = verify_instance(make(p), c);
    ASSERT_TRUE(rep.formula.has_value()) << p.key();
    EXPECT_EQ(rep.disagreements(), 0u);
    EXPECT_EQ(rep.skipped(), 0u);
    EXPECT_TRUE(rep.sanity_violations.empty());
    EXPECT_EQ(rep.eq1.mismatches, 0u);
    EXPECT_GT(rep.eq1.checked, 0u);
    EXPECT_EQ(rep.profile_consistent, true);
    for (const auto& rr : rep.ranks) EXPECT_EQ(rr.agree, true);
    if (rep.N == 1) EXPECT_EQ(rep.kernel_profile_consistent, true);
  }
}

TEST(Verify, SanityViolations) {
  EXPECT_TRUE(hierarchy_violations({4, 6, 7}, 7).empty());
  EXPECT_FALSE(hierarchy_violations({4, 4, 7}, 7).empty());
  EXPECT_FALSE(hierarchy_violations({6, 7, 8}, 7).empty());
}

TEST(Verify, Eq1HierarchyMatchesOracle) {
  const auto code = make({3, 1, 2, 2, 2, 1, {0, 1}});
  EXPECT_EQ(eq1_hierarchy(code, 100000), (std::vector<std::uint64_t>{2, 4, 6, 8}));
  EXPECT_THROW(eq1_hierarchy(code, 10), CapExceeded);
}

TEST(Gamma, InvarianceAcrossConstructions) {
  const CodeParams params{3, 1, 2, 2, 2, 1, {0, 1}};
  EXPECT_TRUE(gamma_invariance_check(params, build_field(3, 1, 2)));
  std::string desc;
  const auto alt = alternative_field(3, 1, 2, &desc);
  EXPECT_FALSE(desc.empty());
  EXPECT_TRUE(gamma_invariance_check(params, alt));
  EXPECT_THROW(gamma_invariance_check(params, build_field(3, 1, 3)), InvalidArgument);
}

TEST(Gamma, TraceCodeIsPolynomialCode) {
  for (const auto& p : std::vector<CodeParams>{{2, 1, 3, 1, 1, 3, {0}}, {3, 1, 2, 2, 2, 1, {0, 1}}, {2, 2, 2, 3, 2, 1, {0, 1}}})
    EXPECT_TRUE(trace_code_matches_polynomial_code(make(p))) << p.key();
}

TEST(Report, JsonDeterministicAndWellFormed) {
  ScanConfig c;
  c.q_values = {2, 3};
  c.m_max = 2;
  c.t_max = 2;
  c.max_tm = 4;
  c.max_n = 20;
  c.eq1_samples = 5;
  const auto a = report_json(run_verification(c));
  c.threads = 3;
  const auto b = report_json(run_verification(c));
  EXPECT_EQ(a, b);
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("summary").at("disagreements"), 0);
  EXPECT_EQ(j.at("summary").at("instances"), j.at("instances").size());
  EXPECT_FALSE(j.at("instances").empty());
  EXPECT_FALSE(j.at("instances")[0].contains("seconds"));
}

TEST(Report, CsvHeaderAndRows) {
  ScanConfig c = small_grid();
  const auto rep = verify_instance(make({2, 1, 3, 1, 1, 1, {0}}), c);
  const auto csv = report_csv({rep});
  const auto header = csv.substr(0, csv.find('\n'));
  EXPECT_EQ(header, "p,s,m,e,t,a,delta,delta_list,n,N,r,d_oracle,d_formula,agree,method,seconds");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  EXPECT_NE(csv.find("2,1,3,1,1,1,1,0,7,1,1,4,4,true,theorem1i,"), std::string::npos) << csv;
}

}  // namespace
}  // namespace ghwlab
