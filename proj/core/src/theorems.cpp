#include "ghwlab/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ghwlab/error.hpp"

namespace ghwlab {

BigInt f_of_l(std::uint64_t q, unsigned m, unsigned l) {
  if (l > m) throw InvalidArgument("f(l): l must lie in [0, m]");
  if (2 * l <= m) return big_pow(q, l) - 1;
  if (m % 2 != 0) throw InvalidArgument("f(l): l > m/2 requires m even");
  return exact_div(big_pow(q, l) - 1 + big_pow(q, m / 2) - big_pow(q, l - m / 2), 2);
}

bool is_profile(const Profile& l, unsigned m) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] > m) return false;
    if (i > 0 && l[i] > l[i - 1]) return false;
  }
  return true;
}

unsigned profile_sum(const Profile& l) { return std::accumulate(l.begin(), l.end(), 0u); }

bool profile_dominates(const Profile& a, const Profile& b) {
  if (a.size() != b.size()) throw InvalidArgument("profiles of different length");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

namespace {

void fill_profiles(unsigned t, unsigned cap, unsigned sum, Profile& prefix, std::vector<Profile>& out) {
  if (prefix.size() == t) {
    if (sum == 0) out.push_back(prefix);
    return;
  }
  const unsigned slots = t - static_cast<unsigned>(prefix.size());
  for (unsigned v = std::min(cap, sum) + 1; v-- > 0;) {
    if (std::uint64_t{v} * slots < sum) break;
    prefix.push_back(v);
    fill_profiles(t, v, sum - v, prefix, out);
    prefix.pop_back();
  }
}

BigInt q_pow(std::uint64_t q, std::int64_t exp) {
  if (exp < 0) throw InternalError("negative exponent in closed form");
  return big_pow(q, static_cast<unsigned>(exp));
}

unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

void check_rank(unsigned t, unsigned m, unsigned r) {
  if (r < 1 || r > t * m) throw InvalidArgument("rank r must lie in [1, tm]");
}

}  // namespace

std::vector<Profile> profiles_with_sum(unsigned t, unsigned m, unsigned sum) {
  std::vector<Profile> out;
  Profile prefix;
  fill_profiles(t, m, sum, prefix, out);
  return out;
}

BigInt profile_f_sum(std::uint64_t q, unsigned m, const Profile& l) {
  BigInt total = 0;
  for (auto x : l) total += f_of_l(q, m, x);
  return total;
}

Profile exchange_step(const Profile& l, unsigned i, unsigned j, unsigned m) {
  const unsigned t = static_cast<unsigned>(l.size());
  if (!is_profile(l, m)) throw InvalidArgument("exchange_step: input is not a profile");
  if (i < 1 || i >= j || j > t) throw InvalidArgument("exchange_step: need 1 <= i < j <= t");
  const unsigned above = i == 1 ? m : l[i - 2];
  if (l[i - 1] >= above) throw InvalidArgument("exchange_step: l_i must be below l_{i-1}");
  if (l[j - 1] < 1) throw InvalidArgument("exchange_step: l_j must be at least 1");
  if (j < t && l[j - 1] - 1 < l[j]) throw InvalidArgument("exchange_step: lowering l_j breaks monotonicity");
  Profile out = l;
  ++out[i - 1];
  --out[j - 1];
  return out;
}

ProfileMax profile_max_N1_et(unsigned t, unsigned m, std::uint64_t q, unsigned r) {
  if (t < 1 || t > q - 1) throw HypothesisError("profile_max_N1_et requires 1 <= t <= q - 1");
  check_rank(t, m, r);
  const unsigned s = t - ceil_div(r, m);
  ProfileMax out;
  out.s = s;
  out.profile.assign(s, r);
  out.profile.push_back((t - s - 1) * m);
  for (unsigned h = s + 1; h < t; ++h) out.profile.push_back(r - m);
  out.value = BigInt(s) * big_pow(q, r) + big_pow(q, (t - s - 1) * m);
  if (s + 1 < t) out.value += BigInt(t - s - 1) * big_pow(q, r - m);
  return out;
}

ProfileMax profile_max_N2(unsigned t, unsigned m, std::uint64_t q, unsigned r) {
  if (q % 2 == 0) throw HypothesisError("profile_max_N2 requires q odd");
  if (m % 2 != 0) throw HypothesisError("profile_max_N2 requires m even");
  if (t < 1) throw InvalidArgument("profile_max_N2 requires t >= 1");
  check_rank(t, m, r);
  const unsigned rp = t * m - r;
  const unsigned s = rp / m;
  ProfileMax out;
  out.s = s;
  out.profile.assign(s, m);
  out.profile.push_back(rp - s * m);
  out.profile.resize(t, 0);
  out.value = profile_f_sum(q, m, out.profile);
  return out;
}

ProfileMax profile_max_theorem2(std::uint64_t e, unsigned t, unsigned m, std::uint64_t q, unsigned r) {
  if (t < 1 || e <= t) throw HypothesisError("profile_max_theorem2 requires e > t >= 1");
  if (e > q - 1) throw HypothesisError("profile_max_theorem2 requires e <= q - 1");
  check_rank(t, m, r);
  const unsigned s = t - ceil_div(r, m);
  ProfileMax out;
  out.s = s;
  out.profile.assign(s, r);
  if (s + 1 < t) {
    out.profile.push_back((t - s - 1) * m);
    out.profile.resize(e, r - m);
    out.value = BigInt(s) * big_pow(q, r) + big_pow(q, (t - s - 1) * m) + BigInt(e - s - 1) * big_pow(q, r - m);
  } else {
    out.profile.resize(e, 0);
    out.value = BigInt(s) * big_pow(q, r) + BigInt(e - s);
  }
  return out;
}

std::string to_string(Formula f) {
  switch (f) {
    case Formula::kTheorem1i:
      return "theorem1i";
    case Formula::kTheorem1ii:
      return "theorem1ii";
    case Formula::kTheorem2:
      return "theorem2";
  }
  return "unknown";
}

FormulaInputs FormulaInputs::of(const CyclicCode& code) {
  FormulaInputs in;
  in.q = code.params().q();
  in.m = code.params().m;
  in.e = code.params().e;
  in.t = code.params().t;
  in.delta = code.derived().delta;
  in.N = code.derived().N;
  in.arithmetic_progression = is_arithmetic_progression(code.params().delta, code.params().e);
  return in;
}

FormulaValue theorem1_formula(const FormulaInputs& in, unsigned r) {
  if (in.e != in.t) throw HypothesisError("closed form for e = t applied with e != t");
  if (in.N != 1 && in.N != 2) throw HypothesisError("closed form for e = t needs N in {1, 2}, got N = " + std::to_string(in.N));
  check_rank(in.t, in.m, r);
  const std::uint64_t q = in.q;
  const unsigned m = in.m, t = in.t;
  const unsigned s = t - ceil_div(r, m);
  const BigInt qm1 = big_pow(q, m) - 1;
  const BigInt den = BigInt(t) * in.delta;

  FormulaValue out;
  out.r = r;
  out.s = s;
  std::ostringstream why;
  why << "s = " << s << " since (t-s-1)m = " << (t - s - 1) * m << " < r = " << r << " <= (t-s)m = " << (t - s) * m;
  if (in.N == 1) {
    if (t > q - 1) throw HypothesisError("closed form for N = 1, e = t needs t <= q - 1");
    out.formula = Formula::kTheorem1i;
    out.branch = "N=1";
    out.d = exact_div(qm1 * (t - s) - (q_pow(q, std::int64_t{t - s} * m - r) - 1), den);
  } else {
    if (q % 2 == 0) throw HypothesisError("closed form for N = 2 needs q odd");
    if (m % 2 != 0) throw HypothesisError("closed form for N = 2 needs m even");
    out.formula = Formula::kTheorem1ii;
    const std::int64_t l = std::int64_t{t - s} * m - r;
    const std::int64_t half = m / 2;
    const std::uint64_t lhs = 2ull * r, rhs = (2ull * (t - s) - 1) * m;
    if (lhs <= rhs) {
      out.branch = "N=2, lower half";
      why << "; 2r = " << lhs << " <= (2(t-s)-1)m = " << rhs;
      out.d = exact_div(qm1 * (t - s) - (q_pow(q, l - half) + 1) * (q_pow(q, half) - 1), den);
    } else {
      out.branch = "N=2, upper half";
      why << "; 2r = " << lhs << " > (2(t-s)-1)m = " << rhs;
      out.d = exact_div(qm1 * (t - s) - 2 * (q_pow(q, l) - 1), den);
    }
  }
  out.explanation = why.str();
  return out;
}

FormulaValue theorem1_formula(const CyclicCode& code, unsigned r) {
  return theorem1_formula(FormulaInputs::of(code), r);
}

FormulaValue theorem2_formula(const FormulaInputs& in, unsigned r) {
  if (in.t < 1 || in.e <= in.t) throw HypothesisError("closed form for e > t applied with e <= t");
  if (in.N != 1) throw HypothesisError("closed form for e > t needs N = 1, got N = " + std::to_string(in.N));
  if (!in.arithmetic_progression) throw HypothesisError("closed form for e > t needs Delta to be an arithmetic progression mod e");
  check_rank(in.t, in.m, r);
  const std::uint64_t q = in.q, e = in.e;
  const unsigned m = in.m, t = in.t;
  const BigInt qm1 = big_pow(q, m) - 1;
  const BigInt den = BigInt(e) * in.delta;

  FormulaValue out;
  out.formula = Formula::kTheorem2;
  out.r = r;
  std::ostringstream why;
  if (r <= m) {
    out.s = t - 1;
    out.branch = "r <= m";
    why << "r = " << r << " <= m = " << m;
    out.d = exact_div(BigInt(e - t + 1) * (qm1 - (q_pow(q, std::int64_t{m} - r) - 1)), den);
  } else {
    const unsigned s = t - ceil_div(r, m);
    out.s = s;
    out.branch = "r > m";
    why << "s = " << s << " since (t-s-1)m = " << (t - s - 1) * m << " < r = " << r << " <= (t-s)m = " << (t - s) * m;
    out.d = exact_div(qm1 * (e - s) - (q_pow(q, std::int64_t{t - s} * m - r) - 1), den);
  }
  out.explanation = why.str();
  return out;
}

FormulaValue theorem2_formula(const CyclicCode& code, unsigned r) {
  return theorem2_formula(FormulaInputs::of(code), r);
}

std::optional<Formula> applicable_formula(const FormulaInputs& in, std::string* reason) {
  auto fail = [&](const std::string& why) -> std::optional<Formula> {
    if (reason != nullptr) *reason = why;
    return std::nullopt;
  };
  if (in.e == in.t) {
    if (in.N == 1) return in.t <= in.q - 1 ? std::optional(Formula::kTheorem1i) : fail("t > q - 1");
    if (in.N == 2) {
      if (in.q % 2 == 0 || in.m % 2 != 0) return fail("N = 2 with q even or m odd");
      return Formula::kTheorem1ii;
    }
    return fail("e = t with N = " + std::to_string(in.N));
  }
  if (in.N != 1) return fail("e > t with N = " + std::to_string(in.N));
  if (!in.arithmetic_progression) return fail("e > t with Delta not an arithmetic progression");
  return Formula::kTheorem2;
}

FormulaValue evaluate_formula(Formula f, const FormulaInputs& in, unsigned r) {
  return f == Formula::kTheorem2 ? theorem2_formula(in, r) : theorem1_formula(in, r);
}

bool is_arithmetic_progression(const std::vector<std::int64_t>& delta, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("e must be positive");
  const auto E = static_cast<std::int64_t>(e);
  std::set<std::int64_t> residues;
  for (auto d : delta) residues.insert(mod(d, E));
  if (residues.size() != delta.size()) return false;
  if (residues.size() <= 2) return true;
  for (auto start : residues) {
    for (std::int64_t step = 1; step < E; ++step) {
      std::set<std::int64_t> run;
      for (std::size_t i = 0; i < residues.size(); ++i) run.insert(mod(start + static_cast<std::int64_t>(i) * step, E));
      if (run == residues) return true;
    }
  }
  return false;
}

std::vector<std::vector<FieldSpec::Code>> lambda_matrix(const CyclicCode& code) {
  const auto& F = code.field();
  const auto& d = code.derived();
  const std::size_t t = code.params().t;
  const std::uint64_t e = code.params().e;
  std::vector<FieldSpec::Code> base;
  for (auto bj : d.beta_j) base.push_back(F.mul(d.g, bj));

  // Solve M^T lambda_h^T = R_h^T with M_{i,j} = (g beta_j)^i, i = 1..t.
  std::vector<std::vector<FieldSpec::Code>> out;
  for (std::uint64_t h = t + 1; h <= e; ++h) {
    // Augmented system: rows indexed by j, unknowns lambda_{h,i}.
    std::vector<std::vector<FieldSpec::Code>> a(t, std::vector<FieldSpec::Code>(t + 1));
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t i = 0; i < t; ++i) a[j][i] = F.pow(base[j], i + 1);
      a[j][t] = F.pow(base[j], h);
    }
    for (std::size_t c = 0; c < t; ++c) {
      std::size_t piv = c;
      while (piv < t && a[piv][c] == 0) ++piv;
      if (piv == t) throw InternalError("singular change of variables for " + code.params().key());
      std::swap(a[piv], a[c]);
      const auto inv = F.inv(a[c][c]);
      for (auto& x : a[c]) x = F.mul(x, inv);
      for (std::size_t r = 0; r < t; ++r) {
        if (r == c || a[r][c] == 0) continue;
        const auto f = a[r][c];
        for (std::size_t k = 0; k <= t; ++k) a[r][k] = F.sub(a[r][k], F.mul(f, a[c][k]));
      }
    }
    std::vector<FieldSpec::Code> row(t);
    for (std::size_t i = 0; i < t; ++i) row[i] = a[i][t];
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace ghwlab
