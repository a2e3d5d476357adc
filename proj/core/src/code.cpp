#include "ghwlab/code.hpp"

#include <numeric>
#include <sstream>

#include "ghwlab/numtheory.hpp"

namespace ghwlab {

std::uint64_t CodeParams::q() const { return ipow(p, s); }
std::uint64_t CodeParams::Q() const { return ipow(p, s * m); }

void canonicalize(CodeParams& params) {
  const auto group = static_cast<std::int64_t>(params.Q() - 1);
  if (group > 0) params.a = mod(params.a, group);
  if (params.e > 0) {
    for (auto& d : params.delta) d = mod(d, static_cast<std::int64_t>(params.e));
  }
}

std::string CodeParams::key() const {
  CodeParams c = *this;
  canonicalize(c);
  std::ostringstream os;
  os << "{\"p\":" << c.p << ",\"s\":" << c.s << ",\"m\":" << c.m << ",\"e\":" << c.e << ",\"t\":" << c.t
     << ",\"a\":" << c.a << ",\"delta\":[";
  for (std::size_t i = 0; i < c.delta.size(); ++i) os << (i ? "," : "") << c.delta[i];
  os << "]}";
  return os.str();
}

std::string assumption_group(Assumption a) {
  switch (a) {
    case Assumption::kEDividesGroupOrder:
    case Assumption::kANonzero:
    case Assumption::kERange:
      return "i";
    case Assumption::kDeltaArity:
    case Assumption::kDeltaDistinct:
    case Assumption::kDeltaGcd:
      return "ii";
    case Assumption::kDegree:
    case Assumption::kDistinctMinimalPolys:
      return "iii";
  }
  return "?";
}

std::string assumption_id(Assumption a) {
  switch (a) {
    case Assumption::kEDividesGroupOrder: return "i.e_divides_group_order";
    case Assumption::kANonzero: return "i.a_nonzero";
    case Assumption::kERange: return "i.e_ge_t_ge_1";
    case Assumption::kDeltaArity: return "ii.delta_arity";
    case Assumption::kDeltaDistinct: return "ii.delta_distinct";
    case Assumption::kDeltaGcd: return "ii.delta_gcd";
    case Assumption::kDegree: return "iii.degree";
    case Assumption::kDistinctMinimalPolys: return "iii.distinct";
  }
  return "?";
}

namespace {

std::vector<std::uint64_t> exponents(std::uint64_t group, const CodeParams& params) {
  std::vector<std::uint64_t> out;
  const auto step = static_cast<std::int64_t>(group / params.e);
  for (auto d : params.delta) {
    // (a + step * d) mod group, computed without overflow for |d| < e.
    const std::int64_t dd = mod(d, static_cast<std::int64_t>(params.e));
    const auto v = (static_cast<unsigned __int128>(mod(params.a, group)) +
                    static_cast<unsigned __int128>(step) * static_cast<unsigned __int128>(dd)) %
                   group;
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

void reject(Validation& v, Assumption a, std::vector<std::int64_t> witness, std::string message) {
  v.rejections.push_back(Rejection{a, std::move(witness), "assumption " + assumption_group(a) + ": " + message});
}

}  // namespace

Validation validate(const FieldSpec& F, const CodeParams& params) {
  if (F.p() != params.p || F.s() != params.s || F.m() != params.m) {
    throw InvalidArgument("validate: field does not match (p, s, m) of the parameters");
  }
  Validation v;
  const std::uint64_t group = F.group_order();
  const std::uint64_t q = F.q();

  const bool e_ok = params.e >= 1 && group % params.e == 0;
  if (!e_ok) {
    reject(v, Assumption::kEDividesGroupOrder, {static_cast<std::int64_t>(params.e), static_cast<std::int64_t>(group)},
           "e = " + std::to_string(params.e) + " does not divide Q-1 = " + std::to_string(group));
  }
  if (mod(params.a, static_cast<std::int64_t>(group)) == 0) {
    reject(v, Assumption::kANonzero, {params.a}, "a = " + std::to_string(params.a) + " is 0 mod Q-1");
  }
  if (params.t < 1 || params.e < params.t) {
    reject(v, Assumption::kERange, {static_cast<std::int64_t>(params.e), params.t},
           "need e >= t >= 1, got e = " + std::to_string(params.e) + ", t = " + std::to_string(params.t));
  }

  const bool arity_ok = params.delta.size() == params.t;
  if (!arity_ok) {
    reject(v, Assumption::kDeltaArity, {static_cast<std::int64_t>(params.delta.size()), params.t},
           "Delta has " + std::to_string(params.delta.size()) + " entries, expected t = " + std::to_string(params.t));
  }
  if (arity_ok && params.e >= 1) {
    const auto e = static_cast<std::int64_t>(params.e);
    bool collision = false;
    for (std::size_t i = 0; i < params.delta.size() && !collision; ++i) {
      for (std::size_t j = i + 1; j < params.delta.size(); ++j) {
        if (mod(params.delta[i] - params.delta[j], e) == 0) {
          reject(v, Assumption::kDeltaDistinct,
                 {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1), params.delta[i], params.delta[j]},
                 "Delta_" + std::to_string(i + 1) + " = " + std::to_string(params.delta[i]) + " == Delta_" +
                     std::to_string(j + 1) + " = " + std::to_string(params.delta[j]) + " mod e = " +
                     std::to_string(e));
          collision = true;
          break;
        }
      }
    }
    if (params.t >= 2) {
      std::int64_t g = e;
      for (std::size_t i = 1; i < params.delta.size(); ++i) g = std::gcd(g, params.delta[i] - params.delta[0]);
      g = g < 0 ? -g : g;
      if (g != 1) {
        reject(v, Assumption::kDeltaGcd, {g},
               "gcd(Delta_2-Delta_1, ..., Delta_t-Delta_1, e) = " + std::to_string(g) + " != 1");
      }
    } else {
      v.gcd_vacuous = true;
    }
  }

  if (e_ok && arity_ok) {
    const auto a = exponents(group, params);
    std::vector<CyclotomicCoset> cosets;
    for (std::size_t i = 0; i < a.size(); ++i) {
      cosets.push_back(cyclotomic_coset(-static_cast<std::int64_t>(a[i]), q, group));
      if (cosets.back().size() != F.m()) {
        reject(v, Assumption::kDegree,
               {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(a[i]),
                static_cast<std::int64_t>(cosets.back().size())},
               "deg h_{a_" + std::to_string(i + 1) + "} = " + std::to_string(cosets.back().size()) + " != m = " +
                   std::to_string(F.m()) + " (a_" + std::to_string(i + 1) + " = " + std::to_string(a[i]) + ")");
      }
    }
    bool dup = false;
    for (std::size_t i = 0; i < cosets.size() && !dup; ++i) {
      for (std::size_t j = i + 1; j < cosets.size(); ++j) {
        if (cosets[i] == cosets[j]) {
          reject(v, Assumption::kDistinctMinimalPolys,
                 {static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(a[i]),
                  static_cast<std::int64_t>(a[j])},
                 "h_{a_" + std::to_string(i + 1) + "} == h_{a_" + std::to_string(j + 1) + "} (a = " +
                     std::to_string(a[i]) + ", " + std::to_string(a[j]) + ")");
          dup = true;
          break;
        }
      }
    }
    const std::uint64_t am = static_cast<std::uint64_t>(mod(params.a, static_cast<std::int64_t>(group)));
    const std::uint64_t N = std::gcd(group / (q - 1), static_cast<std::uint64_t>(
                                                          static_cast<unsigned __int128>(am) * params.e % group));
    v.n_at_most_sqrt_q = static_cast<unsigned __int128>(N) * N <= F.order();

    // For t >= 2 the gcd condition forces delta | (Q-1)/e; with t = 1 it is
    // vacuous, so the divisibility is required directly.
    if (params.t == 1 && params.e >= 1 && v.rejections.empty()) {
      const std::uint64_t d = std::gcd(group, a[0]);
      if ((group / params.e) % d != 0) {
        reject(v, Assumption::kDeltaGcd, {static_cast<std::int64_t>(d), static_cast<std::int64_t>(group / params.e)},
               "t = 1 needs delta = " + std::to_string(d) + " to divide (Q-1)/e = " +
                   std::to_string(group / params.e));
      }
    }
  }
  return v;
}

DerivedParams derive(const FieldSpec& F, const CodeParams& params) {
  DerivedParams d;
  const std::uint64_t group = F.group_order();
  const std::uint64_t q = F.q();
  d.a = exponents(group, params);
  d.delta = group;
  for (auto x : d.a) d.delta = std::gcd(d.delta, x);
  d.n = group / d.delta;
  const std::uint64_t am = static_cast<std::uint64_t>(mod(params.a, static_cast<std::int64_t>(group)));
  // gcd((Q-1)/(q-1), a e); a e reduced mod Q-1 leaves the gcd unchanged.
  d.N = std::gcd(group / (q - 1),
                 static_cast<std::uint64_t>(static_cast<unsigned __int128>(am) * params.e % group));
  d.beta = F.antilog(group / params.e);
  for (auto delta : params.delta) {
    d.beta_j.push_back(F.pow(d.beta, static_cast<std::uint64_t>(mod(delta, static_cast<std::int64_t>(params.e)))));
  }
  d.g = F.antilog(am);

  if ((group / params.e) % d.delta != 0) {
    throw InternalError("derive: delta = " + std::to_string(d.delta) + " does not divide (Q-1)/e for " + params.key());
  }
  if ((static_cast<unsigned __int128>(d.N) * (q - 1)) % (static_cast<unsigned __int128>(params.e) * d.delta) != 0) {
    throw InternalError("derive: e*delta does not divide N*(q-1) for " + params.key());
  }
  return d;
}

ParamsRejected::ParamsRejected(Validation v)
    : Error([&] {
        std::string msg = "parameters rejected";
        for (const auto& r : v.rejections) msg += "; " + r.message;
        return msg;
      }()),
      v_(std::move(v)) {}

namespace {

Validation checked(const FieldSpec& F, const CodeParams& params) {
  auto v = validate(F, params);
  if (!v.ok()) throw ParamsRejected(std::move(v));
  return v;
}

}  // namespace

CyclicCode::CyclicCode(FieldPtr field, CodeParams params, std::optional<FieldSpec::Code> theta)
    : field_(std::move(field)),
      params_(std::move(params)),
      validation_(checked(*field_, params_)),
      derived_(derive(*field_, params_)),
      base_(*field_),
      basis_(*field_, base_, theta.value_or(field_->primitive_code())) {
  const auto& F = *field_;
  const std::size_t n = derived_.n, k = dimension(), m = params_.m;
  generator_ = FqMatrix(k, n);
  for (std::size_t j = 0; j < params_.t; ++j) {
    for (std::size_t l = 0; l < m; ++l) {
      const auto x = basis_.basis(static_cast<unsigned>(l));
      for (std::size_t i = 0; i < n; ++i) {
        const auto term = F.mul(x, F.antilog(static_cast<std::uint64_t>(
                                       static_cast<unsigned __int128>(derived_.a[j]) * i % F.group_order())));
        generator_.at(j * m + l, i) = static_cast<SmallField::Label>(F.base_label(F.trace(term, TraceTarget::kBase)));
      }
    }
  }

  parity_check_ = Polynomial{{1}};
  for (auto a : derived_.a) {
    minimal_polys_.push_back(minimal_poly(F, static_cast<std::int64_t>(a)));
    parity_check_ = poly_mul(F, parity_check_, minimal_polys_.back().poly);
  }
  Polynomial rem;
  poly_divmod(F, x_pow_minus_one(F, static_cast<unsigned>(n)), parity_check_, generator_poly_, rem);
  if (!rem.is_zero()) throw InternalError("parity-check polynomial does not divide x^n - 1 for " + params_.key());
}

std::vector<FieldSpec::Code> CyclicCode::to_field_vector(std::span<const SmallField::Label> v) const {
  const std::size_t m = params_.m;
  if (v.size() != dimension()) throw InvalidArgument("to_field_vector: expected tm coordinates");
  std::vector<FieldSpec::Code> x(params_.t);
  for (std::size_t j = 0; j < params_.t; ++j) x[j] = basis_.element(v.subspan(j * m, m));
  return x;
}

std::vector<SmallField::Label> CyclicCode::to_coords(std::span<const FieldSpec::Code> x) const {
  if (x.size() != params_.t) throw InvalidArgument("to_coords: expected t field elements");
  const std::size_t m = params_.m;
  std::vector<SmallField::Label> v(dimension());
  for (std::size_t j = 0; j < params_.t; ++j) basis_.coordinates(x[j], std::span(v).subspan(j * m, m));
  return v;
}

std::vector<SmallField::Label> CyclicCode::codeword(std::span<const FieldSpec::Code> x) const {
  if (x.size() != params_.t) {
    throw InvalidArgument("codeword: expected " + std::to_string(params_.t) + " coordinates, got " +
                          std::to_string(x.size()));
  }
  const auto& F = *field_;
  std::vector<SmallField::Label> c(derived_.n);
  for (std::size_t i = 0; i < derived_.n; ++i) {
    FieldSpec::Code acc = 0;
    for (std::size_t j = 0; j < params_.t; ++j) {
      acc = F.add(acc, F.mul(x[j], F.antilog(static_cast<std::uint64_t>(
                                       static_cast<unsigned __int128>(derived_.a[j]) * i % F.group_order()))));
    }
    c[i] = static_cast<SmallField::Label>(F.base_label(F.trace(acc, TraceTarget::kBase)));
  }
  return c;
}

std::vector<SmallField::Label> CyclicCode::codeword_of_coords(std::span<const SmallField::Label> v) const {
  if (v.size() != dimension()) throw InvalidArgument("codeword_of_coords: expected tm coordinates");
  std::vector<SmallField::Label> c(derived_.n, 0);
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[l] == 0) continue;
    const auto row = generator_.row(l);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = base_.add(c[i], base_.mul(v[l], row[i]));
  }
  return c;
}

Polynomial parity_check_poly(const CyclicCode& code) { return code.parity_check_poly(); }

std::vector<std::vector<SmallField::Label>> polynomial_code_words(const CyclicCode& code) {
  const auto& F = code.field();
  const auto& B = code.base();
  const std::size_t n = code.length(), k = code.dimension();
  const auto& g = code.generator_poly();
  std::vector<SmallField::Label> glab(n, 0);
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) glab[i] = static_cast<SmallField::Label>(F.base_label(g.coeffs[i]));

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= B.q();
  std::vector<std::vector<SmallField::Label>> out;
  out.reserve(total);
  std::vector<SmallField::Label> msg(k, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t i = 0; i < k; ++i) {
      msg[i] = static_cast<SmallField::Label>(x % B.q());
      x /= B.q();
    }
    // msg(x) * g(x); degree < k + deg g = n, so no reduction mod x^n - 1.
    std::vector<SmallField::Label> c(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (msg[i] == 0) continue;
      for (std::size_t j = 0; j < n && i + j < n; ++j) c[i + j] = B.add(c[i + j], B.mul(msg[i], glab[j]));
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace ghwlab
