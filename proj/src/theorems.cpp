#include <fnmatch.h>

#include <algorithm>

#include "theorems_detail.hpp"

namespace jfrac {

namespace detail {

Rational get(const ParamMap& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InvalidParams("missing parameter '" + name + "'");
  return it->second;
}

int get_int(const ParamMap& p, const std::string& name) {
  Rational v = get(p, name);
  if (v.get_den() != 1 || !v.get_num().fits_sint_p()) throw InvalidParams("parameter '" + name + "' must be an integer");
  return static_cast<int>(v.get_num().get_si());
}

bool get_flag(const ParamMap& p, const std::string& name) {
  Rational v = get(p, name);
  if (v != 0 && v != 1) throw InvalidParams("parameter '" + name + "' must be 0 or 1");
  return v == 1;
}

BigFloat get_num(const ParamMap& p, const std::string& name, const PrecisionContext& ctx) {
  return ctx.num(get(p, name));
}

VerificationReport start_report(Mode mode) {
  VerificationReport r;
  r.mode = mode;
  return r;
}

namespace {

BigFloat rel(const BigFloat& abs_err, const BigFloat& lhs_mag) {
  if (lhs_mag.is_zero()) return abs_err;
  return abs_err / lhs_mag;
}

}  // namespace

void finish_numeric(VerificationReport& r, const BigFloat& lhs, const std::vector<BigFloat>& terms,
                    const PrecisionContext& ctx) {
  BigFloat rhs = ctx.num(0);
  for (const auto& x : terms) rhs += x;
  r.lhs = lhs.to_string();
  r.rhs_partial = rhs.to_string();
  r.n_terms = static_cast<int>(terms.size());
  r.abs_error = abs(lhs - rhs);
  r.rel_error = rel(r.abs_error, abs(lhs));
  r.tail_estimate = terms.empty() ? ctx.num(0) : abs(terms.back());
}

void finish_numeric(VerificationReport& r, const Complex& lhs, const std::vector<Complex>& terms,
                    const PrecisionContext& ctx) {
  Complex rhs{ctx.num(0), ctx.num(0)};
  for (const auto& x : terms) rhs += x;
  r.lhs = to_string(lhs);
  r.rhs_partial = to_string(rhs);
  r.n_terms = static_cast<int>(terms.size());
  r.abs_error = abs(lhs - rhs);
  r.rel_error = rel(r.abs_error, abs(lhs));
  r.tail_estimate = terms.empty() ? ctx.num(0) : abs(terms.back());
}

void finish_numeric_pair(VerificationReport& r, const BigFloat& lhs, const BigFloat& rhs, int n_terms,
                         const PrecisionContext& ctx) {
  r.lhs = lhs.to_string();
  r.rhs_partial = rhs.to_string();
  r.n_terms = n_terms;
  r.abs_error = abs(lhs - rhs);
  r.rel_error = rel(r.abs_error, abs(lhs));
  r.tail_estimate = ctx.num(0);
}

void finish_exact(VerificationReport& r, const std::vector<Rational>& lhs, const std::vector<Rational>& rhs,
                  const PrecisionContext& ctx) {
  if (lhs.size() != rhs.size()) throw DegreeMismatch("exact comparison of tables of different sizes");
  Rational sl = 0, sr = 0;
  long mismatches = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    sl += lhs[i];
    sr += rhs[i];
    if (lhs[i] != rhs[i]) ++mismatches;
  }
  r.lhs = to_string(sl);
  r.rhs_partial = to_string(sr);
  r.n_terms = static_cast<int>(lhs.size());
  r.abs_error = ctx.num(mismatches);
  r.rel_error = lhs.empty() ? ctx.num(0) : ctx.num(ratio(mismatches, static_cast<long>(lhs.size())));
  r.tail_estimate = ctx.num(0);
}

std::vector<Rational> flatten(const NormalOrderedPoly& p) {
  std::vector<Rational> out;
  for (int j = 0; j <= p.max_degree(); ++j)
    for (int k = 0; j + k <= p.max_degree(); ++k) out.push_back(p.coef(j, k));
  return out;
}

ParamMap params(std::initializer_list<std::pair<const std::string, std::string>> kv) {
  ParamMap p;
  for (const auto& [k, v] : kv) p[k] = parse_rational(v);
  return p;
}

}  // namespace detail

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> reg = [] {
    std::vector<TheoremCase> r = detail::theorem_cases();
    for (auto& c : detail::identity_cases()) r.push_back(std::move(c));
    std::stable_sort(r.begin(), r.end(), [](const TheoremCase& a, const TheoremCase& b) { return a.id < b.id; });
    return r;
  }();
  return reg;
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& c : theorem_registry()) ids.push_back(c.id);
  return ids;
}

namespace {

const TheoremCase& find_case(const std::string& id, bool identity) {
  for (const auto& c : theorem_registry())
    if (c.id == id && c.identity == identity) return c;
  throw UnknownTheorem("no " + std::string(identity ? "identity" : "theorem") + " registered as '" + id + "'");
}

// Special-function series inside a case stop near the working precision, so that
// rel_error measures the truncation at N rather than the inner stopping rule.
PrecisionContext inner_context(const PrecisionContext& ctx) {
  PrecisionContext inner = ctx;
  BigFloat floor = ctx.num(1);
  mpfr_div_2si(floor.raw(), floor.raw(), ctx.precision_bits - 16, MPFR_RNDN);
  if (floor < ctx.rel_tolerance) inner.rel_tolerance = floor;
  return inner;
}

VerificationReport run_case(const TheoremCase& c, const ParamMap& p, const PrecisionContext& ctx) {
  VerificationReport r = c.run(p, inner_context(ctx));
  r.id = c.id;
  for (const auto& [k, v] : p) {
    if (k == "s") r.s = to_string(v);
    else if (k == "t") r.t = to_string(v);
    else r.params.emplace_back(k, to_string(v));
  }
  r.tolerance = ctx.rel_tolerance * c.tolerance_factor;
  r.pass = r.mode == Mode::Exact ? r.abs_error.is_zero() : r.rel_error <= r.tolerance;
  return r;
}

ParamMap merged(const TheoremCase& c, const ParamMap& overrides) {
  ParamMap p = c.default_sets.at(0);
  for (const auto& [k, v] : overrides) {
    if (!p.count(k)) throw InvalidParams("'" + c.id + "' has no parameter '" + k + "'");
    p[k] = v;
  }
  return p;
}

}  // namespace

VerificationReport verify_theorem(const std::string& id, const ParamMap& params, const PrecisionContext& ctx) {
  const TheoremCase& c = find_case(id, false);
  return run_case(c, merged(c, params), ctx);
}

VerificationReport verify_theorem(const std::string& id, ParamMap params, const Rational& s, const Rational& t, int N,
                                  const PrecisionContext& ctx) {
  params["s"] = s;
  params["t"] = t;
  params["N"] = N;
  return verify_theorem(id, params, ctx);
}

VerificationReport verify_identity(const std::string& id, const ParamMap& params, const PrecisionContext& ctx) {
  const TheoremCase& c = find_case(id, true);
  return run_case(c, merged(c, params), ctx);
}

std::vector<VerificationReport> run_suite(const std::string& pattern, const PrecisionContext& ctx,
                                          const ParamMap& overrides) {
  std::vector<VerificationReport> out;
  for (const auto& c : theorem_registry()) {
    if (!pattern.empty() && fnmatch(pattern.c_str(), c.id.c_str(), 0) != 0) continue;
    for (ParamMap p : c.default_sets) {
      for (const auto& [k, v] : overrides)
        if (p.count(k)) p[k] = v;
      try {
        out.push_back(run_case(c, p, ctx));
      } catch (const std::exception& e) {
        VerificationReport r = detail::start_report(Mode::Numeric);
        r.id = c.id;
        for (const auto& [k, v] : p) r.params.emplace_back(k, to_string(v));
        r.lhs = "error";
        r.rhs_partial = e.what();
        r.abs_error = r.rel_error = r.tail_estimate = ctx.num(0);
        r.tolerance = ctx.rel_tolerance * c.tolerance_factor;
        r.pass = false;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

}  // namespace jfrac
