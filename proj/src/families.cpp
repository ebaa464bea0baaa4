#include <algorithm>

#include "families_detail.hpp"

namespace jfrac {

namespace detail {

Rational frac(const Rational& a, const Rational& b) {
  if (b == 0) throw DomainError("division by zero in a family coefficient");
  return a / b;
}

SeriesValue scaled(const BigFloat& pref, const SeriesValue& s) {
  return {pref * s.value, s.terms_used, abs(pref) * s.tail_bound};
}

SeriesValue exact_value(const BigFloat& v) { return {v, 1, BigFloat(0L, v.prec())}; }

void numeric_from_exact(FamilySpec& f) {
  if (f.b_exact) {
    auto be = f.b_exact;
    f.b_num = [be](int n, const PrecisionContext& ctx) { return ctx.num(be(n)); };
  }
  if (f.lambda_exact) {
    auto le = f.lambda_exact;
    f.lambda_num = [le](int n, const PrecisionContext& ctx) { return ctx.num(le(n)); };
  }
}

BigFloat power_over_factorial(const BigFloat& t, int j) { return pow(t, j) / BigFloat(factorial(j), t.prec()); }

BigFloat q_factorial(const Rational& q, int n, const PrecisionContext& ctx) {
  return ctx.num(q_pochhammer<Rational>(q, q, n));
}

namespace {

FamilySpec hermite() {
  FamilySpec f;
  f.b_exact = [](int) { return Rational(0); };
  f.lambda_exact = [](int n) { return ratio(n, 2); };
  f.q_fn = [](int j, const BigFloat& t, const PrecisionContext&) {
    return exact_value(power_over_factorial(t, j) * exp(t * t / 4L));
  };
  return f;
}

FamilySpec laguerre(const ParamMap& p) {
  const Rational al = p.at("alpha");
  if (!(al > -1)) throw InvalidParams("laguerre needs alpha > -1");
  FamilySpec f;
  f.b_exact = [al](int n) { return Rational(2 * n + 1 + al); };
  f.lambda_exact = [al](int n) { return Rational(n * (n + al)); };
  f.q_fn = [al](int j, const BigFloat& t, const PrecisionContext& ctx) {
    if (!(t < 1L)) throw DomainError("laguerre Q_j needs t < 1");
    return exact_value(power_over_factorial(t, j) * pow(1L - t, -(ctx.num(al) + (j + 1L))));
  };
  return f;
}

FamilySpec meixner(const ParamMap& p) {
  const Rational be = p.at("beta"), c = p.at("c");
  if (!(be > 0)) throw InvalidParams("meixner needs beta > 0");
  if (!(c > 0 && c < 1)) throw InvalidParams("meixner needs 0 < c < 1");
  FamilySpec f;
  f.b_exact = [be, c](int n) { return Rational((n + (n + be) * c) / (1 - c)); };
  f.lambda_exact = [be, c](int n) { return Rational(n * (n + be - 1) * c / ((1 - c) * (1 - c))); };
  f.q_fn = [be, c](int j, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat et = exp(t);
    BigFloat den = 1L - c * et;
    if (!(den > 0L)) throw DomainError("meixner Q_j needs c e^t < 1");
    BigFloat base = ctx.num(Rational(1 - c)) / den;
    return exact_value(pow(base, ctx.num(be) + j) * power_over_factorial(et - 1L, j));
  };
  return f;
}

FamilySpec charlier(const ParamMap& p) {
  const Rational a = p.at("a");
  if (!(a > 0)) throw InvalidParams("charlier needs a > 0");
  FamilySpec f;
  f.b_exact = [a](int n) { return Rational(n + a); };
  f.lambda_exact = [a](int n) { return Rational(a * n); };
  f.q_fn = [a](int j, const BigFloat& t, const PrecisionContext&) {
    BigFloat em1 = exp(t) - 1L;
    return exact_value(power_over_factorial(em1, j) * exp(em1 * a));
  };
  return f;
}

FamilySpec meixner_pollaczek(const ParamMap& p) {
  const Rational lam = p.at("lambda"), phi_pi = p.at("phi_pi");
  if (!(lam > 0)) throw InvalidParams("meixner_pollaczek needs lambda > 0");
  if (!(phi_pi > 0 && phi_pi < 1)) throw InvalidParams("meixner_pollaczek needs 0 < phi_pi < 1");
  FamilySpec f;
  auto phi = [phi_pi](const PrecisionContext& ctx) { return pi(ctx.precision_bits) * phi_pi; };
  f.b_num = [lam, phi](int n, const PrecisionContext& ctx) { return -(ctx.num(lam) + n) * cot(phi(ctx)); };
  f.lambda_num = [lam, phi](int n, const PrecisionContext& ctx) {
    BigFloat s = sin(phi(ctx));
    return ctx.num(Rational(n * (n + 2 * lam - 1))) / (4L * s * s);
  };
  f.q_fn = [lam, phi](int j, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat ph = phi(ctx);
    BigFloat ratio = sin(ph) / sin(t / 2L + ph);
    BigFloat v = pow(ctx.num(2), j) / ctx.num(factorial(j)) * pow(ratio, ctx.num(2 * lam) + j) * pow(sin(t / 2L), j);
    return exact_value(v);
  };
  return f;
}

FamilySpec ultraspherical(const ParamMap& p) {
  const Rational nu = p.at("nu");
  if (!(nu > ratio(-1, 2))) throw InvalidParams("ultraspherical needs nu > -1/2");
  if (nu == 0) throw InvalidParams("ultraspherical needs nu != 0");
  FamilySpec f;
  f.b_exact = [](int) { return Rational(0); };
  f.lambda_exact = [nu](int j) { return frac(j * (j + 2 * nu - 1), 4 * (nu + j - 1) * (nu + j)); };
  f.q_fn = [nu](int i, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat n = ctx.num(nu);
    if (t > 0L) {
      // 2^i Gamma(nu+i+1) / (i! (t/2)^nu) I_{nu+i}(t)
      BigFloat pref = pow(ctx.num(2), i) * gamma_fn(n + (i + 1L)) / (ctx.num(factorial(i)) * pow(t / 2L, n));
      return scaled(pref, bessel_i(n + i, t, ctx));
    }
    // same function continued through t <= 0: t^i/i! 0F1(; nu+i+1; t^2/4)
    return scaled(power_over_factorial(t, i), eval_pFq({}, {n + (i + 1L)}, t * t / 4L, ctx));
  };
  return f;
}

FamilySpec jacobi(const ParamMap& p) {
  const Rational al = p.at("alpha"), be = p.at("beta");
  if (!(al > -1 && be > -1)) throw InvalidParams("jacobi needs alpha, beta > -1");
  FamilySpec f;
  f.b_exact = [al, be](int n) -> Rational {
    if (n == 0) return frac(be - al, al + be + 2);
    return frac(be * be - al * al, (2 * n + al + be) * (2 * n + al + be + 2));
  };
  f.lambda_exact = [al, be](int n) {
    Rational s = 2 * n + al + be;
    return frac(4 * n * (n + al) * (n + be) * (n + al + be), (s - 1) * s * s * (s + 1));
  };
  f.q_fn = [al, be](int i, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_pFq({ctx.num(be + i + 1)}, {ctx.num(al + be + 2 * i + 2)}, 2L * t, ctx);
    return scaled(power_over_factorial(t, i) * exp(-t), s);
  };
  f.q_alt_fn = [al, be](int i, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_pFq({ctx.num(al + i + 1)}, {ctx.num(al + be + 2 * i + 2)}, -2L * t, ctx);
    return scaled(power_over_factorial(t, i) * exp(t), s);
  };
  return f;
}

}  // namespace

FamilySpec build_classical(const std::string& id, const ParamMap& p) {
  FamilySpec f;
  if (id == "hermite") f = hermite();
  else if (id == "laguerre") f = laguerre(p);
  else if (id == "meixner") f = meixner(p);
  else if (id == "charlier") f = charlier(p);
  else if (id == "meixner_pollaczek") f = meixner_pollaczek(p);
  else if (id == "ultraspherical") f = ultraspherical(p);
  else if (id == "jacobi") f = jacobi(p);
  else throw InvalidParams("unknown family '" + id + "'");
  numeric_from_exact(f);
  return f;
}

}  // namespace detail

namespace {

struct Registered {
  std::string id;
  std::vector<ParamInfo> params;
  enum Group { Classical, Q, Moments } group;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {"al_salam_carlitz", {{"a", "1/3", "a != 0"}, {"q", "1/2", "0 < q < 1"}}, Registered::Q},
      {"askey_wilson_slice",
       {{"a", "1/3", "0 < a < 1"}, {"q", "1/2", "0 < q < 1"}, {"printed", "0", "0 or 1"}},
       Registered::Q},
      {"big_q_jacobi",
       {{"a", "1/3", "a != 0"}, {"b", "1/4", "b != 0"}, {"c", "1/5", "c != 0"}, {"q", "1/2", "0 < q < 1"}},
       Registered::Q},
      {"charlier", {{"a", "1", "a > 0"}}, Registered::Classical},
      {"derangement", {{"alpha", "1/2", "alpha > -1"}, {"x", "1/2", "x != 0"}, {"printed", "0", "0 or 1"}},
       Registered::Moments},
      {"gegenbauer_moments", {{"nu", "3/2", "nu > -1/2, nu != 0, nu != 1/2"}, {"x", "1/2", "x^2 != 1"}},
       Registered::Moments},
      {"hermite", {}, Registered::Classical},
      {"hermite_moments", {{"x", "1", "any rational"}}, Registered::Moments},
      {"jacobi", {{"alpha", "0", "alpha > -1"}, {"beta", "0", "beta > -1"}}, Registered::Classical},
      {"laguerre", {{"alpha", "0", "alpha > -1"}}, Registered::Classical},
      {"laguerre_moments",
       {{"alpha", "1/2", "alpha > 0"}, {"x", "1/2", "x != 0"}, {"printed", "0", "0 or 1"}},
       Registered::Moments},
      {"little_q_jacobi",
       {{"a", "1/3", "0 < aq < 1"}, {"b", "1/4", "bq < 1"}, {"q", "1/2", "0 < q < 1"}},
       Registered::Q},
      {"meixner", {{"beta", "3/2", "beta > 0"}, {"c", "1/3", "0 < c < 1"}}, Registered::Classical},
      {"meixner_moments",
       {{"beta", "3/2", "beta > 1"}, {"c", "1/3", "0 < c < 1"}, {"x", "1/2", "x, -(beta+x) not in {0,1,2,...}"},
        {"printed", "0", "0 or 1"}},
       Registered::Moments},
      {"meixner_pollaczek", {{"lambda", "1", "lambda > 0"}, {"phi_pi", "1/3", "0 < phi_pi < 1 (phi in units of pi)"}},
       Registered::Classical},
      {"meixner_pollaczek_moments",
       {{"lambda", "1", "lambda > 1/2"},
        {"phi_pi", "1/3", "0 < phi_pi < 1 (phi in units of pi)"},
        {"x", "1/2", "any rational"},
        {"printed", "0", "0 or 1"}},
       Registered::Moments},
      {"q_ultraspherical", {{"beta", "1/3", "0 < beta < 1"}, {"q", "1/2", "0 < q < 1"}}, Registered::Q},
      {"q_ultraspherical_beta0", {{"q", "1/2", "0 < q < 1"}, {"printed", "0", "0 or 1"}}, Registered::Q},
      {"ultraspherical", {{"nu", "1", "nu > -1/2, nu != 0"}}, Registered::Classical},
  };
  return r;
}

const Registered& lookup(const std::string& id) {
  for (const auto& r : registry())
    if (r.id == id) return r;
  throw InvalidParams("unknown family '" + id + "'");
}

std::vector<std::string> functions_of(const FamilySpec& f) {
  std::vector<std::string> out;
  auto add = [&](bool on, const char* name) {
    if (on) out.emplace_back(name);
  };
  add(f.exact(), "tableau");
  add(static_cast<bool>(f.q_fn) || f.is_complex(), "Q");
  add(static_cast<bool>(f.q_alt_fn), "Q_alt");
  add(static_cast<bool>(f.q_tilde_fn), "Q_tilde");
  add(static_cast<bool>(f.q_tilde_alt_fn), "Q_tilde_alt");
  add(f.weight_exact || f.weight_num || f.weight_c, "weight");
  add(static_cast<bool>(f.tableau_closed), "tableau_closed");
  return out;
}

}  // namespace

FamilySpec make_family(const std::string& id, const ParamMap& params) {
  const Registered& reg = lookup(id);
  ParamMap p;
  for (const auto& info : reg.params) p[info.name] = parse_rational(info.default_value);
  for (const auto& [k, v] : params) {
    if (!p.count(k)) throw InvalidParams("family '" + id + "' has no parameter '" + k + "'");
    p[k] = v;
  }
  if (p.count("printed") && p["printed"] != 0 && p["printed"] != 1) throw InvalidParams("printed must be 0 or 1");
  if (p.count("q") && !(p["q"] > 0 && p["q"] < 1)) throw InvalidParams("q must satisfy 0 < q < 1");

  FamilySpec f;
  try {
    switch (reg.group) {
      case Registered::Classical: f = detail::build_classical(id, p); break;
      case Registered::Q: f = detail::build_q(id, p); break;
      case Registered::Moments: f = detail::build_moments(id, p); break;
    }
  } catch (const DomainError& e) {
    throw InvalidParams(std::string("family '") + id + "': " + e.what());
  }
  f.id = id;
  f.params = p;
  if (p.count("q")) f.q = p["q"];

  // A vanishing or undefined lambda_n early on means the parameters are degenerate.
  if (f.lambda_exact) {
    for (int n = 1; n <= 30; ++n) {
      Rational l;
      try {
        l = f.lambda_exact(n);
      } catch (const DomainError&) {
        throw InvalidParams("family '" + id + "': lambda_" + std::to_string(n) + " is undefined for these parameters");
      }
      if (l == 0) throw InvalidParams("family '" + id + "': lambda_" + std::to_string(n) + " vanishes for these parameters");
    }
  }
  return f;
}

std::vector<std::string> family_ids() {
  std::vector<std::string> ids;
  for (const auto& r : registry()) ids.push_back(r.id);
  return ids;
}

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& r : registry()) {
    FamilySpec f = make_family(r.id);
    out.push_back({r.id, r.params, functions_of(f), f.translation.name()});
  }
  return out;
}

Rational FamilySpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw InvalidParams("family '" + id + "' has no parameter '" + name + "'");
  return it->second;
}

JFraction FamilySpec::jfraction(int N) const {
  if (!exact()) throw Unsupported("family '" + id + "' has no rational J-fraction for these parameters");
  std::vector<Rational> b, l;
  for (int n = 0; n <= N; ++n) b.push_back(b_exact(n));
  for (int n = 1; n <= N; ++n) l.push_back(lambda_exact(n));
  return JFraction(std::move(b), std::move(l));
}

std::vector<Rational> FamilySpec::moments(int N) const {
  if (moment_exact) {
    std::vector<Rational> mu;
    for (int n = 0; n <= N; ++n) mu.push_back(moment_exact(n));
    return mu;
  }
  return moments_from_jfraction(jfraction(N), N);
}

Rational FamilySpec::weight(int n) const {
  if (weight_exact) return weight_exact(n);
  if (!lambda_exact) throw Unsupported("family '" + id + "' has no rational weight");
  Rational w = 1;
  for (int k = 1; k <= n; ++k) w *= lambda_exact(k);
  return w;
}

BigFloat FamilySpec::weight_numeric(int n, const PrecisionContext& ctx) const {
  if (weight_num) return weight_num(n, ctx);
  if (weight_exact) return ctx.num(weight_exact(n));
  BigFloat w = ctx.num(1);
  for (int k = 1; k <= n; ++k) w *= lambda_num(k, ctx);
  return w;
}

SeriesValue q_function(const FamilySpec& f, int j, const BigFloat& t, const PrecisionContext& ctx) {
  if (j < 0) throw InvalidParams("Q_j needs j >= 0");
  if (!f.q_fn) throw Unsupported("family '" + f.id + "' has no real Q_j; use the complex evaluator");
  return f.q_fn(j, t, ctx);
}

SeriesValue q_tilde_function(const FamilySpec& f, int j, const BigFloat& t, const PrecisionContext& ctx) {
  if (j < 0) throw InvalidParams("Q~_j needs j >= 0");
  if (!f.q_tilde_fn) throw UnsupportedTilde("family '" + f.id + "' has no Q~_j");
  return f.q_tilde_fn(j, t, ctx);
}

Rational tableau_closed_form(const FamilySpec& f, int i, int n) {
  if (!f.tableau_closed) throw Unsupported("family '" + f.id + "' has no closed-form tableau");
  if (i < 0 || n < 0) throw InvalidParams("tableau indices must be >= 0");
  if (i > n) return 0;
  return f.tableau_closed(i, n);
}

}  // namespace jfrac
