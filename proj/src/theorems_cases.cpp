#include <random>

#include "families_detail.hpp"
#include "theorems_detail.hpp"

namespace jfrac::detail {

namespace {

using Terms = std::vector<BigFloat>;

Rational poch(const Rational& a, long n) { return pochhammer<Rational>(a, n); }
Rational qp(const Rational& a, const Rational& q, long n) { return q_pochhammer<Rational>(a, q, n); }

int terms_N(const ParamMap& p) {
  int N = get_int(p, "N");
  if (N < 0) throw InvalidParams("N must be >= 0");
  return N;
}

BigFloat qp_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx) {
  return q_pochhammer_inf(a, q, ctx);
}

// Sum_n weight(n) Q_n(t) Q_n(s) against Q_0(s + t), for a family on the classical translation.
VerificationReport bilinear_classical(const FamilySpec& f, const std::function<BigFloat(int)>& weight,
                                      const ParamMap& p, const PrecisionContext& ctx) {
  const BigFloat s = get_num(p, "s", ctx), t = get_num(p, "t", ctx);
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = q_function(f, 0, s + t, ctx).value;
  Terms terms;
  for (int n = 0; n <= terms_N(p); ++n)
    terms.push_back(weight(n) * q_function(f, n, t, ctx).value * q_function(f, n, s, ctx).value);
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport conf_hyp_1f1(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational al = get(p, "alpha"), be = get(p, "beta");
  const BigFloat s = get_num(p, "s", ctx), t = get_num(p, "t", ctx);
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = eval_pFq({ctx.num(al + 1)}, {ctx.num(al + be + 2)}, t + s, ctx).value;
  Terms terms;
  BigFloat ts = ctx.num(1);
  for (int n = 0; n <= terms_N(p); ++n) {
    Rational w = poch(al + 1, n) * poch(be + 1, n) * poch(al + be + 1, n) /
                 (poch(al + be + 1, 2 * n) * poch(al + be + 2, 2 * n) * factorial(n));
    std::vector<BigFloat> a{ctx.num(al + n + 1)}, c{ctx.num(al + be + 2 * n + 2)};
    terms.push_back(ts * w * eval_pFq(a, c, t, ctx).value * eval_pFq(a, c, s, ctx).value);
    ts *= t * s;
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

// x = t, y = s.
VerificationReport bessel_plus(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational nu = get(p, "nu");
  if (!(nu > 0)) throw DomainError("bessel_plus needs nu > 0");
  const BigFloat x = get_num(p, "t", ctx), y = get_num(p, "s", ctx);
  if (!(x > 0L) || !(y > 0L)) throw DomainError("bessel_plus needs s, t > 0");
  const BigFloat nuf = ctx.num(nu);
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = bessel_j(nuf, x + y, ctx).value / pow(x + y, nuf);
  BigFloat pref = gamma_fn(nuf) / pow(x * y / 2L, nuf);
  Terms terms;
  for (int n = 0; n <= terms_N(p); ++n) {
    Rational c = (nu + n) * poch(2 * nu, n) / factorial(n);
    if (n % 2) c = -c;
    BigFloat m = nuf + ctx.num(n);
    terms.push_back(pref * c * bessel_j(m, x, ctx).value * bessel_j(m, y, ctx).value);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

// Sum_j lambda_1..lambda_j Q_j(t) Q~_j(s), with Q_j given by either closed form.
VerificationReport little_qj_common(const ParamMap& p, const PrecisionContext& ctx, bool alt) {
  const Rational a = get(p, "a"), b = get(p, "b"), q = get(p, "q"), s = get(p, "s"), t = get(p, "t");
  FamilySpec f = make_family("little_q_jacobi", {{"a", a}, {"b", b}, {"q", q}});
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = eval_rphis(std::vector<Rational>{a * q, -frac(s, t)}, {a * b * q * q}, q, ctx.num(t), ctx).value;
  const BigFloat tf = ctx.num(t), sf = ctx.num(s);
  const QFn& left = alt ? f.q_alt_fn : f.q_fn;
  Terms terms;
  for (int j = 0; j <= terms_N(p); ++j)
    terms.push_back(ctx.num(f.weight(j)) * left(j, tf, ctx).value * q_tilde_function(f, j, sf, ctx).value);
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport big_qj(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational a = get(p, "a"), b = get(p, "b"), c = get(p, "c"), q = get(p, "q"), s = get(p, "s"), t = get(p, "t");
  FamilySpec f = make_family("big_q_jacobi", {{"a", a}, {"b", b}, {"c", c}, {"q", q}});
  const Rational ab = a * b;
  VerificationReport r = start_report(Mode::Numeric);
  // (-qas;q)_inf/(-s;q)_inf 3phi2(qa, qab/c, -s/t; abq^2, -qas; q, qct)
  BigFloat lhs = qp_inf(-q * a * s, q, ctx) / qp_inf(-s, q, ctx) *
                 eval_rphis(std::vector<Rational>{q * a, q * frac(ab, c), -frac(s, t)}, {ab * q * q, -q * a * s}, q,
                            ctx.num(q * c * t), ctx)
                     .value;
  Terms terms;
  for (int j = 0; j <= terms_N(p); ++j) {
    const Rational qj1 = rpow(q, j + 1);
    Rational w = rpow(-a * c * s * t, j) * rpow(q, j * (j + 1)) * qp(a * q, q, j) * qp(b * q, q, j) * qp(c * q, q, j) *
                 qp(ab * q, q, j) * qp(frac(ab * q, c), q, j) /
                 (qp(q, q, j) * qp(ab * q, q, 2 * j) * qp(ab * q * q, q, 2 * j));
    BigFloat left = eval_rphis(std::vector<Rational>{a * qj1, frac(ab * qj1, c)}, {ab * rpow(q, 2 * j + 2)}, q,
                               ctx.num(q * c * t), ctx)
                        .value;
    BigFloat right =
        eval_rphis(std::vector<Rational>{a * qj1, c * qj1}, {ab * rpow(q, 2 * j + 2)}, q, ctx.num(-s), ctx).value;
    terms.push_back(ctx.num(w) * left * right);
  }
  (void)f;  // parameter validation only
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport asc_qtrans(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational a = get(p, "a"), q = get(p, "q"), s = get(p, "s"), t = get(p, "t");
  make_family("al_salam_carlitz", {{"a", a}, {"q", q}});
  // printed=1 puts t where s belongs in the 1phi1 factors
  const Rational x = get_flag(p, "printed") ? t : s;
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = qp_inf(-s, q, ctx) / qp_inf(t, q, ctx) *
                 eval_rphis(std::vector<Rational>{0, -frac(s, t)}, {-s}, q, ctx.num(a * t), ctx).value;
  BigFloat pref = 1L / (qp_inf(t, q, ctx) * qp_inf(a * t, q, ctx));
  Terms terms;
  for (int n = 0; n <= terms_N(p); ++n) {
    const Rational qn = rpow(q, n);
    Rational w = rpow(-a * s * t, n) * rpow(q, n * (n - 1)) / qp(q, q, n);
    BigFloat phi = eval_rphis(std::vector<Rational>{0}, {-x * qn}, q, ctx.num(-a * x * qn), ctx).value;
    terms.push_back(pref * ctx.num(w) * qp_inf(-s * qn, q, ctx) * phi);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport q_ultra(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational be = get(p, "beta"), q = get(p, "q");
  FamilySpec f = make_family("q_ultraspherical", {{"beta", be}, {"q", q}});
  auto w = [&](int n) {
    return ctx.num(qp(q, q, n) * qp(be * be, q, n) / (rpow(Rational(4), n) * qp(be, q, n) * qp(q * be, q, n)));
  };
  return bilinear_classical(f, w, p, ctx);
}

VerificationReport q_ultra_beta0(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational q = get(p, "q");
  FamilySpec f = make_family("q_ultraspherical_beta0", {{"q", q}, {"printed", get(p, "printed")}});
  auto w = [&](int n) { return ctx.num(qp(q, q, n) / rpow(Rational(4), n)); };
  return bilinear_classical(f, w, p, ctx);
}

VerificationReport askey_wilson(const ParamMap& p, const PrecisionContext& ctx) {
  FamilySpec f = make_family("askey_wilson_slice", {{"a", get(p, "a")}, {"q", get(p, "q")}, {"printed", get(p, "printed")}});
  auto w = [&](int n) { return ctx.num(f.weight(n)); };
  return bilinear_classical(f, w, p, ctx);
}

VerificationReport mp_moments(const ParamMap& p, const PrecisionContext& ctx) {
  FamilySpec f = make_family("meixner_pollaczek_moments", {{"lambda", get(p, "lambda")},
                                                           {"phi_pi", get(p, "phi_pi")},
                                                           {"x", get(p, "x")},
                                                           {"printed", get(p, "printed")}});
  const BigFloat s = get_num(p, "s", ctx), t = get_num(p, "t", ctx);
  VerificationReport r = start_report(Mode::Numeric);
  Complex lhs = f.q_fn_c(0, s + t, ctx).value;
  std::vector<Complex> terms;
  for (int n = 0; n <= terms_N(p); ++n)
    terms.push_back(f.weight_c(n, ctx) * f.q_fn_c(n, t, ctx).value * f.q_fn_c(n, s, ctx).value);
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

// Derangement family: Laguerre moments shifted by a = b = 1/x.
VerificationReport affine(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational al = get(p, "alpha"), x = get(p, "x");
  FamilySpec inner = make_family("laguerre", {{"alpha", al}});
  FamilySpec f = make_family("derangement", {{"alpha", al}, {"x", x}, {"printed", get(p, "printed")}});
  const Rational a = frac(1, x), b = frac(1, x);
  const BigFloat s = get_num(p, "s", ctx), t = get_num(p, "t", ctx);
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = exp(-((s + t) * (b / a))) * q_function(inner, 0, (s + t) / a, ctx).value;
  Terms terms;
  for (int n = 0; n <= terms_N(p); ++n)
    terms.push_back(ctx.num(f.weight(n)) * q_function(f, n, t, ctx).value * q_function(f, n, s, ctx).value);
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

// Polynomials-as-moments: exact bivariate coefficients of sum_n mu_n (s+t)^n/n! against
// sum_n weight_n Q_n(t) Q_n(s), plus the closed-form tableau entries; numeric=1 evaluates
// both sides at (s, t) instead.
VerificationReport moments_case(const std::string& family, const std::vector<std::string>& names, const ParamMap& p,
                                const PrecisionContext& ctx) {
  ParamMap fp;
  for (const auto& n : names) fp[n] = get(p, n);
  FamilySpec f = make_family(family, fp);
  if (get_flag(p, "numeric")) return bilinear_classical(f, [&](int n) { return ctx.num(f.weight(n)); }, p, ctx);

  const int D = get_int(p, "degree");
  if (D < 0) throw InvalidParams("degree must be >= 0");
  std::vector<Rational> mu = f.moments(D), exp_mu;
  for (int n = 0; n <= D; ++n) exp_mu.push_back(mu[static_cast<std::size_t>(n)] / factorial(n));
  NormalOrderedPoly lhs = translate_series(PowerSeries<Rational>(exp_mu), TranslationKind::classical(), D);
  NormalOrderedPoly rhs(D);
  for (int n = 0; 2 * n <= D; ++n) {
    std::vector<Rational> c = f.q_series_exact(n, D);
    Rational w = f.weight(n);
    for (int j = 0; j <= D; ++j)
      for (int k = 0; j + k <= D; ++k) rhs.at(j, k) += w * c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(k)];
  }
  std::vector<Rational> l = flatten(lhs), rr = flatten(rhs);
  StieltjesTableau tab = tableau_from_jfraction(f.jfraction(D), D);
  for (int n = 0; n <= D; ++n)
    for (int i = 0; i <= n; ++i) {
      l.push_back(tab.at(i, n));
      rr.push_back(tableau_closed_form(f, i, n));
    }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

VerificationReport asc_noncomm(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational a = get(p, "a"), q = get(p, "q");
  FamilySpec f = make_family("al_salam_carlitz", {{"a", a}, {"q", q}});
  const int D = get_int(p, "degree");
  if (D < 0) throw InvalidParams("degree must be >= 0");
  std::vector<Rational> c0;
  for (int n = 0; n <= D; ++n) c0.push_back(f.moment_exact(n) / qp(q, q, n));
  NormalOrderedPoly lhs = translate_series(PowerSeries<Rational>(c0), f.translation, D);
  // Q_n(x) = x^n/(q;q)_n sum_m h_m(a) x^m/(q;q)_m
  NormalOrderedPoly rhs(D, q);
  for (int n = 0; 2 * n <= D; ++n) {
    NormalOrderedPoly qt(D, q), qs(D, q);
    for (int m = 0; n + m <= D; ++m) {
      Rational c = c0[static_cast<std::size_t>(m)] / qp(q, q, n);
      qt.at(n + m, 0) = c;
      qs.at(0, n + m) = c;
    }
    rhs += qt * qs * f.weight(n);
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, flatten(lhs), flatten(rhs), ctx);
  return r;
}

std::vector<JFraction> random_jfractions(const ParamMap& p, int D) {
  const int count = get_int(p, "count");
  if (count < 1) throw InvalidParams("count must be >= 1");
  std::mt19937 rng(static_cast<std::mt19937::result_type>(get_int(p, "seed")));
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  std::vector<JFraction> out;
  for (int c = 0; c < count; ++c) {
    std::vector<Rational> b, lam;
    for (int n = 0; n <= D; ++n) b.push_back(ratio(num(rng), den(rng)));
    for (int n = 1; n <= D; ++n) {
      long v = 0;
      while (v == 0) v = num(rng);
      lam.push_back(ratio(v, den(rng)));
    }
    out.emplace_back(std::move(b), std::move(lam));
  }
  return out;
}

// Q_0(s+t) = sum_n lambda_1..lambda_n Q_n(t) Q_n(s) coefficient-wise, Q_n(x) = sum_m H_{n,m} x^m/m!.
VerificationReport classical_generic(const ParamMap& p, const PrecisionContext& ctx) {
  const int D = get_int(p, "degree");
  if (D < 0) throw InvalidParams("degree must be >= 0");
  std::vector<Rational> l, rr;
  for (const auto& jf : random_jfractions(p, D)) {
    StieltjesTableau tab = tableau_from_jfraction(jf, D);
    std::vector<Rational> c0;
    for (int n = 0; n <= D; ++n) c0.push_back(tab.at(0, n) / factorial(n));
    auto lhs = flatten(translate_series(PowerSeries<Rational>(c0), TranslationKind::classical(), D));
    NormalOrderedPoly rhs(D);
    for (int n = 0; n <= D; ++n) {
      Rational w = jf.lambda_product(n);
      for (int j = n; j <= D; ++j)
        for (int k = n; j + k <= D; ++k) rhs.at(j, k) += w * tab.at(n, j) * tab.at(n, k) / (factorial(j) * factorial(k));
    }
    auto rv = flatten(rhs);
    l.insert(l.end(), lhs.begin(), lhs.end());
    rr.insert(rr.end(), rv.begin(), rv.end());
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

// (x h_0(x) - y h_0(y))/(x - y) = sum_n lambda_1..lambda_n h_n(x) h_n(y), h_n(x) = sum_m H_{n,m} x^m.
VerificationReport ogf_variant(const ParamMap& p, const PrecisionContext& ctx) {
  const int D = get_int(p, "degree");
  if (D < 0) throw InvalidParams("degree must be >= 0");
  std::vector<Rational> l, rr;
  for (const auto& jf : random_jfractions(p, D)) {
    StieltjesTableau tab = tableau_from_jfraction(jf, D);
    NormalOrderedPoly lhs(D), rhs(D);
    for (int i = 0; i <= D; ++i)
      for (int j = 0; i + j <= D; ++j) lhs.at(i, j) = tab.at(0, i + j);
    for (int n = 0; n <= D; ++n) {
      Rational w = jf.lambda_product(n);
      for (int i = n; i <= D; ++i)
        for (int j = n; i + j <= D; ++j) rhs.at(i, j) += w * tab.at(n, i) * tab.at(n, j);
    }
    auto lv = flatten(lhs), rv = flatten(rhs);
    l.insert(l.end(), lv.begin(), lv.end());
    rr.insert(rr.end(), rv.begin(), rv.end());
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

ParamMap with(ParamMap base, const ParamMap& extra) {
  for (const auto& [k, v] : extra) base[k] = v;
  return base;
}

}  // namespace

std::vector<TheoremCase> theorem_cases() {
  using namespace std::placeholders;
  std::vector<TheoremCase> c;
  auto add = [&](std::string id, std::vector<ParamMap> sets, long factor,
                 std::function<VerificationReport(const ParamMap&, const PrecisionContext&)> run) {
    c.push_back(TheoremCase{std::move(id), false, std::move(sets), factor, std::move(run)});
  };
  const ParamMap small = params({{"s", "1/20"}, {"t", "1/10"}, {"N", "25"}});
  const ParamMap exact = params({{"s", "1/5"}, {"t", "3/10"}, {"N", "25"}, {"degree", "12"}, {"numeric", "0"}});

  add("conf_hyp_1f1", {params({{"alpha", "1/2"}, {"beta", "1/3"}, {"t", "3/10"}, {"s", "1/5"}, {"N", "25"}})}, 1,
      conf_hyp_1f1);
  std::vector<ParamMap> bessel;
  for (const char* nu : {"1/2", "1", "3/2"})
    bessel.push_back(params({{"nu", nu}, {"t", "1/2"}, {"s", "3/10"}, {"N", "25"}}));
  add("bessel_plus", bessel, 100, bessel_plus);
  const ParamMap lq = with(params({{"a", "1/3"}, {"b", "1/4"}, {"q", "1/2"}}), small);
  add("little_qj", {lq}, 1, [](const ParamMap& p, const PrecisionContext& ctx) { return little_qj_common(p, ctx, false); });
  add("little_qj_alt", {lq}, 1,
      [](const ParamMap& p, const PrecisionContext& ctx) { return little_qj_common(p, ctx, true); });
  add("big_qj", {with(params({{"a", "1/3"}, {"b", "1/4"}, {"c", "1/5"}, {"q", "1/2"}}), small)}, 1, big_qj);
  add("asc_qtrans", {with(params({{"a", "1/3"}, {"q", "1/2"}, {"printed", "0"}}), small)}, 1, asc_qtrans);
  add("asc_noncomm", {params({{"a", "1/3"}, {"q", "1/2"}, {"degree", "12"}})}, 1, asc_noncomm);
  const ParamMap st20 = params({{"s", "1/5"}, {"t", "1/5"}, {"N", "20"}});
  add("q_ultra", {with(params({{"beta", "1/3"}, {"q", "1/2"}}), st20)}, 100, q_ultra);
  add("q_ultra_beta0", {with(params({{"q", "1/2"}, {"printed", "0"}}), st20)}, 100, q_ultra_beta0);
  add("askey_wilson", {with(params({{"a", "1/3"}, {"q", "1/2"}, {"printed", "0"}}), st20)}, 100, askey_wilson);
  add("hermite_moments", {with(params({{"x", "1"}}), exact)}, 1,
      std::bind(moments_case, "hermite_moments", std::vector<std::string>{"x"}, _1, _2));
  add("laguerre_moments", {with(params({{"alpha", "1/2"}, {"x", "1/2"}, {"printed", "0"}}), exact)}, 1,
      std::bind(moments_case, "laguerre_moments", std::vector<std::string>{"alpha", "x", "printed"}, _1, _2));
  add("meixner_moments", {with(params({{"beta", "3/2"}, {"c", "1/3"}, {"x", "1/2"}, {"printed", "0"}}), exact)}, 1,
      std::bind(moments_case, "meixner_moments", std::vector<std::string>{"beta", "c", "x", "printed"}, _1, _2));
  add("gegenbauer_moments", {with(params({{"nu", "3/2"}, {"x", "1/2"}}), exact)}, 1,
      std::bind(moments_case, "gegenbauer_moments", std::vector<std::string>{"nu", "x"}, _1, _2));
  add("mp_moments",
      {params({{"lambda", "1"}, {"phi_pi", "1/3"}, {"x", "1/2"}, {"printed", "0"}, {"s", "1/5"}, {"t", "3/10"}, {"N", "25"}})},
      100, mp_moments);
  add("affine", {params({{"alpha", "1/2"}, {"x", "1/2"}, {"printed", "0"}, {"s", "1/10"}, {"t", "1/5"}, {"N", "25"}})}, 1,
      affine);
  const ParamMap rnd = params({{"seed", "20240601"}, {"count", "5"}, {"degree", "12"}});
  add("classical_generic", {rnd}, 1, classical_generic);
  add("ogf_variant", {rnd}, 1, ogf_variant);
  return c;
}

}  // namespace jfrac::detail
