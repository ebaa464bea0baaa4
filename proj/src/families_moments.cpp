#include <mutex>

#include "families_detail.hpp"

namespace jfrac::detail {

namespace {

Rational poch(const Rational& a, long n) { return pochhammer<Rational>(a, n); }

// b_n, lambda_n recovered from exact moments, extended on demand.
class MomentJFraction {
 public:
  explicit MomentJFraction(ExactSeq mu) : mu_(std::move(mu)) {}

  Rational b(int n) {
    ensure(n);
    return jf_.b(n);
  }
  Rational lambda(int n) {
    ensure(n);
    return jf_.lambda(n);
  }

 private:
  void ensure(int n) {
    std::lock_guard<std::mutex> lock(m_);
    if (jf_.b_count() > n && jf_.lambda_count() >= n) return;
    int N = std::max(n + 8, 2 * jf_.b_count());
    std::vector<Rational> mu;
    for (int k = 0; k <= 2 * N + 1; ++k) mu.push_back(mu_(k));
    jf_ = jfraction_by_inversion(mu, N);
  }

  ExactSeq mu_;
  JFraction jf_;
  std::mutex m_;
};

using Coefs = std::vector<Rational>;

Coefs mul(const Coefs& a, const Coefs& b) {
  Coefs c(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// e^{ct} through t^N
Coefs exp_coefs(const Rational& c, int N) {
  Coefs r;
  for (int n = 0; n <= N; ++n) r.push_back(rpow(c, n) / factorial(n));
  return r;
}

// pFq(numer; denom; c t^power) through t^N
Coefs hyp_coefs(const std::vector<Rational>& numer, const std::vector<Rational>& denom, const Rational& c, int power,
                int N) {
  Coefs r(static_cast<std::size_t>(N + 1), Rational(0));
  for (int m = 0; power * m <= N; ++m) {
    Rational v = rpow(c, m) / factorial(m);
    for (const auto& a : numer) v *= poch(a, m);
    for (const auto& b : denom) v /= poch(b, m);
    r[static_cast<std::size_t>(power * m)] = v;
  }
  return r;
}

// t^j/j! through t^N
Coefs lead(int j, int N) {
  Coefs r(static_cast<std::size_t>(N + 1), Rational(0));
  if (j <= N) r[static_cast<std::size_t>(j)] = 1 / factorial(j);
  return r;
}

void attach_moment_jfraction(FamilySpec& f) {
  auto cache = std::make_shared<MomentJFraction>(f.moment_exact);
  f.b_exact = [cache](int n) { return cache->b(n); };
  f.lambda_exact = [cache](int n) {
    if (n < 1) throw InvalidParams("lambda_n needs n >= 1");
    return cache->lambda(n);
  };
}

Rational hermite_poly(int n, const Rational& x) {
  Rational h0 = 1, h1 = 2 * x;
  if (n == 0) return h0;
  for (int m = 1; m < n; ++m) {
    Rational h2 = 2 * x * h1 - 2 * m * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

// L_n^{(al)}(x) = sum_k (al+k+1)_{n-k}/(n-k)! (-x)^k/k!
Rational laguerre_poly(int n, const Rational& al, const Rational& x) {
  Rational s = 0;
  for (int k = 0; k <= n; ++k) s += poch(al + k + 1, n - k) / factorial(n - k) * rpow(-x, k) / factorial(k);
  return s;
}

// M_n(y; be) = sum_k C(n,k) (-y)_k kappa^k / (be)_k
Rational meixner_sum(int n, const Rational& y, const Rational& be, const Rational& kappa) {
  Rational s = 0;
  for (int k = 0; k <= n; ++k) s += binomial(n, k) * poch(-y, k) * rpow(kappa, k) / poch(be, k);
  return s;
}

Rational gegenbauer_poly(int n, const Rational& nu, const Rational& x) {
  // (m+1) C_{m+1} = 2(m+nu) x C_m - (m+2nu-1) C_{m-1}
  Rational c0 = 1, c1 = 2 * nu * x;
  if (n == 0) return c0;
  for (int m = 1; m < n; ++m) {
    Rational c2 = (2 * (m + nu) * x * c1 - (m + 2 * nu - 1) * c0) / (m + 1);
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

FamilySpec hermite_moments(const ParamMap& p) {
  const Rational x = p.at("x");
  FamilySpec f;
  f.moment_exact = [x](int n) { return hermite_poly(n, x); };
  f.b_exact = [x](int) { return Rational(2 * x); };
  f.lambda_exact = [](int n) { return Rational(-2 * n); };
  f.weight_exact = [](int n) { return Rational(factorial(n) * rpow(Rational(-2), n)); };
  f.tableau_closed = [x](int i, int n) { return Rational(binomial(n, i) * hermite_poly(n - i, x)); };
  f.q_series_exact = [x](int n, int N) {
    return mul(lead(n, N), mul(exp_coefs(2 * x, N), hyp_coefs({}, {}, Rational(-1), 2, N)));
  };
  // t^n/n! e^{2xt - t^2}
  f.q_fn = [x](int n, const BigFloat& t, const PrecisionContext&) {
    return exact_value(power_over_factorial(t, n) * exp(t * (2 * x) - t * t));
  };
  return f;
}

FamilySpec laguerre_moments(const ParamMap& p) {
  const Rational al = p.at("alpha"), x = p.at("x");
  const bool printed = p.at("printed") == 1;
  if (!(al > 0)) throw InvalidParams("laguerre_moments needs alpha > 0");
  if (x == 0) throw InvalidParams("laguerre_moments needs x != 0");
  FamilySpec f;
  f.moment_exact = [=](int n) { return Rational(factorial(n) * laguerre_poly(n, al, x) / poch(al + 1, n)); };
  attach_moment_jfraction(f);
  f.tableau_closed = [=](int i, int m) {
    int n = m - i;
    Rational a2 = al + 2 * i;
    return Rational(binomial(m, i) * factorial(n) * laguerre_poly(n, a2, x) / poch(a2 + 1, n));
  };
  if (!printed) {
    // n! (al)_n (-x^2)^n / ((al)_{2n} (al+1)_{2n})
    f.weight_exact = [=](int n) {
      return Rational(factorial(n) * poch(al, n) * rpow(-x * x, n) / (poch(al, 2 * n) * poch(al + 1, 2 * n)));
    };
    f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
      auto s = eval_pFq({}, {ctx.num(al + 2 * n + 1)}, -(t * x), ctx);
      return scaled(power_over_factorial(t, n) * exp(t), s);
    };
    f.q_series_exact = [=](int n, int N) {
      return mul(lead(n, N), mul(exp_coefs(1, N), hyp_coefs({}, {al + 2 * n + 1}, -x, 1, N)));
    };
  } else {
    f.weight_exact = [=](int n) {
      return Rational(factorial(n) * poch(al, n) * rpow(-4 * x * x, n) / (poch(al, 2 * n) * poch(al + 1, n)));
    };
    f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
      auto s = eval_pFq({}, {ctx.num(al + 2 * n + 1)}, -(t * (2 * x)), ctx);
      return scaled(power_over_factorial(t, n) * exp(t), s);
    };
    f.q_series_exact = [=](int n, int N) {
      return mul(lead(n, N), mul(exp_coefs(1, N), hyp_coefs({}, {al + 2 * n + 1}, -2 * x, 1, N)));
    };
  }
  return f;
}

bool nonnegative_integer(const Rational& r) { return r.get_den() == 1 && r >= 0; }

FamilySpec meixner_moments(const ParamMap& p) {
  const Rational be = p.at("beta"), c = p.at("c"), x = p.at("x");
  const bool printed = p.at("printed") == 1;
  if (!(be > 1)) throw InvalidParams("meixner_moments needs beta > 1");
  if (!(c > 0 && c < 1)) throw InvalidParams("meixner_moments needs 0 < c < 1");
  if (nonnegative_integer(x) || nonnegative_integer(-(be + x)))
    throw InvalidParams("meixner_moments needs x and -(beta + x) outside {0, 1, 2, ...}");
  const Rational kappa = (1 - c) / c;
  FamilySpec f;
  f.moment_exact = [=](int n) { return meixner_sum(n, x, be, kappa); };
  attach_moment_jfraction(f);
  f.tableau_closed = [=](int i, int m) {
    return Rational(binomial(m, i) * meixner_sum(m - i, x - i, be + 2 * i, kappa));
  };
  f.weight_exact = [=](int n) {
    Rational w = factorial(n) * poch(-x, n) * poch(be + x, n) * poch(be - 1, n) * rpow(kappa, 2 * n) / poch(be - 1, 2 * n);
    return Rational(w / (printed ? poch(be, n) : poch(be, 2 * n)));
  };
  // t^n/n! e^t 1F1(n - x; beta + 2n; kappa t)
  f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_pFq({ctx.num(n - x)}, {ctx.num(be + 2 * n)}, t * kappa, ctx);
    return scaled(power_over_factorial(t, n) * exp(t), s);
  };
  f.q_series_exact = [=](int n, int N) {
    return mul(lead(n, N), mul(exp_coefs(1, N), hyp_coefs({n - x}, {be + 2 * n}, kappa, 1, N)));
  };
  return f;
}

FamilySpec meixner_pollaczek_moments(const ParamMap& p) {
  const Rational lam = p.at("lambda"), phi_pi = p.at("phi_pi"), x = p.at("x");
  const bool printed = p.at("printed") == 1;
  if (!(lam > ratio(1, 2))) throw InvalidParams("meixner_pollaczek_moments needs lambda > 1/2");
  if (!(phi_pi > 0 && phi_pi < 1)) throw InvalidParams("meixner_pollaczek_moments needs 0 < phi_pi < 1");
  // kappa = e^{-2 i phi} - 1
  auto kappa = [phi_pi](const PrecisionContext& ctx) {
    BigFloat two_phi = pi(ctx.precision_bits) * (2 * phi_pi);
    return Complex{cos(two_phi) - 1L, -sin(two_phi)};
  };
  auto cnum = [](const Rational& re, const Rational& im, const PrecisionContext& ctx) {
    return Complex{ctx.num(re), ctx.num(im)};
  };
  FamilySpec f;
  // t^n/n! e^t 1F1(lambda + ix + n; 2 lambda + 2n; kappa t)
  f.q_fn_c = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
    Complex z = kappa(ctx) * t;
    auto s = eval_pFq({cnum(lam + n, x, ctx)}, {cnum(2 * lam + 2 * n, 0, ctx)}, z, ctx);
    BigFloat pref = power_over_factorial(t, n) * exp(t);
    return ComplexSeriesValue{s.value * pref, s.terms_used, s.tail_bound * abs(pref)};
  };
  // n! (lambda+ix)_n (lambda-ix)_n (2lambda-1)_n kappa^{2n} / ((2lambda-1)_{2n} (2lambda)_{2n})
  f.weight_c = [=](int n, const PrecisionContext& ctx) {
    // (lambda+ix)_n (lambda-ix)_n = prod |lambda + k + ix|^2 is real and rational
    Rational r = factorial(n) * poch(2 * lam - 1, n) / poch(2 * lam - 1, 2 * n);
    for (int k = 0; k < n; ++k) r *= (lam + k) * (lam + k) + x * x;
    if (printed) {
      r *= rpow(Rational(4), n) / poch(2 * lam, n);
      return Complex{ctx.num(r), ctx.num(0)};
    }
    r /= poch(2 * lam, 2 * n);
    return pow(kappa(ctx), 2L * n) * ctx.num(r);
  };
  return f;
}

FamilySpec gegenbauer_moments(const ParamMap& p) {
  const Rational nu = p.at("nu"), x = p.at("x");
  if (!(nu > ratio(-1, 2)) || nu == 0 || nu == ratio(1, 2))
    throw InvalidParams("gegenbauer_moments needs nu > -1/2, nu != 0, nu != 1/2");
  if (x * x == 1) throw InvalidParams("gegenbauer_moments needs x^2 != 1");
  const Rational half = ratio(1, 2);
  FamilySpec f;
  f.moment_exact = [=](int n) { return Rational(factorial(n) * gegenbauer_poly(n, nu, x) / poch(2 * nu, n)); };
  attach_moment_jfraction(f);
  // H_{i,i+n} = sum_k (n+i)! x^{n-2k} (x^2-1)^k / (i! k! (n-2k)! (nu+1/2+i)_k 4^k)
  f.tableau_closed = [=](int i, int m) {
    int n = m - i;
    Rational s = 0;
    for (int k = 0; 2 * k <= n; ++k)
      s += factorial(m) * rpow(x, n - 2 * k) * rpow(x * x - 1, k) /
           (factorial(i) * factorial(k) * factorial(n - 2 * k) * poch(nu + half + i, k) * rpow(Rational(4), k));
    return s;
  };
  // (n+nu-1/2)(-1)^n (2nu-1)_n / ((nu+1/2)_n (nu-1/2)_{n+1}) (1-x^2)^n n!/4^n
  f.weight_exact = [=](int n) {
    Rational w = (n + nu - half) * rpow(Rational(-1), n) * poch(2 * nu - 1, n) /
                 (poch(nu + half, n) * poch(nu - half, n + 1));
    return Rational(w * rpow(1 - x * x, n) * factorial(n) / rpow(Rational(4), n));
  };
  // t^n/n! e^{tx} 0F1(; nu + 1/2 + n; (x^2-1) t^2/4)
  f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_pFq({}, {ctx.num(nu + half + n)}, t * t * ((x * x - 1) / 4), ctx);
    return scaled(power_over_factorial(t, n) * exp(t * x), s);
  };
  f.q_series_exact = [=](int n, int N) {
    return mul(lead(n, N), mul(exp_coefs(x, N), hyp_coefs({}, {nu + half + n}, (x * x - 1) / 4, 2, N)));
  };
  return f;
}

}  // namespace

FamilySpec build_moments(const std::string& id, const ParamMap& p) {
  if (id == "derangement") {
    const Rational al = p.at("alpha"), x = p.at("x");
    if (x == 0) throw InvalidParams("derangement needs x != 0");
    FamilySpec f = make_affine(make_family("laguerre", {{"alpha", al}}), 1 / x, 1 / x);
    // n! (alpha+1)_n x^{2n}
    f.weight_exact = [al, x](int n) { return Rational(factorial(n) * poch(al + 1, n) * rpow(x, 2 * n)); };
    if (p.at("printed") == 1) {
      // Q_bar_n = e^{-bt/a} Q_n(t/a) without the a^n factor
      auto qf = f.q_fn;
      f.q_fn = [qf, x](int n, const BigFloat& t, const PrecisionContext& ctx) {
        return scaled(ctx.num(rpow(x, n)), qf(n, t, ctx));
      };
    }
    return f;
  }
  FamilySpec f;
  if (id == "hermite_moments") f = hermite_moments(p);
  else if (id == "laguerre_moments") f = laguerre_moments(p);
  else if (id == "meixner_moments") f = meixner_moments(p);
  else if (id == "meixner_pollaczek_moments") f = meixner_pollaczek_moments(p);
  else if (id == "gegenbauer_moments") f = gegenbauer_moments(p);
  else throw InvalidParams("unknown family '" + id + "'");
  numeric_from_exact(f);
  return f;
}

}  // namespace jfrac::detail

namespace jfrac {

FamilySpec make_affine(const FamilySpec& inner, const Rational& a, const Rational& b) {
  if (a == 0) throw InvalidParams("affine transform needs a != 0");
  if (inner.normalization != Normalization::Factorial)
    throw InvalidParams("affine transform is defined for exponentially normalized families");
  if (inner.is_complex()) throw Unsupported("affine transform of a complex family");
  FamilySpec f;
  f.id = "affine(" + inner.id + ")";
  f.params = inner.params;
  f.params["affine_a"] = a;
  f.params["affine_b"] = b;
  f.q = inner.q;
  f.translation = TranslationKind::affine(a, b, inner.translation);

  if (inner.b_exact) {
    auto be = inner.b_exact;
    f.b_exact = [be, a, b](int n) { return Rational((be(n) - b) / a); };
  }
  if (inner.lambda_exact) {
    auto le = inner.lambda_exact;
    f.lambda_exact = [le, a](int n) { return Rational(le(n) / (a * a)); };
  }
  {
    auto bn = inner.b_num, ln = inner.lambda_num;
    f.b_num = [bn, a, b](int n, const PrecisionContext& ctx) { return (bn(n, ctx) - b) / a; };
    f.lambda_num = [ln, a](int n, const PrecisionContext& ctx) { return ln(n, ctx) / (a * a); };
  }
  if (inner.weight_exact) {
    auto we = inner.weight_exact;
    f.weight_exact = [we, a](int n) { return Rational(we(n) / rpow(a * a, n)); };
  }
  // a^n e^{-bt/a} Q_n(t/a); the a^n keeps Q_bar_n = sum_m H_bar_{n,m} t^m/m!
  auto qf = inner.q_fn;
  f.q_fn = [qf, a, b](int n, const BigFloat& t, const PrecisionContext& ctx) {
    return detail::scaled(ctx.num(rpow(a, n)) * exp(-(t * (b / a))), qf(n, t / a, ctx));
  };
  // mu_bar_n = a^{-n} sum_k C(n,k) (-b)^{n-k} mu_k
  f.moment_exact = [inner, a, b](int n) {
    std::vector<Rational> mu = inner.moments(n);
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += binomial(n, k) * rpow(-b, n - k) * mu[static_cast<std::size_t>(k)];
    return Rational(s / rpow(a, n));
  };
  if (inner.exact()) {
    // H_bar_{j,m} = a^{j-m} sum_k C(m,k) (-b)^{m-k} H_{j,k}
    f.tableau_closed = [inner, a, b](int j, int m) {
      StieltjesTableau tab = tableau_from_jfraction(inner.jfraction(m), m);
      Rational s = 0;
      for (int k = j; k <= m; ++k) s += binomial(m, k) * rpow(-b, m - k) * tab.at(j, k);
      return Rational(s * rpow(a, j - m));
    };
  }
  return f;
}

}  // namespace jfrac
