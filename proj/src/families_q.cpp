#include "families_detail.hpp"

namespace jfrac::detail {

namespace {

Rational qp(const Rational& a, const Rational& q, long n) { return q_pochhammer<Rational>(a, q, n); }

BigFloat qp_inf_nonzero(const BigFloat& a, const Rational& q, const PrecisionContext& ctx) {
  BigFloat v = q_pochhammer_inf(a, ctx.num(q), ctx);
  if (v.is_zero()) throw DomainError("infinite q-Pochhammer vanishes at this argument");
  return v;
}

std::vector<BigFloat> nums(const std::vector<Rational>& v, const PrecisionContext& ctx) {
  std::vector<BigFloat> out;
  for (const auto& x : v) out.push_back(ctx.num(x));
  return out;
}

// 2^{j+1}/t sum_k coef(k) m_k I_{m_k}(t) with m_k = j + step k + 1. Equals t^j/j! + O(t^{j+1})
// for the families below, so t = 0 gives the Kronecker delta.
SeriesValue bessel_sum(int j, int step, const std::function<BigFloat(int)>& coef, const BigFloat& t,
                       const PrecisionContext& ctx) {
  if (t.is_zero()) return exact_value(ctx.num(j == 0 ? 1 : 0));
  BesselICache I(t, ctx);
  BigFloat sum = ctx.num(0), last = ctx.num(0), prev = ctx.num(0);
  int small = 0;
  for (int k = 0; k < ctx.max_terms; ++k) {
    const int m = j + step * k + 1;
    BigFloat term = coef(k) * m * I(m);
    sum += term;
    prev = last;
    last = abs(term);
    if (last < ctx.rel_tolerance * abs(sum) && !sum.is_zero()) {
      if (++small >= ctx.consecutive_small) {
        BigFloat pref = pow(ctx.num(2), j + 1) / t;
        BigFloat tail = prev.is_zero() ? last : last * last / prev;
        return {pref * sum, k + 1, abs(pref) * tail};
      }
    } else {
      small = 0;
    }
  }
  throw NonConvergent("Bessel-I sum did not settle within max_terms");
}

FamilySpec little_q_jacobi(const ParamMap& p) {
  const Rational a = p.at("a"), b = p.at("b"), q = p.at("q");
  if (!(a * q > 0 && a * q < 1)) throw InvalidParams("little_q_jacobi needs 0 < aq < 1");
  if (!(b * q < 1)) throw InvalidParams("little_q_jacobi needs bq < 1");
  FamilySpec f;
  f.normalization = Normalization::QFactorial;
  f.translation = TranslationKind::q_translation(q);
  const Rational ab = a * b;
  f.lambda_exact = [=](int n) {
    Rational num = a * rpow(q, 2 * n - 1) * (1 - rpow(q, n)) * (1 - a * rpow(q, n)) * (1 - b * rpow(q, n)) *
                   (1 - ab * rpow(q, n));
    Rational m = 1 - ab * rpow(q, 2 * n);
    return frac(num, (1 - ab * rpow(q, 2 * n - 1)) * m * m * (1 - ab * rpow(q, 2 * n + 1)));
  };
  f.b_exact = [=](int n) {
    Rational A = frac(rpow(q, n) * (1 - a * rpow(q, n + 1)) * (1 - ab * rpow(q, n + 1)),
                      (1 - ab * rpow(q, 2 * n + 1)) * (1 - ab * rpow(q, 2 * n + 2)));
    Rational C = frac(a * rpow(q, n) * (1 - rpow(q, n)) * (1 - b * rpow(q, n)),
                      (1 - ab * rpow(q, 2 * n)) * (1 - ab * rpow(q, 2 * n + 1)));
    return Rational(A + C);
  };
  // t^j/(q;q)_j 2phi1(0, aq^{j+1}; abq^{2j+2}; q, t)
  f.q_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_rphis(std::vector<Rational>{0, a * rpow(q, j + 1)}, {ab * rpow(q, 2 * j + 2)}, q, t, ctx);
    return scaled(pow(t, j) / q_factorial(q, j, ctx), s);
  };
  // t^j/((q;q)_j (t;q)_inf) 1phi1(bq^{j+1}; abq^{2j+2}; q, aq^{j+1} t)
  f.q_alt_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_rphis(std::vector<Rational>{b * rpow(q, j + 1)}, {ab * rpow(q, 2 * j + 2)}, q,
                        t * (a * rpow(q, j + 1)), ctx);
    return scaled(pow(t, j) / (q_factorial(q, j, ctx) * qp_inf_nonzero(t, q, ctx)), s);
  };
  // q^{C(j,2)} t^j/(q;q)_j 1phi1(aq^{j+1}; abq^{2j+2}; q, -t q^j)
  f.q_tilde_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_rphis(std::vector<Rational>{a * rpow(q, j + 1)}, {ab * rpow(q, 2 * j + 2)}, q, -(t * rpow(q, j)), ctx);
    return scaled(ctx.num(rpow(q, j * (j - 1) / 2)) * pow(t, j) / q_factorial(q, j, ctx), s);
  };
  return f;
}

FamilySpec big_q_jacobi(const ParamMap& p) {
  const Rational a = p.at("a"), b = p.at("b"), c = p.at("c"), q = p.at("q");
  if (a == 0 || b == 0 || c == 0) throw InvalidParams("big_q_jacobi needs a, b, c != 0");
  FamilySpec f;
  f.normalization = Normalization::QFactorial;
  f.translation = TranslationKind::q_translation(q);
  const Rational ab = a * b;
  f.lambda_exact = [=](int n) {
    Rational qn = rpow(q, n);
    Rational num = -a * c * rpow(q, n + 1) * (1 - qn) * (1 - a * qn) * (1 - b * qn) * (1 - c * qn) * (1 - ab * qn) *
                   (1 - ab * qn / c);
    Rational m = 1 - ab * rpow(q, 2 * n);
    return frac(num, (1 - ab * rpow(q, 2 * n - 1)) * m * m * (1 - ab * rpow(q, 2 * n + 1)));
  };
  f.b_exact = [=](int n) {
    Rational qn = rpow(q, n), qn1 = rpow(q, n + 1);
    Rational A = frac((1 - a * qn1) * (1 - ab * qn1) * (1 - c * qn1),
                      (1 - ab * rpow(q, 2 * n + 1)) * (1 - ab * rpow(q, 2 * n + 2)));
    Rational C = frac(-a * c * qn1 * (1 - qn) * (1 - b * qn) * (1 - ab * qn / c),
                      (1 - ab * rpow(q, 2 * n)) * (1 - ab * rpow(q, 2 * n + 1)));
    return Rational(1 - A - C);
  };
  // t^j/((q;q)_j (aqt;q)_inf) 2phi1(aq^{j+1}, abq^{j+1}/c; abq^{2j+2}; q, qct)
  f.q_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_rphis(std::vector<Rational>{a * rpow(q, j + 1), ab * rpow(q, j + 1) / c}, {ab * rpow(q, 2 * j + 2)}, q,
                        t * (q * c), ctx);
    return scaled(pow(t, j) / (q_factorial(q, j, ctx) * qp_inf_nonzero(t * (a * q), q, ctx)), s);
  };
  // q^{C(j,2)} t^j/(q;q)_j (-t;q)_inf 2phi1(aq^{j+1}, cq^{j+1}; abq^{2j+2}; q, -t)
  f.q_tilde_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto s = eval_rphis(std::vector<Rational>{a * rpow(q, j + 1), c * rpow(q, j + 1)}, {ab * rpow(q, 2 * j + 2)}, q, -t,
                        ctx);
    BigFloat pref = ctx.num(rpow(q, j * (j - 1) / 2)) * pow(t, j) / q_factorial(q, j, ctx) *
                    q_pochhammer_inf(-t, ctx.num(q), ctx);
    return scaled(pref, s);
  };
  // q^{C(j,2)} t^j (-atq^{j+1};q)_inf/(q;q)_j
  //   2phi2(aq^{j+1}, abq^{j+1}/c; abq^{2j+2}, -atq^{j+1}; q, -tcq^{j+1})
  f.q_tilde_alt_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat d = -(t * (a * rpow(q, j + 1)));
    auto s = eval_rphis(nums({a * rpow(q, j + 1), ab * rpow(q, j + 1) / c}, ctx), {ctx.num(ab * rpow(q, 2 * j + 2)), d},
                        ctx.num(q), -(t * (c * rpow(q, j + 1))), ctx);
    BigFloat pref = ctx.num(rpow(q, j * (j - 1) / 2)) * pow(t, j) / q_factorial(q, j, ctx) *
                    q_pochhammer_inf(d, ctx.num(q), ctx);
    return scaled(pref, s);
  };
  return f;
}

FamilySpec al_salam_carlitz(const ParamMap& p) {
  const Rational a = p.at("a"), q = p.at("q");
  if (a == 0) throw InvalidParams("al_salam_carlitz needs a != 0");
  FamilySpec f;
  f.normalization = Normalization::QFactorial;
  f.translation = TranslationKind::non_commutative(q);
  f.lambda_exact = [=](int j) { return Rational(-a * rpow(q, j - 1) * (1 - rpow(q, j))); };
  f.b_exact = [=](int n) { return Rational((1 + a) * rpow(q, n)); };
  // Rogers-Szego polynomial h_n(a) = sum_k [n k]_q a^k
  f.moment_exact = [=](int n) {
    Rational h = 0;
    for (int k = 0; k <= n; ++k) h += q_binomial<Rational>(n, k, q) * rpow(a, k);
    return h;
  };
  // t^n/((q;q)_n (t, at;q)_inf)
  f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat d = q_factorial(q, n, ctx) * qp_inf_nonzero(t, q, ctx) * qp_inf_nonzero(t * a, q, ctx);
    return exact_value(pow(t, n) / d);
  };
  // (-tq^j;q)_inf/(q;q)_j t^j q^{C(j,2)} 1phi1(0; -tq^j; q, -atq^j)
  f.q_tilde_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    BigFloat tq = t * rpow(q, j);
    auto s = eval_rphis(std::vector<BigFloat>{ctx.num(0)}, {-tq}, ctx.num(q), -(tq * a), ctx);
    BigFloat pref = q_pochhammer_inf(-tq, ctx.num(q), ctx) / q_factorial(q, j, ctx) * pow(t, j) *
                    ctx.num(rpow(q, j * (j - 1) / 2));
    return scaled(pref, s);
  };
  return f;
}

FamilySpec q_ultraspherical(const ParamMap& p) {
  const Rational be = p.at("beta"), q = p.at("q");
  if (!(be > 0 && be < 1)) throw InvalidParams("q_ultraspherical needs 0 < beta < 1");
  FamilySpec f;
  f.b_exact = [](int) { return Rational(0); };
  f.lambda_exact = [=](int j) {
    return frac((1 - rpow(q, j)) * (1 - be * be * rpow(q, j - 1)), 4 * (1 - be * rpow(q, j - 1)) * (1 - be * rpow(q, j)));
  };
  // 2^{j+1}/t sum_k (j+2k+1) I_{j+2k+1}(t) beta^k (q/beta, q^{j+1};q)_k / (q, beta q^{j+1};q)_k
  f.q_fn = [=](int j, const BigFloat& t, const PrecisionContext& ctx) {
    auto coef = [&](int k) {
      Rational c = rpow(be, k) * qp(q / be, q, k) * qp(rpow(q, j + 1), q, k) / (qp(q, q, k) * qp(be * rpow(q, j + 1), q, k));
      return ctx.num(c);
    };
    return bessel_sum(j, 2, coef, t, ctx);
  };
  return f;
}

FamilySpec q_ultraspherical_beta0(const ParamMap& p) {
  const Rational q = p.at("q");
  const bool printed = p.at("printed") == 1;
  FamilySpec f;
  f.b_exact = [](int) { return Rational(0); };
  f.lambda_exact = [=](int j) { return Rational((1 - rpow(q, j)) / 4); };
  // F_n = 2^{n+1}/t sum_k (n+2k+1) I_{n+2k+1}(t) (-1)^k q^{k(k+1)/2} [n+k, k]_q
  f.q_fn = [=](int n, const BigFloat& t, const PrecisionContext& ctx) {
    auto coef = [&](int k) {
      int sign_exp = printed ? n : k;
      Rational c = (sign_exp % 2 ? -1 : 1) * rpow(q, k * (k + 1) / 2) * q_binomial<Rational>(n + k, k, q);
      return ctx.num(c);
    };
    return bessel_sum(n, 2, coef, t, ctx);
  };
  return f;
}

// Askey-Wilson polynomials at (a/sqrt q, q, -sqrt q, -q).
FamilySpec askey_wilson_slice(const ParamMap& p) {
  const Rational a = p.at("a"), q = p.at("q");
  const bool printed = p.at("printed") == 1;
  if (!(a > 0 && a < 1)) throw InvalidParams("askey_wilson_slice needs 0 < a < 1");
  FamilySpec f;
  f.lambda_exact = [=](int n) {
    Rational num = (1 - rpow(q, n)) * (1 - a * rpow(q, n)) * (1 - a * a * rpow(q, 2 * n - 1)) *
                   (1 + a * rpow(q, n - 1)) * (1 - rpow(q, 2 * n + 1)) * (1 + rpow(q, n + 1));
    Rational m = 1 - a * rpow(q, 2 * n);
    return frac(num, 4 * (1 - a * rpow(q, 2 * n - 1)) * m * m * (1 - a * rpow(q, 2 * n + 1)));
  };
  f.b_num = [=](int n, const PrecisionContext& ctx) {
    BigFloat sq = sqrt(ctx.num(q));
    BigFloat a1 = ctx.num(a) / sq, a2 = ctx.num(q), a3 = -sq, a4 = -ctx.num(q);
    BigFloat A4 = ctx.num(a * q * q);
    auto qp_ = [&](long e) { return ctx.num(rpow(q, e)); };
    BigFloat An = (1L - a1 * a2 * qp_(n)) * (1L - a1 * a3 * qp_(n)) * (1L - a1 * a4 * qp_(n)) * (1L - A4 * qp_(n - 1)) /
                  (a1 * (1L - A4 * qp_(2 * n - 1)) * (1L - A4 * qp_(2 * n)));
    BigFloat Cn = a1 * (1L - qp_(n)) * (1L - a2 * a3 * qp_(n - 1)) * (1L - a2 * a4 * qp_(n - 1)) *
                  (1L - a3 * a4 * qp_(n - 1)) / ((1L - A4 * qp_(2 * n - 2)) * (1L - A4 * qp_(2 * n - 1)));
    return (a1 + 1L / a1 - An - Cn) / 2L;
  };
  if (!printed) {
    // 2^{m+1}/t sum_k (k+m+1) (a/sqrt q)^k (q^{m+1}, q/a, -q^{m+2};q)_k (q^{2m+3};q^2)_k
    //   / (q, aq^{2m+2}, q^{k+2m+2};q)_k I_{k+m+1}(t)
    f.q_fn = [=](int m, const BigFloat& t, const PrecisionContext& ctx) {
      BigFloat r = ctx.num(a) / sqrt(ctx.num(q));
      auto coef = [&](int k) {
        Rational c = qp(rpow(q, m + 1), q, k) * qp(q / a, q, k) * qp(-rpow(q, m + 2), q, k) *
                     qp(rpow(q, 2 * m + 3), q * q, k) /
                     (qp(q, q, k) * qp(a * rpow(q, 2 * m + 2), q, k) * qp(rpow(q, k + 2 * m + 2), q, k));
        return pow(r, k) * c;
      };
      return bessel_sum(m, 1, coef, t, ctx);
    };
  } else {
    f.q_fn = [=](int m, const BigFloat& t, const PrecisionContext& ctx) {
      auto coef = [&](int k) {
        Rational c = rpow(2 * a, k) * qp(rpow(q, m + 1), q, k) * qp(q / a, q, k) * qp(-rpow(q, m + 1), q, k) *
                     qp(rpow(q, 2 * m + 3), q * q, k) /
                     (qp(q, q, k) * qp(a * rpow(q, 2 * m + 2), q, k) * qp(rpow(q, k + m + 2), q, k));
        return ctx.num(c);
      };
      return bessel_sum(m, 1, coef, t, ctx);
    };
    f.weight_exact = [=](int n) {
      return Rational(qp(q * q, q, n) * qp(a * a * q, q, n) /
                      (rpow(Rational(4), n) * qp(a * q, q, 2 * n) * qp(a * q * q, q, 2 * n)));
    };
  }
  return f;
}

}  // namespace

FamilySpec build_q(const std::string& id, const ParamMap& p) {
  FamilySpec f;
  if (id == "little_q_jacobi") f = little_q_jacobi(p);
  else if (id == "big_q_jacobi") f = big_q_jacobi(p);
  else if (id == "al_salam_carlitz") f = al_salam_carlitz(p);
  else if (id == "q_ultraspherical") f = q_ultraspherical(p);
  else if (id == "q_ultraspherical_beta0") f = q_ultraspherical_beta0(p);
  else if (id == "askey_wilson_slice") f = askey_wilson_slice(p);
  else throw InvalidParams("unknown family '" + id + "'");
  numeric_from_exact(f);
  return f;
}

}  // namespace jfrac::detail
