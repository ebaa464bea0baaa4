#include <sstream>

#include "families_detail.hpp"
#include "theorems_detail.hpp"

namespace jfrac::detail {

namespace {

using Poly = std::vector<Rational>;  // coefficients in x, low degree first

Rational poch(const Rational& a, long n) { return pochhammer<Rational>(a, n); }
Rational qp(const Rational& a, const Rational& q, long n) { return q_pochhammer<Rational>(a, q, n); }

int nonneg(const ParamMap& p, const std::string& name) {
  int v = get_int(p, name);
  if (v < 0) throw InvalidParams(name + " must be >= 0");
  return v;
}

// Physicists' Hermite H_0..H_n at x.
std::vector<Rational> hermite_values(int n, const Rational& x) {
  std::vector<Rational> h{Rational(1), Rational(2 * x)};
  for (int k = 1; k < n; ++k) h.push_back(2 * x * h[static_cast<std::size_t>(k)] - 2 * k * h[static_cast<std::size_t>(k - 1)]);
  h.resize(static_cast<std::size_t>(n + 1));
  return h;
}

// C_0^nu(x)..C_n^nu(x): (k+1) C_{k+1} = 2(k+nu) x C_k - (k+2nu-1) C_{k-1}.
std::vector<Rational> gegenbauer_values(int n, const Rational& nu, const Rational& x) {
  std::vector<Rational> c{Rational(1), Rational(2 * nu * x)};
  for (int k = 1; k < n; ++k)
    c.push_back((2 * (k + nu) * x * c[static_cast<std::size_t>(k)] - (k + 2 * nu - 1) * c[static_cast<std::size_t>(k - 1)]) /
                (k + 1));
  c.resize(static_cast<std::size_t>(n + 1));
  return c;
}

// P_n^{(alpha,beta)}(x) = (alpha+1)_n/n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2).
Rational jacobi_value(int n, const Rational& al, const Rational& be, const Rational& x) {
  Rational sum = 0, term = 1, z = (1 - x) / 2;
  for (int k = 0; k <= n; ++k) {
    sum += term;
    term *= (k - n) * (n + al + be + 1 + k) / ((al + 1 + k) * (k + 1)) * z;
  }
  return poch(al + 1, n) / factorial(n) * sum;
}

// Continuous q-ultraspherical C_0..C_n(x; beta|q) as polynomials in x:
// 2x(1 - beta q^k) C_k = (1 - q^{k+1}) C_{k+1} + (1 - beta^2 q^{k-1}) C_{k-1}.
std::vector<Poly> rogers_polys(int n, const Rational& be, const Rational& q) {
  std::vector<Poly> c(static_cast<std::size_t>(n + 1), Poly(static_cast<std::size_t>(n + 1), Rational(0)));
  c[0][0] = 1;
  for (int k = 0; k < n; ++k) {
    Poly& next = c[static_cast<std::size_t>(k + 1)];
    const Poly& cur = c[static_cast<std::size_t>(k)];
    for (int d = 0; d < n; ++d) next[static_cast<std::size_t>(d + 1)] += 2 * (1 - be * rpow(q, k)) * cur[static_cast<std::size_t>(d)];
    if (k >= 1)
      for (int d = 0; d <= n; ++d)
        next[static_cast<std::size_t>(d)] -= (1 - be * be * rpow(q, k - 1)) * c[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(d)];
    for (auto& v : next) v /= 1 - rpow(q, k + 1);
  }
  return c;
}

VerificationReport hermite_convolution(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational x = get(p, "x");
  const int M = nonneg(p, "max");
  auto h = hermite_values(2 * M, x);
  std::vector<Rational> l, rr;
  for (int m = 0; m <= M; ++m)
    for (int n = 0; n <= M; ++n) {
      l.push_back(h[static_cast<std::size_t>(m + n)] / (factorial(m) * factorial(n)));
      Rational s = 0;
      for (int k = 0; k <= std::min(m, n); ++k)
        s += rpow(Rational(-2), k) / factorial(k) * h[static_cast<std::size_t>(m - k)] / factorial(m - k) *
             h[static_cast<std::size_t>(n - k)] / factorial(n - k);
      rr.push_back(s);
    }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

VerificationReport bessel_reduction(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational mu = get(p, "mu"), nu = get(p, "nu");
  if (!(mu > 0) || !(nu > -1)) throw DomainError("bessel_reduction needs mu > 0, nu > -1");
  const BigFloat z = get_num(p, "z", ctx);
  if (!(z > 0L)) throw DomainError("bessel_reduction needs z > 0");
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = pow(z / 2L, ctx.num(mu - nu)) * bessel_j(ctx.num(nu), z, ctx).value;
  BigFloat g = gamma_fn(ctx.num(mu)) / gamma_fn(ctx.num(nu + 1));
  std::vector<BigFloat> terms;
  for (int n = 0; n <= nonneg(p, "N"); ++n) {
    Rational c = poch(mu, n) * poch(mu - nu, n) * (mu + 2 * n) / (factorial(n) * poch(nu + 1, n));
    if (n % 2) c = -c;
    terms.push_back(g * c * bessel_j(ctx.num(mu + 2 * n), z, ctx).value);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport plane_wave_ultra(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational nu = get(p, "nu"), x = get(p, "x"), y = get(p, "y");
  if (!(nu > 0)) throw DomainError("plane_wave_ultra needs nu > 0");
  const int N = nonneg(p, "N");
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = exp(ctx.num(x * y));
  std::vector<BigFloat> terms;
  auto c = gegenbauer_values(N, nu, x);
  if (y == 0) {
    terms.push_back(ctx.num(1));  // I_{nu+n}(y)/(y/2)^nu -> delta_{n0}/Gamma(nu+1)
  } else {
    const BigFloat yf = ctx.num(y), nuf = ctx.num(nu);
    BigFloat pref = gamma_fn(nuf) / pow(yf / 2L, nuf);
    for (int n = 0; n <= N; ++n)
      terms.push_back(pref * (nu + n) * bessel_i(nuf + ctx.num(n), yf, ctx).value * c[static_cast<std::size_t>(n)]);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport plane_wave_cheby(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational x = get(p, "x"), y = get(p, "y");
  const int N = nonneg(p, "N");
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = exp(ctx.num(x * y));
  std::vector<BigFloat> terms;
  auto u = gegenbauer_values(N, Rational(1), x);  // U_n = C_n^1
  if (y == 0) {
    terms.push_back(ctx.num(1));
  } else {
    const BigFloat yf = ctx.num(y);
    for (int n = 0; n <= N; ++n)
      terms.push_back(2L / yf * (n + 1) * bessel_i(ctx.num(n + 1), yf, ctx).value * u[static_cast<std::size_t>(n)]);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport plane_wave_jacobi(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational al = get(p, "alpha"), be = get(p, "beta"), x = get(p, "x"), y = get(p, "y");
  if (!(al > -1) || !(be > -1)) throw DomainError("plane_wave_jacobi needs alpha, beta > -1");
  VerificationReport r = start_report(Mode::Numeric);
  BigFloat lhs = exp(ctx.num(x * y));
  const BigFloat y2 = ctx.num(2 * y), ey = exp(ctx.num(-y));
  std::vector<BigFloat> terms;
  for (int n = 0; n <= nonneg(p, "N"); ++n) {
    // Gamma(al+be+n+1)/Gamma(al+be+2n+1) = 1/(al+be+n+1)_n
    Rational c = jacobi_value(n, al, be, x) / poch(al + be + n + 1, n);
    BigFloat f = eval_pFq({ctx.num(be + n + 1)}, {ctx.num(al + be + 2 * n + 2)}, y2, ctx).value;
    terms.push_back(ctx.num(c) * pow(y2, n) * ey * f);
  }
  finish_numeric(r, lhs, terms, ctx);
  return r;
}

VerificationReport bessel_1f1_link(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational nu = get(p, "nu");
  if (!(nu > 0)) throw DomainError("bessel_1f1_link needs nu > 0");
  const BigFloat x = get_num(p, "x", ctx), nuf = ctx.num(nu);
  if (!(x > 0L)) throw DomainError("bessel_1f1_link needs x > 0");
  VerificationReport r = start_report(Mode::Numeric);
  SeriesValue f = eval_pFq({ctx.num(nu + ratio(1, 2))}, {ctx.num(2 * nu + 1)}, 2L * x, ctx);
  BigFloat lhs = exp(-x) * f.value;
  BigFloat rhs = gamma_fn(nuf + 1L) * pow(2L / x, nuf) * bessel_i(nuf, x, ctx).value;
  finish_numeric_pair(r, lhs, rhs, f.terms_used, ctx);
  return r;
}

VerificationReport hankel_gegenbauer(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational nu = get(p, "nu"), x = get(p, "x");
  if (!(nu > 0)) throw DomainError("hankel_gegenbauer needs nu > 0");
  const int n = nonneg(p, "n");
  auto c = gegenbauer_values(2 * n, nu, x);
  std::vector<Rational> mu;
  for (int k = 0; k <= 2 * n; ++k) mu.push_back(factorial(k) / poch(2 * nu, k) * c[static_cast<std::size_t>(k)]);
  std::vector<Rational> l, rr;
  for (int m = 0; m <= n; ++m) {
    l.push_back(hankel(mu, HankelKind::D, m));
    Rational closed = rpow(x * x - 1, m * (m + 1) / 2) / rpow(Rational(2), m * m);
    for (int k = 1; k <= m; ++k)
      closed *= factorial(k) * poch(2 * nu, k - 1) / (poch(nu + ratio(1, 2), k - 1) * poch(nu + ratio(1, 2), k));
    rr.push_back(closed);
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

// Empirical det(mubar_{i+j})/det(mu_{i+j}) for the derangement shift, orders 1..n+1,
// compared with a^{-m(m+1)}.
VerificationReport hankel_affine(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational al = get(p, "alpha"), x = get(p, "x");
  const int n = nonneg(p, "n");
  FamilySpec inner = make_family("laguerre", {{"alpha", al}});
  FamilySpec shifted = make_family("derangement", {{"alpha", al}, {"x", x}});
  const Rational a = frac(1, x);
  std::vector<Rational> mu = inner.moments(2 * n), mubar = shifted.moments(2 * n);
  std::vector<Rational> l, rr;
  std::ostringstream ratios;
  for (int m = 0; m <= n; ++m) {
    Rational ratio_m = frac(hankel(mubar, HankelKind::D, m), hankel(mu, HankelKind::D, m));
    l.push_back(ratio_m);
    rr.push_back(rpow(a, -m * (m + 1)));
    ratios << (m ? "," : "") << to_string(ratio_m);
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  r.lhs = ratios.str();
  return r;
}

VerificationReport connection_rogers(const ParamMap& p, const PrecisionContext& ctx) {
  const Rational be = get(p, "beta"), ga = get(p, "gamma"), q = get(p, "q");
  if (be == 0) throw DomainError("connection_rogers needs beta != 0");
  if (!(q > 0 && q < 1)) throw DomainError("connection_rogers needs 0 < q < 1");
  const int n = nonneg(p, "n");
  auto cg = rogers_polys(n, ga, q), cb = rogers_polys(n, be, q);
  std::vector<Rational> l, rr;
  for (int m = 0; m <= n; ++m) {
    Poly rhs(static_cast<std::size_t>(n + 1), Rational(0));
    for (int k = 0; 2 * k <= m; ++k) {
      Rational c = rpow(be, k) * qp(ga / be, q, k) * qp(ga, q, m - k) / (qp(q, q, k) * qp(q * be, q, m - k)) *
                   frac(1 - be * rpow(q, m - 2 * k), 1 - be);
      for (int d = 0; d <= n; ++d)
        rhs[static_cast<std::size_t>(d)] += c * cb[static_cast<std::size_t>(m - 2 * k)][static_cast<std::size_t>(d)];
    }
    const Poly& lhs = cg[static_cast<std::size_t>(m)];
    l.insert(l.end(), lhs.begin(), lhs.end());
    rr.insert(rr.end(), rhs.begin(), rhs.end());
  }
  VerificationReport r = start_report(Mode::Exact);
  finish_exact(r, l, rr, ctx);
  return r;
}

}  // namespace

std::vector<TheoremCase> identity_cases() {
  std::vector<TheoremCase> c;
  auto add = [&](std::string id, std::vector<ParamMap> sets, long factor,
                 std::function<VerificationReport(const ParamMap&, const PrecisionContext&)> run) {
    c.push_back(TheoremCase{std::move(id), true, std::move(sets), factor, std::move(run)});
  };
  std::vector<ParamMap> herm;
  for (const char* x : {"0", "1", "1/2"}) herm.push_back(params({{"x", x}, {"max", "8"}}));
  add("hermite_convolution", herm, 1, hermite_convolution);
  add("bessel_reduction", {params({{"mu", "1"}, {"nu", "2"}, {"z", "7/10"}, {"N", "25"}})}, 100, bessel_reduction);
  add("plane_wave_ultra", {params({{"nu", "3/2"}, {"x", "1/2"}, {"y", "2/5"}, {"N", "25"}})}, 100, plane_wave_ultra);
  add("plane_wave_cheby", {params({{"x", "1/2"}, {"y", "2/5"}, {"N", "25"}})}, 100, plane_wave_cheby);
  add("plane_wave_jacobi", {params({{"alpha", "1/2"}, {"beta", "1/3"}, {"x", "1/2"}, {"y", "2/5"}, {"N", "25"}})}, 100,
      plane_wave_jacobi);
  add("bessel_1f1_link", {params({{"nu", "3/2"}, {"x", "2/5"}})}, 100, bessel_1f1_link);
  std::vector<ParamMap> hg;
  for (const char* nu : {"3/2", "2"})
    for (const char* x : {"2", "1/2"}) hg.push_back(params({{"nu", nu}, {"x", x}, {"n", "5"}}));
  add("hankel_gegenbauer", hg, 1, hankel_gegenbauer);
  add("hankel_affine", {params({{"alpha", "1/2"}, {"x", "1/2"}, {"n", "5"}})}, 1, hankel_affine);
  add("connection_rogers",
      {params({{"beta", "1/3"}, {"gamma", "1/5"}, {"q", "1/2"}, {"n", "8"}}),
       params({{"beta", "2/7"}, {"gamma", "-1/3"}, {"q", "1/2"}, {"n", "8"}})},
      1, connection_rogers);
  return c;
}

}  // namespace jfrac::detail
