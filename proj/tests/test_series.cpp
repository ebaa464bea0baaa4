#include "doctest.h"
#include "jfrac/series.hpp"

#include <random>

using namespace jfrac;

namespace {

bool close(const BigFloat& a, const BigFloat& b, const char* tol) {
  BigFloat scale = max(abs(b), BigFloat(1L, b.prec()));
  return abs(a - b) <= BigFloat::parse(tol, a.prec()) * scale;
}

std::vector<BigFloat> nums(const std::vector<Rational>& v, const PrecisionContext& ctx) {
  std::vector<BigFloat> out;
  for (const auto& x : v) out.push_back(ctx.num(x));
  return out;
}

}  // namespace

TEST_CASE("pFq values") {
  PrecisionContext ctx;
  BigFloat z = ctx.num(ratio(1, 5));
  auto v = eval_pFq({ctx.num(1)}, {ctx.num(2)}, z, ctx);
  CHECK(close(v.value, (exp(z) - 1L) / z, "1e-30"));
  CHECK(abs(v.value - ctx.num("1.1070137908")) < ctx.num("1e-10"));
  CHECK(v.tail_bound >= ctx.num(0));
  CHECK(v.terms_used <= ctx.max_terms);
  CHECK(eval_pFq({ctx.num(3), ctx.num(ratio(1, 2))}, {ctx.num(ratio(7, 3))}, ctx.num(0), ctx).value == ctx.num(1));
  CHECK(eval_pFq({}, {ctx.num(1)}, ctx.num(0), ctx).value == ctx.num(1));
  // 0F0(;;z) = e^z
  CHECK(close(eval_pFq({}, {}, ctx.num(ratio(-7, 3)), ctx).value, exp(ctx.num(ratio(-7, 3))), "1e-30"));
  // 1F0(a;;z) = (1-z)^{-a}
  CHECK(close(eval_pFq({ctx.num(ratio(1, 3))}, {}, z, ctx).value, pow(1L - z, ctx.num(ratio(-1, 3))), "1e-29"));
}

TEST_CASE("terminating pFq is exact") {
  PrecisionContext ctx;
  // 2F1(-3, b; c; z) as a cubic, summed in rationals
  const Rational b = ratio(2, 3), c = ratio(5, 4), z = ratio(3, 7);
  Rational sum = 0, term = 1;
  for (int n = 0; n <= 3; ++n) {
    sum += term;
    term *= (n - 3) * (b + n) / ((c + n) * (n + 1)) * z;
  }
  auto v = eval_pFq(nums({-3, b}, ctx), nums({c}, ctx), ctx.num(z), ctx);
  CHECK(close(v.value, ctx.num(sum), "1e-70"));
  CHECK(v.tail_bound.is_zero());
  // the denominator pole lies past the termination point
  CHECK_NOTHROW(eval_pFq(nums({-2}, ctx), nums({-5}, ctx), ctx.num(1), ctx));
}

TEST_CASE("pFq errors") {
  PrecisionContext ctx;
  CHECK_THROWS_AS(eval_pFq({ctx.num(1)}, {ctx.num(-2)}, ctx.num(ratio(1, 2)), ctx), PoleInDenominator);
  PrecisionContext tiny(256, "1e-30", 16);
  CHECK_THROWS_AS(eval_pFq({ctx.num(1), ctx.num(1)}, {}, ctx.num(ratio(1, 2)), tiny), NonConvergent);
}

TEST_CASE("rphis values") {
  PrecisionContext ctx;
  const Rational q = ratio(1, 2), a = ratio(1, 3), zr = ratio(1, 4);
  CHECK(eval_rphis(std::vector<Rational>{a, ratio(1, 5)}, {ratio(1, 7)}, q, ctx.num(0), ctx).value == ctx.num(1));
  // q-binomial theorem
  BigFloat lhs = eval_rphis(std::vector<Rational>{a}, {}, q, ctx.num(zr), ctx).value;
  BigFloat rhs = q_pochhammer_inf(a * zr, q, ctx) / q_pochhammer_inf(zr, q, ctx);
  CHECK(close(lhs, rhs, "1e-30"));
  // 2phi1(q^{-1}, b; c; q, q) stops after two terms
  const Rational b = ratio(2, 5), c = ratio(3, 11);
  Rational two = 1 + (1 - 1 / q) * (1 - b) * q / ((1 - q) * (1 - c));
  auto v = eval_rphis(std::vector<Rational>{1 / q, b}, {c}, q, ctx.num(q), ctx);
  CHECK(close(v.value, ctx.num(two), "1e-70"));
  CHECK(v.terms_used == 2);
  // the same through the BigFloat overload
  auto w = eval_rphis(nums({1 / q, b}, ctx), nums({c}, ctx), ctx.num(q), ctx.num(q), ctx);
  CHECK(close(w.value, ctx.num(two), "1e-60"));
}

TEST_CASE("rphis normalization factor on 1phi1") {
  PrecisionContext ctx;
  const Rational q = ratio(1, 3), a = ratio(1, 5), c = ratio(2, 7), z = ratio(-1, 4);
  // explicit sum with (-1)^n q^{C(n,2)}
  Rational sum = 0;
  for (int n = 0; n < 40; ++n)
    sum += q_pochhammer<Rational>(a, q, n) / (q_pochhammer<Rational>(q, q, n) * q_pochhammer<Rational>(c, q, n)) *
           (n % 2 ? -1 : 1) * rpow(q, n * (n - 1) / 2) * rpow(z, n);
  CHECK(close(eval_rphis(std::vector<Rational>{a}, {c}, q, ctx.num(z), ctx).value, ctx.num(sum), "1e-30"));
}

TEST_CASE("terminating rphis matches the rational finite sum") {
  PrecisionContext ctx;
  const Rational q = ratio(1, 2);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(1, 9);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 5;
    const Rational b = ratio(d(rng), 10), c = ratio(d(rng), 11), z = ratio(d(rng), 13);
    const Rational qn = rpow(q, -n);
    Rational sum = 0;
    for (int k = 0; k <= n; ++k)
      sum += q_pochhammer<Rational>(qn, q, k) * q_pochhammer<Rational>(b, q, k) /
             (q_pochhammer<Rational>(q, q, k) * q_pochhammer<Rational>(c, q, k)) * rpow(z, k);
    CHECK(close(eval_rphis(std::vector<Rational>{qn, b}, {c}, q, ctx.num(z), ctx).value, ctx.num(sum), "1e-60"));
  }
}

TEST_CASE("Heine transformation") {
  // 2phi1(a,b;c;q,z) = (b, az;q)_inf/(c, z;q)_inf 2phi1(c/b, z; az; q, b)
  PrecisionContext ctx;
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  const Rational q = ratio(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = ratio(d(rng), 20), b = ratio(d(rng), 20), c = ratio(d(rng), 20), z = ratio(d(rng), 20);
    if (b == 0 || c == 0 || a * z == 0) {
      --trial;
      continue;
    }
    BigFloat lhs = eval_rphis(std::vector<Rational>{a, b}, {c}, q, ctx.num(z), ctx).value;
    BigFloat pre = q_pochhammer_inf(b, q, ctx) * q_pochhammer_inf(a * z, q, ctx) /
                   (q_pochhammer_inf(c, q, ctx) * q_pochhammer_inf(z, q, ctx));
    BigFloat rhs = pre * eval_rphis(std::vector<Rational>{c / b, z}, {a * z}, q, ctx.num(b), ctx).value;
    CHECK(close(lhs, rhs, "1e-29"));
  }
}

TEST_CASE("2phi1 to 2phi2 transformation") {
  // 2phi1(a,b;c;q,z) = (az;q)_inf/(z;q)_inf 2phi2(a, c/b; c, az; q, bz)
  PrecisionContext ctx;
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> d(-9, 9);
  const Rational q = ratio(1, 2);
  for (int trial = 0; trial < 10; ++trial) {
    Rational a = ratio(d(rng), 20), b = ratio(d(rng), 20), c = ratio(d(rng), 20), z = ratio(d(rng), 20);
    if (b == 0 || c == 0 || a * z == 0) {
      --trial;
      continue;
    }
    BigFloat lhs = eval_rphis(std::vector<Rational>{a, b}, {c}, q, ctx.num(z), ctx).value;
    BigFloat rhs = q_pochhammer_inf(a * z, q, ctx) / q_pochhammer_inf(z, q, ctx) *
                   eval_rphis(std::vector<Rational>{a, c / b}, {c, a * z}, q, ctx.num(b * z), ctx).value;
    CHECK(close(lhs, rhs, "1e-29"));
  }
}

TEST_CASE("rphis errors") {
  PrecisionContext ctx;
  const Rational q = ratio(1, 2);
  CHECK_THROWS_AS(eval_rphis(std::vector<Rational>{ratio(1, 3)}, {Rational(4)}, q, ctx.num(ratio(1, 5)), ctx),
                  PoleInDenominator);
  CHECK_THROWS_AS(eval_rphis(std::vector<Rational>{ratio(1, 3)}, {}, Rational(2), ctx.num(ratio(1, 5)), ctx),
                  DomainError);
}

TEST_CASE("Bessel functions") {
  PrecisionContext ctx;
  CHECK(bessel_j(ctx.num(0), ctx.num(0), ctx).value == ctx.num(1));
  CHECK(bessel_i(ctx.num(ratio(3, 2)), ctx.num(0), ctx).value.is_zero());
  CHECK(bessel_j(ctx.num(0), ctx.num(0), ctx).value == eval_pFq({}, {ctx.num(1)}, ctx.num(0), ctx).value);
  // J_0(1) by brute-force partial sums sum (-1/4)^m/(m!)^2
  BigFloat brute = ctx.num(0), term = ctx.num(1);
  for (int m = 0; m < 50; ++m) {
    brute += term;
    term *= ctx.num(ratio(-1, 4 * (m + 1) * (m + 1)));
  }
  BigFloat j0 = bessel_j(ctx.num(0), ctx.num(1), ctx).value;
  CHECK(close(j0, brute, "1e-30"));
  CHECK(abs(j0 - ctx.num("0.7651976865579666")) < ctx.num("1e-16"));
  // J_{1/2}(x) = sqrt(2/(pi x)) sin x exercises the Gamma path
  BigFloat x = ctx.num(ratio(7, 10));
  BigFloat jh = bessel_j(ctx.num(ratio(1, 2)), x, ctx).value;
  CHECK(close(jh, sqrt(2L / (pi(256) * x)) * sin(x), "1e-30"));
  CHECK_THROWS_AS(bessel_j(ctx.num(-2), x, ctx), GammaPole);
  CHECK_THROWS_AS(bessel_i(ctx.num(-1), x, ctx), GammaPole);
}

TEST_CASE("I_n against the J series") {
  // I_n(x) = sum (x/2)^{n+2m}/(m!(n+m)!) is the J_n series with every term made positive
  PrecisionContext ctx;
  const BigFloat x = ctx.num(ratio(9, 10));
  for (int n = 0; n <= 4; ++n) {
    BigFloat absum = ctx.num(0), term = pow(x / 2L, n) / ctx.num(factorial(n));
    for (int m = 0; m < 60; ++m) {
      absum += term;
      term *= (x * x / 4L) / ctx.num((m + 1) * (n + m + 1));
    }
    CHECK(close(bessel_i(ctx.num(n), x, ctx).value, absum, "1e-30"));
  }
  BesselICache cache(x, ctx);
  CHECK(cache(3) == bessel_i(ctx.num(3), x, ctx).value);
}

TEST_CASE("power series arithmetic") {
  PowerSeries<Rational> a(std::vector<Rational>{1, 1, 0}), b(std::vector<Rational>{1, -1, 0});
  auto p = series_arith(a, b, SeriesOp::Mul);
  CHECK(p.coefficients() == std::vector<Rational>{1, 0, -1});
  std::vector<Rational> e;
  for (int n = 0; n <= 3; ++n) e.push_back(1 / factorial(n));
  PowerSeries<Rational> ex(e);
  auto e2 = series_arith(ex, ex, SeriesOp::Mul);
  for (int n = 0; n <= 3; ++n) CHECK(e2[n] == rpow(Rational(2), n) / factorial(n));
  auto z = series_scale(ex, Rational(0));
  for (int n = 0; n <= 3; ++n) CHECK(z[n] == 0);
  CHECK(series_arith(a, b, SeriesOp::Add).coefficients() == std::vector<Rational>{2, 0, 0});
  CHECK_THROWS_AS(series_arith(a, ex, SeriesOp::Add), DegreeMismatch);
  CHECK_THROWS_AS(PowerSeries<Rational>(std::vector<Rational>{}), DegreeMismatch);
  // the BigFloat ring
  PrecisionContext ctx;
  PowerSeries<BigFloat> f(std::vector<BigFloat>{ctx.num(1), ctx.num(2)});
  CHECK(series_arith(f, f, SeriesOp::Mul)[1] == ctx.num(4));
}
