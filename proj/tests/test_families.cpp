#include <algorithm>

#include "doctest.h"
#include "jfrac/families.hpp"
#include "jfrac/motzkin.hpp"
#include "test_util.hpp"

using namespace jfrac;
using jfrac::test::rel_err;

namespace {

const PrecisionContext ctx(256, "1e-60");

BigFloat norm_factor(const FamilySpec& f, int n) {
  if (f.normalization == Normalization::Factorial) return ctx.num(factorial(n));
  Rational r = 1;
  for (int k = 1; k <= n; ++k) r *= 1 - rpow(*f.q, k);
  return ctx.num(r);
}

// Column-by-column tableau in floating point, for families whose coefficients are irrational.
std::vector<std::vector<BigFloat>> numeric_tableau(const FamilySpec& f, int N) {
  std::vector<std::vector<BigFloat>> H(static_cast<std::size_t>(N + 1), std::vector<BigFloat>(static_cast<std::size_t>(N + 1), ctx.num(0)));
  std::vector<BigFloat> b, lam{ctx.num(0)};
  for (int n = 0; n <= N; ++n) b.push_back(f.b_num(n, ctx));
  for (int n = 1; n <= N; ++n) lam.push_back(f.lambda_num(n, ctx));
  H[0][0] = ctx.num(1);
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      BigFloat v = ctx.num(0);
      if (i >= 1) v += H[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(n - 1)];
      if (i <= n - 1) v += b[static_cast<std::size_t>(i)] * H[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)];
      if (i + 1 <= n - 1) v += lam[static_cast<std::size_t>(i + 1)] * H[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(n - 1)];
      H[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = v;
    }
  return H;
}

// sum_{n <= N} H_{j,n} t^n / n!  (or / (q;q)_n)
BigFloat tableau_series(const FamilySpec& f, int j, const BigFloat& t, int N) {
  BigFloat sum = ctx.num(0);
  if (f.exact()) {
    auto tab = tableau_from_jfraction(f.jfraction(N), N);
    for (int n = j; n <= N; ++n) sum += ctx.num(tab.at(j, n)) * pow(t, n) / norm_factor(f, n);
  } else {
    auto H = numeric_tableau(f, N);
    for (int n = j; n <= N; ++n) sum += H[static_cast<std::size_t>(j)][static_cast<std::size_t>(n)] * pow(t, n) / norm_factor(f, n);
  }
  return sum;
}

Rational qpoch(const Rational& a, const Rational& q, int n) {
  Rational r = 1;
  for (int k = 0; k < n; ++k) r *= 1 - a * rpow(q, k);
  return r;
}

BigFloat tol(const char* s) { return ctx.num(std::string(s)); }

}  // namespace

TEST_CASE("coefficient examples") {
  CHECK(make_family("ultraspherical", {{"nu", 1}}).lambda_exact(1) == ratio(1, 4));
  CHECK(make_family("jacobi", {{"alpha", 0}, {"beta", 0}}).lambda_exact(1) == ratio(1, 3));
  CHECK(make_family("al_salam_carlitz", {{"a", ratio(1, 3)}, {"q", ratio(1, 2)}}).lambda_exact(2) == ratio(-1, 8));
  CHECK(make_family("hermite").lambda_exact(3) == ratio(3, 2));
  auto ch = make_family("charlier", {{"a", ratio(2, 3)}});
  CHECK(ch.b_exact(2) == ratio(8, 3));
  CHECK(ch.lambda_exact(2) == ratio(4, 3));
}

TEST_CASE("Q_0 examples") {
  auto h = q_function(make_family("hermite"), 0, ctx.num(ratio(1, 2)), ctx);
  CHECK(rel_err(h.value, exp(ctx.num(ratio(1, 16)))) < tol("1e-60"));
  auto l = q_function(make_family("laguerre", {{"alpha", 0}}), 0, ctx.num(ratio(1, 2)), ctx);
  CHECK(rel_err(l.value, ctx.num(2)) < tol("1e-60"));
  // Q_j(t) ~ t^j / j! near 0
  auto f = make_family("jacobi", {{"alpha", ratio(1, 2)}, {"beta", ratio(1, 3)}});
  BigFloat t = ctx.num(std::string("1e-20"));
  for (int j = 0; j <= 3; ++j) {
    BigFloat lead = pow(t, j) / ctx.num(factorial(j));
    CHECK(rel_err(q_function(f, j, t, ctx).value, lead) < tol("1e-15"));
  }
}

TEST_CASE("catalog") {
  auto ids = family_ids();
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  for (const char* id : {"hermite", "laguerre", "charlier", "meixner", "meixner_pollaczek", "jacobi", "ultraspherical",
                         "little_q_jacobi", "big_q_jacobi", "al_salam_carlitz", "q_ultraspherical",
                         "q_ultraspherical_beta0", "askey_wilson_slice", "hermite_moments", "laguerre_moments",
                         "meixner_moments", "meixner_pollaczek_moments", "gegenbauer_moments", "derangement"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK(catalog().size() == ids.size());
  for (const auto& e : catalog()) {
    auto f = make_family(e.id);  // defaults are valid
    CHECK(f.id == e.id);
    CHECK(e.translation == f.translation.name());
  }
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(make_family("no_such_family"), InvalidParams);
  CHECK_THROWS_AS(make_family("hermite", {{"nu", 1}}), InvalidParams);
  CHECK_THROWS_AS(make_family("little_q_jacobi", {{"q", 2}}), InvalidParams);
  CHECK_THROWS_AS(make_family("laguerre", {{"alpha", -1}}), InvalidParams);
  CHECK_THROWS_AS(make_family("ultraspherical", {{"nu", 0}}), InvalidParams);
  CHECK_THROWS_AS(make_family("askey_wilson_slice", {{"printed", 2}}), InvalidParams);
  CHECK_THROWS_AS(make_family("laguerre_moments", {{"alpha", 0}, {"x", 1}}), InvalidParams);
  CHECK_THROWS_AS(make_affine(make_family("hermite"), 0, 1), InvalidParams);
  CHECK_THROWS_AS(q_function(make_family("hermite"), -1, ctx.num(0), ctx), InvalidParams);
}

TEST_CASE("unsupported operations") {
  CHECK_THROWS_AS(q_tilde_function(make_family("hermite"), 0, ctx.num(0), ctx), UnsupportedTilde);
  CHECK_THROWS_AS(tableau_closed_form(make_family("hermite"), 0, 2), Unsupported);
  CHECK_THROWS_AS(make_family("meixner_pollaczek").jfraction(3), Unsupported);
  CHECK_THROWS_AS(make_affine(make_family("little_q_jacobi"), 2, 1), InvalidParams);
}

TEST_CASE("tableau closed forms") {
  auto h = make_family("hermite_moments", {{"x", 1}});
  for (int i = 0; i <= 5; ++i) CHECK(tableau_closed_form(h, i, i) == 1);
  CHECK(tableau_closed_form(h, 0, 2) == 2);
  CHECK(tableau_closed_form(h, 3, 2) == 0);
  // mu_1 = (alpha + 1 - x)/(alpha + 1) vanishes at x = alpha + 1
  CHECK(tableau_closed_form(make_family("laguerre_moments", {{"alpha", 1}, {"x", 2}}), 0, 1) == 0);
}

TEST_CASE("property: closed-form tableaux match the recurrence") {
  std::vector<FamilySpec> fams{
      make_family("hermite_moments"), make_family("hermite_moments", {{"x", ratio(-2, 3)}}),
      make_family("laguerre_moments"), make_family("laguerre_moments", {{"alpha", ratio(5, 2)}, {"x", 3}}),
      make_family("meixner_moments"), make_family("gegenbauer_moments"),
      make_family("gegenbauer_moments", {{"nu", 2}, {"x", 2}}), make_family("derangement")};
  for (const auto& f : fams) {
    auto tab = tableau_from_jfraction(f.jfraction(8), 8);
    INFO(f.id);
    for (int n = 0; n <= 8; ++n)
      for (int i = 0; i <= n; ++i) CHECK(tableau_closed_form(f, i, n) == tab.at(i, n));
    CHECK(f.moments(8) == tab.moments());
  }
}

TEST_CASE("property: closed-form weights are lambda products") {
  for (const auto& id : family_ids()) {
    auto f = make_family(id);
    if (!f.weight_exact || !f.exact()) continue;
    auto jf = f.jfraction(10);
    INFO(id);
    for (int n = 0; n <= 10; ++n) CHECK(f.weight(n) == jf.lambda_product(n));
  }
  for (const char* id : {"laguerre_moments", "meixner_moments"}) {
    auto f = make_family(id, {{"printed", 1}});
    auto jf = f.jfraction(6);
    bool mismatch = false;
    for (int n = 1; n <= 6; ++n) mismatch |= f.weight(n) != jf.lambda_product(n);
    CHECK_MESSAGE(mismatch, id);
  }
}

TEST_CASE("property: Q_j equals its tableau row") {
  const BigFloat t = ctx.num(ratio(1, 10));
  std::vector<FamilySpec> fams;
  for (const auto& id : family_ids()) {
    auto f = make_family(id);
    if (!f.is_complex()) fams.push_back(f);
  }
  fams.push_back(make_family("charlier", {{"a", ratio(2, 3)}}));
  fams.push_back(make_family("jacobi", {{"alpha", ratio(1, 2)}, {"beta", ratio(-1, 3)}}));
  fams.push_back(make_affine(make_family("hermite"), 2, ratio(1, 3)));
  fams.push_back(make_affine(make_family("meixner"), -2, 1));
  for (const auto& f : fams) {
    for (int j = 0; j <= 4; ++j) {
      INFO(f.id << " j=" << j);
      BigFloat lhs = q_function(f, j, t, ctx).value;
      INFO("err " << rel_err(lhs, tableau_series(f, j, t, 70)).to_string(5));
      CHECK(rel_err(lhs, tableau_series(f, j, t, 70)) < tol("1e-50"));
      if (f.q_alt_fn) CHECK(rel_err(f.q_alt_fn(j, t, ctx).value, lhs) < tol("1e-50"));
    }
  }
}

TEST_CASE("property: exact Q_j coefficients equal the tableau") {
  for (const auto& id : family_ids()) {
    auto f = make_family(id);
    if (!f.q_series_exact || !f.exact()) continue;
    auto tab = tableau_from_jfraction(f.jfraction(10), 10);
    for (int j = 0; j <= 4; ++j) {
      auto c = f.q_series_exact(j, 10);
      for (int n = 0; n <= 10; ++n) {
        Rational expect = tab.at(j, n);
        if (f.normalization == Normalization::Factorial) expect /= factorial(n);
        else expect /= qpoch(*f.q, *f.q, n);
        CHECK_MESSAGE(c[static_cast<std::size_t>(n)] == expect, id << " j=" << j << " n=" << n);
      }
    }
  }
}

TEST_CASE("property: alternative closed forms agree") {
  std::vector<FamilySpec> fams{make_family("jacobi", {{"alpha", ratio(1, 2)}, {"beta", ratio(1, 3)}}),
                               make_family("little_q_jacobi"), make_family("big_q_jacobi"),
                               make_family("big_q_jacobi", {{"a", ratio(1, 2)}, {"b", ratio(-1, 3)}, {"c", ratio(2, 3)}, {"q", ratio(1, 3)}})};
  for (const auto& f : fams)
    for (const char* ts : {"0.05", "0.13", "0.21", "0.3", "-0.17"}) {
      BigFloat t = ctx.num(std::string(ts));
      for (int j = 0; j <= 3; ++j) {
        INFO(f.id << " t=" << ts << " j=" << j);
        if (f.q_alt_fn) CHECK(rel_err(f.q_alt_fn(j, t, ctx).value, q_function(f, j, t, ctx).value) < tol("1e-50"));
        if (f.q_tilde_alt_fn)
          CHECK(rel_err(f.q_tilde_alt_fn(j, t, ctx).value, q_tilde_function(f, j, t, ctx).value) < tol("1e-50"));
      }
    }
}

TEST_CASE("tilde functions follow the q-binomial weights") {
  // Q~_j(s) = sum_m H_{j,m} q^{C(m,2)} s^m / (q;q)_m
  for (const char* id : {"little_q_jacobi", "big_q_jacobi"}) {
    auto f = make_family(id);
    const Rational q = *f.q;
    auto tab = tableau_from_jfraction(f.jfraction(70), 70);
    BigFloat s = ctx.num(ratio(3, 10));
    for (int j = 0; j <= 3; ++j) {
      BigFloat sum = ctx.num(0);
      for (int m = j; m <= 70; ++m) sum += ctx.num(tab.at(j, m) * rpow(q, m * (m - 1) / 2) / qpoch(q, q, m)) * pow(s, m);
      CHECK_MESSAGE(rel_err(q_tilde_function(f, j, s, ctx).value, sum) < tol("1e-50"), id << " j=" << j);
    }
  }
}

TEST_CASE("little q-Jacobi lambda carries the squared factor") {
  const Rational a = ratio(1, 3), b = ratio(1, 4), q = ratio(1, 2);
  auto f = make_family("little_q_jacobi", {{"a", a}, {"b", b}, {"q", q}});
  std::vector<Rational> mu;
  for (int n = 0; n <= 20; ++n) mu.push_back(qpoch(a * q, q, n) / qpoch(a * b * q * q, q, n));
  auto jf = jfraction_from_moments(mu, 9);
  for (int n = 1; n <= 9; ++n) {
    CHECK(jf.lambda(n) == f.lambda_exact(n));
    CHECK(jf.lambda(n) != f.lambda_exact(n) * (1 - a * b * rpow(q, 2 * n)));
  }
  for (int n = 0; n <= 9; ++n) CHECK(jf.b(n) == f.b_exact(n));
}

TEST_CASE("big q-Jacobi lambda carries the squared factor") {
  const Rational a = ratio(1, 3), b = ratio(1, 4), c = ratio(1, 5), q = ratio(1, 2);
  auto f = make_family("big_q_jacobi", {{"a", a}, {"b", b}, {"c", c}, {"q", q}});
  // Q_0(t) = 2phi1(aq, abq/c; abq^2; q, qct) / (aqt; q)_inf, expanded in t
  std::vector<Rational> mu;
  for (int n = 0; n <= 20; ++n) {
    Rational coef = 0;
    for (int k = 0; k <= n; ++k)
      coef += rpow(a * q, n - k) / qpoch(q, q, n - k) * qpoch(a * q, q, k) * qpoch(a * b * q / c, q, k) /
              (qpoch(q, q, k) * qpoch(a * b * q * q, q, k)) * rpow(q * c, k);
    mu.push_back(coef * qpoch(q, q, n));
  }
  CHECK(mu == f.moments(20));
  auto jf = jfraction_from_moments(mu, 9);
  for (int n = 1; n <= 9; ++n) {
    CHECK(jf.lambda(n) == f.lambda_exact(n));
    CHECK(jf.lambda(n) != f.lambda_exact(n) * (1 - a * b * rpow(q, 2 * n)));
  }
}

TEST_CASE("affine transform") {
  const Rational a = ratio(3, 2), b = ratio(-2, 5);
  for (const char* id : {"hermite", "laguerre", "charlier", "meixner"}) {
    auto inner = make_family(id);
    auto f = make_affine(inner, a, b);
    auto mu = inner.moments(10);
    auto jf = f.jfraction(10);
    auto mubar = moments_from_jfraction(jf, 10);
    for (int n = 0; n <= 10; ++n) {
      Rational s = 0;
      for (int k = 0; k <= n; ++k) s += binomial(n, k) * rpow(-b, n - k) * mu[static_cast<std::size_t>(k)];
      CHECK(mubar[static_cast<std::size_t>(n)] == s / rpow(a, n));
      CHECK(jf.b(n) == (inner.b_exact(n) - b) / a);
      if (n >= 1) CHECK(jf.lambda(n) == inner.lambda_exact(n) / (a * a));
    }
    CHECK(f.moments(10) == mubar);
  }
}

TEST_CASE("printed variants disagree with the tableau") {
  const BigFloat t = ctx.num(ratio(1, 10));
  auto off = [&](const FamilySpec& f, int j) { return rel_err(q_function(f, j, t, ctx).value, tableau_series(f, j, t, 70)); };
  auto der = make_family("derangement", {{"printed", 1}});
  CHECK(off(der, 0) < tol("1e-50"));  // a^0 = 1
  CHECK(off(der, 1) > tol("1e-3"));
  auto b0 = make_family("q_ultraspherical_beta0", {{"printed", 1}});
  CHECK(std::max(off(b0, 0), std::max(off(b0, 1), off(b0, 2))) > tol("1e-6"));
  auto aw = make_family("askey_wilson_slice", {{"printed", 1}});
  auto aw_ok = make_family("askey_wilson_slice");
  bool differs = false;
  for (int j = 0; j <= 3; ++j) {
    CHECK(off(aw_ok, j) < tol("1e-50"));
    differs |= off(aw, j) > tol("1e-6") ||
               rel_err(aw.weight_numeric(j + 1, ctx), aw_ok.weight_numeric(j + 1, ctx)) > tol("1e-6");
  }
  CHECK(differs);
}

TEST_CASE("q-ultraspherical approaches ultraspherical as q -> 1") {
  auto classical = make_family("ultraspherical", {{"nu", 2}});
  const BigFloat t = ctx.num(ratio(1, 2));
  for (int j = 0; j <= 1; ++j) {
    BigFloat target = q_function(classical, j, t, ctx).value;
    BigFloat prev = ctx.num(1);
    for (int k = 3; k <= 6; ++k) {
      Rational q = 1 - rpow(Rational(2), -k);
      auto f = make_family("q_ultraspherical", {{"beta", q * q}, {"q", q}});
      BigFloat err = rel_err(q_function(f, j, t, ctx).value, target);
      CHECK_MESSAGE(err < prev, "j=" << j << " k=" << k);
      prev = err;
    }
  }
}

TEST_CASE("path sums reproduce the family moments") {
  for (const char* id : {"hermite", "charlier", "little_q_jacobi", "al_salam_carlitz", "jacobi"}) {
    auto f = make_family(id);
    auto w = PathWeights::from_jfraction(f.jfraction(10));
    auto mu = f.moments(8);
    for (int n = 0; n <= 8; ++n) CHECK(path_weight_sum(w, 0, 0, n) == mu[static_cast<std::size_t>(n)]);
  }
}
