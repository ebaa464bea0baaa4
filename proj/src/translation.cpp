#include "jfrac/translation.hpp"

namespace jfrac {

NormalOrderedPoly::NormalOrderedPoly(int max_degree, Rational q) : deg_(max_degree), q_(std::move(q)) {
  if (max_degree < 0) throw InvalidParams("polynomial degree must be >= 0");
  c_.resize(static_cast<std::size_t>(deg_ + 1));
  for (int j = 0; j <= deg_; ++j) c_[static_cast<std::size_t>(j)].assign(static_cast<std::size_t>(deg_ - j + 1), Rational(0));
}

NormalOrderedPoly NormalOrderedPoly::t(int max_degree, const Rational& q) {
  NormalOrderedPoly p(max_degree, q);
  if (max_degree >= 1) p.at(1, 0) = 1;
  return p;
}

NormalOrderedPoly NormalOrderedPoly::s(int max_degree, const Rational& q) {
  NormalOrderedPoly p(max_degree, q);
  if (max_degree >= 1) p.at(0, 1) = 1;
  return p;
}

NormalOrderedPoly NormalOrderedPoly::constant(const Rational& c, int max_degree, const Rational& q) {
  NormalOrderedPoly p(max_degree, q);
  p.at(0, 0) = c;
  return p;
}

Rational NormalOrderedPoly::coef(int j, int k) const {
  if (j < 0 || k < 0 || j + k > deg_) return 0;
  return c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

Rational& NormalOrderedPoly::at(int j, int k) {
  if (j < 0 || k < 0 || j + k > deg_) throw InvalidParams("coefficient index beyond truncation");
  return c_[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
}

void NormalOrderedPoly::check_compatible(const NormalOrderedPoly& o) const {
  if (deg_ != o.deg_) throw DegreeMismatch("normal-ordered polynomials truncated at different degrees");
  if (q_ != o.q_) throw InvalidParams("normal-ordered polynomials over different q");
}

NormalOrderedPoly& NormalOrderedPoly::operator+=(const NormalOrderedPoly& o) {
  check_compatible(o);
  for (int j = 0; j <= deg_; ++j)
    for (int k = 0; j + k <= deg_; ++k) at(j, k) += o.coef(j, k);
  return *this;
}

NormalOrderedPoly NormalOrderedPoly::operator+(const NormalOrderedPoly& o) const {
  NormalOrderedPoly r = *this;
  r += o;
  return r;
}

NormalOrderedPoly NormalOrderedPoly::operator*(const NormalOrderedPoly& o) const {
  check_compatible(o);
  NormalOrderedPoly r(deg_, q_);
  // (t^a s^b)(t^c s^d) = q^{bc} t^{a+c} s^{b+d}
  for (int a = 0; a <= deg_; ++a)
    for (int b = 0; a + b <= deg_; ++b) {
      const Rational& x = c_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (x == 0) continue;
      for (int c = 0; a + b + c <= deg_; ++c)
        for (int d = 0; a + b + c + d <= deg_; ++d) {
          const Rational& y = o.c_[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)];
          if (y == 0) continue;
          r.at(a + c, b + d) += rpow(q_, static_cast<long>(b) * c) * x * y;
        }
    }
  return r;
}

NormalOrderedPoly NormalOrderedPoly::operator*(const Rational& c) const {
  NormalOrderedPoly r = *this;
  for (auto& row : r.c_)
    for (auto& x : row) x *= c;
  return r;
}

bool NormalOrderedPoly::operator==(const NormalOrderedPoly& o) const {
  return deg_ == o.deg_ && q_ == o.q_ && c_ == o.c_;
}

NormalOrderedPoly q_translate_monomial(int n, const Rational& q, int max_degree) {
  if (q == 0) throw InvalidParams("q-translation needs q != 0");
  NormalOrderedPoly r(max_degree);
  if (n > max_degree) return r;
  for (int k = 0; k <= n; ++k) r.at(n - k, k) = q_binomial<Rational>(n, k, q) * rpow(q, k * (k - 1) / 2);
  return r;
}

namespace {

const TranslationKind& strip_affine(const TranslationKind& kind) {
  if (auto* a = std::get_if<AffineShift>(&kind.v)) return strip_affine(*a->inner);
  return kind;
}

// Image of x^n, n <= N.
NormalOrderedPoly translate_monomial(int n, const TranslationKind& kind, int N) {
  const TranslationKind& k = strip_affine(kind);
  if (std::holds_alternative<Classical>(k.v)) {
    NormalOrderedPoly r(N);
    for (int i = 0; i <= n; ++i) r.at(n - i, i) = binomial(n, i);
    return r;
  }
  if (auto* qt = std::get_if<QTranslation>(&k.v)) return q_translate_monomial(n, qt->q, N);
  if (auto* nc = std::get_if<NonCommutative>(&k.v)) {
    NormalOrderedPoly r(N, nc->q);
    for (int i = 0; i <= n; ++i) r.at(i, n - i) = q_binomial<Rational>(n, i, nc->q);
    return r;
  }
  const auto& g = std::get<Generalized>(k.v);
  if (static_cast<int>(g.c.size()) <= n || static_cast<int>(g.d.size()) <= n)
    throw InvalidParams("generalized translation needs c_j, d_j for j <= " + std::to_string(n));
  NormalOrderedPoly r(N);
  for (int j = 0; j <= n; ++j)
    r.at(n - j, j) = g.c[static_cast<std::size_t>(j)] * g.d[static_cast<std::size_t>(n - j)];
  return r;
}

}  // namespace

NormalOrderedPoly translate_series(const PowerSeries<Rational>& p, const TranslationKind& kind, int N) {
  if (p.degree() < N) throw DegreeMismatch("series truncated below the requested degree");
  Rational q = 1;
  if (auto* nc = std::get_if<NonCommutative>(&strip_affine(kind).v)) q = nc->q;
  NormalOrderedPoly out(N, q);
  for (int n = 0; n <= N; ++n) {
    if (p[n] == 0) continue;
    out += translate_monomial(n, kind, N) * p[n];
  }
  return out;
}

SeriesValue translate_eval(const FamilySpec& f, const TranslationKind& kind, const BigFloat& s, const BigFloat& t,
                           const PrecisionContext& ctx) {
  const TranslationKind& k = strip_affine(kind);
  if (std::holds_alternative<Classical>(k.v)) return q_function(f, 0, s + t, ctx);
  if (std::holds_alternative<NonCommutative>(k.v))
    throw DomainError("non-commutative translation has no numeric value; compare coefficient tables");
  if (std::holds_alternative<Generalized>(k.v)) throw DomainError("generalized translation has no numeric evaluator");

  const Rational q = std::get<QTranslation>(k.v).q;
  BigFloat sum = ctx.num(0), prod = ctx.num(1), prev = ctx.num(0), qi = ctx.num(1);
  Rational qfac = 1;
  std::vector<Rational> mu;
  int small = 0;
  for (int n = 0; n < ctx.max_terms; ++n) {
    if (n >= static_cast<int>(mu.size())) mu = f.moments(std::max(40, 2 * n));
    if (n >= 1) {
      qfac *= 1 - rpow(q, n);
      prod *= t + s * qi;
      qi *= q;
    }
    BigFloat term = ctx.num(mu[static_cast<std::size_t>(n)] / qfac) * prod;
    sum += term;
    BigFloat m = abs(term);
    if (m < ctx.rel_tolerance * abs(sum)) {
      if (++small >= ctx.consecutive_small) return {sum, n + 1, prev.is_zero() ? m : m * m / prev};
    } else {
      small = 0;
    }
    prev = m;
  }
  throw NonConvergent("q-translated series did not settle within max_terms");
}

}  // namespace jfrac
