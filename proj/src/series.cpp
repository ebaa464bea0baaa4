#include "jfrac/series.hpp"

#include <optional>

namespace jfrac {

namespace {

bool is_zero(const BigFloat& x) { return x.is_zero(); }
bool is_zero(const Complex& z) { return z.re.is_zero() && z.im.is_zero(); }
BigFloat mag(const BigFloat& x) { return abs(x); }
BigFloat mag(const Complex& z) { return abs(z); }

bool nonpositive_integer(const BigFloat& x) { return x.is_integer() && x.sign() <= 0; }

// Geometric extrapolation from the last two terms; falls back to |last|.
BigFloat tail_estimate(const BigFloat& last, const BigFloat& prev) {
  if (prev.is_zero()) return last;
  BigFloat r = last / prev;
  if (r < 1L) return last * r / (1L - r);
  return last;
}

template <class T>
SeriesResult<T> pfq_impl(const std::vector<T>& numer, const std::vector<T>& denom, const T& z,
                         const PrecisionContext& ctx) {
  const T one = one_like(z);
  T sum = one;
  T term = one;
  BigFloat prev_mag = ctx.num(1);
  int small = 0;
  for (long n = 0; n < ctx.max_terms; ++n) {
    // term_{n+1} = term_n * prod(a_i + n) / prod(b_j + n) * z / (n + 1)
    T ratio = z;
    for (const auto& a : numer) ratio *= (a + n);
    for (const auto& b : denom) {
      T d = b + n;
      if (is_zero(d)) {
        if (is_zero(ratio) || is_zero(term)) break;
        throw PoleInDenominator("pFq denominator parameter hits -" + std::to_string(n));
      }
      ratio /= d;
    }
    ratio /= (n + 1);
    T next = term * ratio;
    if (is_zero(next)) {
      // terminating series (numerator hit zero) or z = 0
      return {sum, static_cast<int>(n + 1), ctx.num(0)};
    }
    sum += next;
    BigFloat m = mag(next);
    if (m < ctx.rel_tolerance * mag(sum)) {
      if (++small >= ctx.consecutive_small) return {sum, static_cast<int>(n + 2), tail_estimate(m, prev_mag)};
    } else {
      small = 0;
    }
    prev_mag = m;
    term = next;
  }
  throw NonConvergent("pFq: max_terms reached");
}

SeriesValue rphis_impl(const std::vector<BigFloat>& numer, const std::vector<BigFloat>& denom, const BigFloat& q,
                       const BigFloat& z, const PrecisionContext& ctx, std::optional<long> last_index) {
  if (!(abs(q) < 1L)) throw DomainError("rphis needs |q| < 1");
  const long e = 1 + static_cast<long>(denom.size()) - static_cast<long>(numer.size());
  BigFloat ulp(1L, ctx.precision_bits);
  mpfr_div_2si(ulp.raw(), ulp.raw(), ctx.precision_bits - 8, MPFR_RNDN);
  auto vanishes = [&](const BigFloat& f) { return abs(f) <= ulp; };

  BigFloat sum = ctx.num(1), term = ctx.num(1), qn = ctx.num(1);
  BigFloat prev_mag = ctx.num(1);
  int small = 0;
  for (long n = 0; n < ctx.max_terms; ++n) {
    if (last_index && n >= *last_index) return {sum, static_cast<int>(n + 1), ctx.num(0)};
    BigFloat ratio = z;
    bool zero_num = false;
    for (const auto& a : numer) {
      BigFloat f = 1L - a * qn;
      if (!last_index && vanishes(f)) zero_num = true;
      ratio *= f;
    }
    if (zero_num) return {sum, static_cast<int>(n + 1), ctx.num(0)};
    for (const auto& b : denom) {
      BigFloat f = 1L - b * qn;
      if (vanishes(f)) throw PoleInDenominator("rphis denominator (b;q)_n vanishes at n = " + std::to_string(n + 1));
      ratio /= f;
    }
    ratio /= (1L - qn * q);
    if (e != 0) ratio *= pow(-qn, e);
    BigFloat next = term * ratio;
    if (next.is_zero()) return {sum, static_cast<int>(n + 1), ctx.num(0)};
    sum += next;
    BigFloat m = abs(next);
    if (m < ctx.rel_tolerance * abs(sum)) {
      if (++small >= ctx.consecutive_small) return {sum, static_cast<int>(n + 2), tail_estimate(m, prev_mag)};
    } else {
      small = 0;
    }
    prev_mag = m;
    term = next;
    qn *= q;
  }
  throw NonConvergent("rphis: max_terms reached");
}

}  // namespace

SeriesValue eval_pFq(const std::vector<BigFloat>& numer, const std::vector<BigFloat>& denom, const BigFloat& z,
                     const PrecisionContext& ctx) {
  return pfq_impl(numer, denom, z, ctx);
}

ComplexSeriesValue eval_pFq(const std::vector<Complex>& numer, const std::vector<Complex>& denom,
                            const Complex& z, const PrecisionContext& ctx) {
  return pfq_impl(numer, denom, z, ctx);
}

SeriesValue eval_rphis(const std::vector<BigFloat>& numer, const std::vector<BigFloat>& denom, const BigFloat& q,
                       const BigFloat& z, const PrecisionContext& ctx) {
  return rphis_impl(numer, denom, q, z, ctx, std::nullopt);
}

SeriesValue eval_rphis(const std::vector<Rational>& numer, const std::vector<Rational>& denom, const Rational& q,
                       const BigFloat& z, const PrecisionContext& ctx) {
  if (!(abs(q) < 1)) throw DomainError("rphis needs |q| < 1");
  // (a;q)_n first vanishes at n = m+1 when a q^m = 1; only a = q^{-m} can do that.
  auto first_zero = [&](const Rational& a) -> std::optional<long> {
    if (a == 0 || q == 0) return a == 1 ? std::optional<long>(0) : std::nullopt;
    Rational aq = a;
    for (long m = 0; m < ctx.max_terms; ++m) {
      if (aq == 1) return m;
      if (abs(aq) < 1) return std::nullopt;  // |a q^m| only shrinks from here
      aq *= q;
    }
    return std::nullopt;
  };
  std::optional<long> last;
  for (const auto& a : numer) {
    auto m = first_zero(a);
    if (m && (!last || *m < *last)) last = m;
  }
  for (const auto& b : denom) {
    auto m = first_zero(b);
    if (m && (!last || *m < *last))
      throw PoleInDenominator("rphis denominator parameter is q^-" + std::to_string(*m));
  }
  std::vector<BigFloat> nb, db;
  for (const auto& a : numer) nb.push_back(ctx.num(a));
  for (const auto& b : denom) db.push_back(ctx.num(b));
  if (last) return rphis_impl(nb, db, ctx.num(q), z, ctx, *last);
  return rphis_impl(nb, db, ctx.num(q), z, ctx, std::nullopt);
}

namespace {

SeriesValue bessel_common(const BigFloat& nu, const BigFloat& z, const PrecisionContext& ctx, bool modified) {
  if (nonpositive_integer(nu) && !nu.is_zero()) throw GammaPole("Bessel order is a negative integer");
  if (z.is_zero()) {
    if (nu.is_zero()) return {ctx.num(1), 1, ctx.num(0)};
    if (nu > 0L) return {ctx.num(0), 1, ctx.num(0)};
    throw DomainError("Bessel function of negative order is singular at 0");
  }
  BigFloat half = z / 2L;
  BigFloat pref(ctx.precision_bits);
  if (nu.is_integer()) {
    pref = pow(half, nu.to_long());
  } else {
    if (z < 0L) throw DomainError("non-integer Bessel order needs z > 0");
    pref = pow(half, nu);
  }
  pref /= gamma_fn(nu + 1L);
  BigFloat arg = half * half;
  if (!modified) arg = -arg;
  SeriesValue s = eval_pFq({}, {nu + 1L}, arg, ctx);
  return {pref * s.value, s.terms_used, abs(pref) * s.tail_bound};
}

}  // namespace

SeriesValue bessel_j(const BigFloat& nu, const BigFloat& z, const PrecisionContext& ctx) {
  return bessel_common(nu, z, ctx, false);
}

SeriesValue bessel_i(const BigFloat& nu, const BigFloat& z, const PrecisionContext& ctx) {
  return bessel_common(nu, z, ctx, true);
}

const BigFloat& BesselICache::operator()(int m) {
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(m, bessel_i(ctx_.num(m), t_, ctx_).value).first->second;
}

}  // namespace jfrac
