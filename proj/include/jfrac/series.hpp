#pragma once

#include <map>
#include <vector>

#include "jfrac/scalar.hpp"

namespace jfrac {

template <class T>
struct SeriesResult {
  T value;
  int terms_used = 0;
  BigFloat tail_bound;
};
using SeriesValue = SeriesResult<BigFloat>;
using ComplexSeriesValue = SeriesResult<Complex>;

// sum_n prod (a_i)_n / prod (b_j)_n z^n / n!. Stops after ctx.consecutive_small
// successive terms below rel_tolerance * |partial sum|, or when a numerator
// parameter is a non-positive integer and the series has terminated.
SeriesValue eval_pFq(const std::vector<BigFloat>& numer, const std::vector<BigFloat>& denom, const BigFloat& z,
                     const PrecisionContext& ctx);
ComplexSeriesValue eval_pFq(const std::vector<Complex>& numer, const std::vector<Complex>& denom,
                            const Complex& z, const PrecisionContext& ctx);

// r phi s with the [(-1)^n q^{n(n-1)/2}]^{1+s-r} factor always applied.
// A factor (1 - a q^n) that vanishes to within a few ulps is treated as an
// exact zero, so parameters like q^{-m} terminate the series.
SeriesValue eval_rphis(const std::vector<BigFloat>& numer, const std::vector<BigFloat>& denom, const BigFloat& q,
                       const BigFloat& z, const PrecisionContext& ctx);
// Rational parameters: termination and poles are decided exactly.
SeriesValue eval_rphis(const std::vector<Rational>& numer, const std::vector<Rational>& denom, const Rational& q,
                       const BigFloat& z, const PrecisionContext& ctx);

SeriesValue bessel_j(const BigFloat& nu, const BigFloat& z, const PrecisionContext& ctx);
SeriesValue bessel_i(const BigFloat& nu, const BigFloat& z, const PrecisionContext& ctx);

// I_m(t) for integer m >= 0, memoized for the Bessel-I sums of the
// q-ultraspherical and Askey-Wilson Q functions.
class BesselICache {
 public:
  BesselICache(const BigFloat& t, const PrecisionContext& ctx) : t_(t), ctx_(ctx) {}
  const BigFloat& operator()(int m);

 private:
  BigFloat t_;
  const PrecisionContext& ctx_;
  std::map<int, BigFloat> cache_;
};

template <class T>
class PowerSeries {
 public:
  PowerSeries(int degree, const T& zero) : c_(static_cast<std::size_t>(degree + 1), zero) {}
  explicit PowerSeries(std::vector<T> coefs) : c_(std::move(coefs)) {
    if (c_.empty()) throw DegreeMismatch("power series needs at least one coefficient");
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  T& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<T>& coefficients() const { return c_; }

 private:
  std::vector<T> c_;
};

enum class SeriesOp { Add, Mul };

template <class T>
PowerSeries<T> series_arith(const PowerSeries<T>& a, const PowerSeries<T>& b, SeriesOp op) {
  if (a.degree() != b.degree()) throw DegreeMismatch("power series degrees differ");
  const int n = a.degree();
  PowerSeries<T> r(n, a[0] - a[0]);
  if (op == SeriesOp::Add) {
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
  }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

template <class T, class S>
PowerSeries<T> series_scale(const PowerSeries<T>& a, const S& s) {
  PowerSeries<T> r = a;
  for (int i = 0; i <= a.degree(); ++i) r[i] = a[i] * s;
  return r;
}

}  // namespace jfrac
