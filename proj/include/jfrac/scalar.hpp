#pragma once

#include <string>
#include <vector>

#include "jfrac/bigfloat.hpp"
#include "jfrac/errors.hpp"

namespace jfrac {

// Accepts "p/q", "p" and finite decimals such as "0.3" or "-1.25e-2"; the
// result is always canonical (gcd 1, positive denominator).
Rational parse_rational(const std::string& s);
std::vector<Rational> parse_rational_list(const std::string& csv);
std::string to_string(const Rational& r);

// p/q in canonical form; mpq_class(p, q) alone does not reduce.
Rational ratio(long p, long q);
Rational rpow(const Rational& x, long e);
Rational binomial(long n, long k);
Rational factorial(long n);

struct PrecisionContext {
  int precision_bits = 256;
  BigFloat rel_tolerance;
  int max_terms = 10000;
  int consecutive_small = 3;

  PrecisionContext();  // 256 bits, 1e-30, 10000, 3
  PrecisionContext(int bits, const std::string& rel_tol, int max_terms = 10000,
                   int consecutive_small = 3);

  BigFloat num(long v) const { return BigFloat(v, precision_bits); }
  BigFloat num(const Rational& v) const { return BigFloat(v, precision_bits); }
  BigFloat num(const std::string& decimal) const { return BigFloat::parse(decimal, precision_bits); }
};

// Identity element of the same ring (and precision) as x.
inline Rational one_like(const Rational&) { return Rational(1); }
inline BigFloat one_like(const BigFloat& x) { return BigFloat(1L, x.prec()); }
inline Complex one_like(const Complex& x) { return Complex(BigFloat(1L, x.prec())); }

// (a)_n = a(a+1)...(a+n-1).
template <class T>
T pochhammer(const T& a, long n) {
  T r = one_like(a);
  T f = a;
  for (long k = 0; k < n; ++k) {
    r *= f;
    f += 1L;
  }
  return r;
}

// (a;q)_n = prod_{k<n} (1 - a q^k).
template <class T>
T q_pochhammer(const T& a, const T& q, long n) {
  T r = one_like(a);
  T aq = a;
  for (long k = 0; k < n; ++k) {
    r *= (one_like(a) - aq);
    aq *= q;
  }
  return r;
}

// Gaussian binomial by [n,k] = [n-1,k-1] + q^k [n-1,k]; valid at q = 1 and
// at roots of unity, where the product quotient would divide by zero.
template <class T>
T q_binomial(long n, long k, const T& q) {
  if (k < 0 || k > n) return one_like(q) - one_like(q);
  std::vector<T> row(static_cast<std::size_t>(k + 1), one_like(q) - one_like(q));
  row[0] = one_like(q);
  for (long m = 1; m <= n; ++m) {
    T qk = one_like(q);
    std::vector<T> qpow;
    qpow.reserve(static_cast<std::size_t>(k + 1));
    for (long j = 0; j <= k; ++j) {
      qpow.push_back(qk);
      qk *= q;
    }
    for (long j = std::min(m, k); j >= 1; --j)
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                         qpow[static_cast<std::size_t>(j)] * row[static_cast<std::size_t>(j)];
  }
  return row[static_cast<std::size_t>(k)];
}

struct ProductValue {
  BigFloat value;
  int factors_used = 0;
  BigFloat tail_bound;  // bound on |log| error from the dropped factors
};

// (a;q)_inf. Stops once ctx.consecutive_small successive factors satisfy
// |a q^k| < 2^-precision_bits, i.e. they no longer change the product.
ProductValue q_pochhammer_inf_checked(const BigFloat& a, const BigFloat& q, const PrecisionContext& ctx);
BigFloat q_pochhammer_inf(const BigFloat& a, const BigFloat& q, const PrecisionContext& ctx);
BigFloat q_pochhammer_inf(const Rational& a, const Rational& q, const PrecisionContext& ctx);

}  // namespace jfrac
