#pragma once

#include <vector>

#include "jfrac/families.hpp"
#include "jfrac/series.hpp"
#include "jfrac/translation_kind.hpp"

namespace jfrac {

// Truncated polynomial in t and s with t-powers written left of s-powers,
// multiplied under st = q ts. q = 1 gives the commutative product.
class NormalOrderedPoly {
 public:
  explicit NormalOrderedPoly(int max_degree, Rational q = 1);

  static NormalOrderedPoly t(int max_degree, const Rational& q = 1);
  static NormalOrderedPoly s(int max_degree, const Rational& q = 1);
  static NormalOrderedPoly constant(const Rational& c, int max_degree, const Rational& q = 1);

  int max_degree() const { return deg_; }
  const Rational& q() const { return q_; }
  // Coefficient of t^j s^k; zero beyond the truncation.
  Rational coef(int j, int k) const;
  Rational& at(int j, int k);

  NormalOrderedPoly& operator+=(const NormalOrderedPoly& o);
  NormalOrderedPoly operator+(const NormalOrderedPoly& o) const;
  NormalOrderedPoly operator*(const NormalOrderedPoly& o) const;
  NormalOrderedPoly operator*(const Rational& c) const;
  bool operator==(const NormalOrderedPoly& o) const;
  bool operator!=(const NormalOrderedPoly& o) const { return !(*this == o); }

 private:
  void check_compatible(const NormalOrderedPoly& o) const;

  int deg_;
  Rational q_;
  std::vector<std::vector<Rational>> c_;  // c_[j][k], j + k <= deg_
};

// (t + s)(t + sq)...(t + sq^{n-1}) = sum_k [n k]_q q^{C(k,2)} t^{n-k} s^k, for any q != 0.
NormalOrderedPoly q_translate_monomial(int n, const Rational& q, int max_degree);

// Image of sum_n p_n x^n under the translation, through total degree N.
// Affine kinds act through their inner kind.
NormalOrderedPoly translate_series(const PowerSeries<Rational>& p, const TranslationKind& kind, int N);

// Numeric value of the translated Q_0 of f at (s, t):
//   Classical and Affine: Q_0(s + t);
//   QTranslation: sum_n H_{0,n}/(q;q)_n prod_{i<n} (t + s q^i), from exact moments.
// NonCommutative and Generalized have no numeric meaning and throw DomainError.
SeriesValue translate_eval(const FamilySpec& f, const TranslationKind& kind, const BigFloat& s, const BigFloat& t,
                           const PrecisionContext& ctx);

}  // namespace jfrac
