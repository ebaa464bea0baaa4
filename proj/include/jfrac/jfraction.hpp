#pragma once

#include <vector>

#include "jfrac/scalar.hpp"

namespace jfrac {

// Coefficients of P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1}.
// lambda is 1-based: lambda(1) is the first entry.
class JFraction {
 public:
  JFraction() = default;
  // Throws NonRegular(n) if some lambda_n is zero.
  JFraction(std::vector<Rational> b, std::vector<Rational> lambda);

  const Rational& b(int n) const { return b_.at(static_cast<std::size_t>(n)); }
  const Rational& lambda(int n) const { return lambda_.at(static_cast<std::size_t>(n - 1)); }
  int b_count() const { return static_cast<int>(b_.size()); }
  int lambda_count() const { return static_cast<int>(lambda_.size()); }
  const std::vector<Rational>& b_values() const { return b_; }
  const std::vector<Rational>& lambda_values() const { return lambda_; }

  // lambda_1 ... lambda_n; 1 for n = 0.
  Rational lambda_product(int n) const;

  bool operator==(const JFraction& o) const { return b_ == o.b_ && lambda_ == o.lambda_; }

 private:
  std::vector<Rational> b_;
  std::vector<Rational> lambda_;
};

// Triangle H[i][n], 0 <= i <= n <= degree, stored by column.
class StieltjesTableau {
 public:
  explicit StieltjesTableau(int degree);

  int degree() const { return static_cast<int>(cols_.size()) - 1; }
  // Zero above the diagonal (i > n).
  Rational at(int i, int n) const;
  Rational& cell(int i, int n) { return cols_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(i)); }
  std::vector<Rational> row(int i) const;  // H[i][i..degree]
  std::vector<Rational> moments() const;   // row 0

 private:
  std::vector<std::vector<Rational>> cols_;
};

// Requires b_0..b_{N-1} and lambda_1..lambda_{N-1}.
StieltjesTableau tableau_from_jfraction(const JFraction& jf, int N);
// Row 0 only, keeping two columns resident.
std::vector<Rational> moments_from_jfraction(const JFraction& jf, int N);

// b_n for n <= N with 2n+1 < mu.size(), lambda_n for 1 <= n <= N with 2n < mu.size().
// Throws NonRegular(n) when a needed Hankel determinant D_n vanishes.
JFraction jfraction_from_moments(const std::vector<Rational>& mu, int N);
// Uses every coefficient the moments determine.
JFraction jfraction_from_moments(const std::vector<Rational>& mu);
// Same coefficients by peeling the tableau row by row from row 0, in O(len^2)
// operations instead of one Hankel determinant per coefficient.
JFraction jfraction_by_inversion(const std::vector<Rational>& mu, int N);

enum class HankelKind { Delta, D, Chi };
// Delta(i, n): rows mu_{r..r+i} for r < i, then mu_{n..n+i}. D(n) = Delta(n, n),
// chi(n) = Delta(n, n+1). D(-1) = 1 by convention.
Rational hankel(const std::vector<Rational>& mu, HankelKind kind, int n, int i = 0);
// Bareiss elimination over the rationals.
Rational determinant(std::vector<std::vector<Rational>> m);

class MonicPolyTable {
 public:
  explicit MonicPolyTable(int degree);
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Coefficient of x^k in P_n.
  const Rational& coef(int n, int k) const { return c_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)); }
  Rational& coef(int n, int k) { return c_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)); }
  const std::vector<Rational>& poly(int n) const { return c_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<std::vector<Rational>> c_;
};

MonicPolyTable monic_polys(const JFraction& jf, int N);

// x^n = sum_j H_{j,n} P_j(x), exactly.
bool verify_connection(const StieltjesTableau& tab, const MonicPolyTable& polys, int n);
// H_{0,k+l} = sum_j lambda_1..lambda_j H_{j,k} H_{j,l}, exactly.
bool verify_convolution(const StieltjesTableau& tab, const JFraction& jf, int k, int l);

}  // namespace jfrac
