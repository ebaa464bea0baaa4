#include "jfrac/jfraction.hpp"

#include <algorithm>

namespace jfrac {

JFraction::JFraction(std::vector<Rational> b, std::vector<Rational> lambda)
    : b_(std::move(b)), lambda_(std::move(lambda)) {
  for (std::size_t k = 0; k < lambda_.size(); ++k)
    if (lambda_[k] == 0) throw NonRegular(static_cast<int>(k + 1));
}

Rational JFraction::lambda_product(int n) const {
  Rational r = 1;
  for (int k = 1; k <= n; ++k) r *= lambda(k);
  return r;
}

StieltjesTableau::StieltjesTableau(int degree) {
  if (degree < 0) throw InvalidParams("tableau degree must be >= 0");
  cols_.resize(static_cast<std::size_t>(degree + 1));
  for (int n = 0; n <= degree; ++n) cols_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), Rational(0));
}

Rational StieltjesTableau::at(int i, int n) const {
  if (i < 0 || i > n) return 0;
  return cols_.at(static_cast<std::size_t>(n))[static_cast<std::size_t>(i)];
}

std::vector<Rational> StieltjesTableau::row(int i) const {
  std::vector<Rational> r;
  for (int n = i; n <= degree(); ++n) r.push_back(at(i, n));
  return r;
}

std::vector<Rational> StieltjesTableau::moments() const { return row(0); }

namespace {

void require_depth(const JFraction& jf, int N) {
  if (N < 0) throw InvalidParams("N must be >= 0");
  if (jf.b_count() < N || jf.lambda_count() < std::max(0, N - 1))
    throw InvalidParams("J-fraction too short for a tableau of degree " + std::to_string(N));
}

// Column n from column n-1: H[i][n] = H[i-1][n-1] + b_i H[i][n-1] + lambda_{i+1} H[i+1][n-1].
void next_column(const JFraction& jf, const std::vector<Rational>& prev, std::vector<Rational>& out, int n) {
  out.assign(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = n; i >= 0; --i) {
    Rational v = 0;
    if (i >= 1) v += prev[static_cast<std::size_t>(i - 1)];
    if (i <= n - 1) v += jf.b(i) * prev[static_cast<std::size_t>(i)];
    if (i + 1 <= n - 1) v += jf.lambda(i + 1) * prev[static_cast<std::size_t>(i + 1)];
    out[static_cast<std::size_t>(i)] = v;
  }
}

}  // namespace

StieltjesTableau tableau_from_jfraction(const JFraction& jf, int N) {
  require_depth(jf, N);
  StieltjesTableau tab(N);
  tab.cell(0, 0) = 1;
  std::vector<Rational> prev{Rational(1)}, cur;
  for (int n = 1; n <= N; ++n) {
    next_column(jf, prev, cur, n);
    for (int i = 0; i <= n; ++i) tab.cell(i, n) = cur[static_cast<std::size_t>(i)];
    std::swap(prev, cur);
  }
  return tab;
}

std::vector<Rational> moments_from_jfraction(const JFraction& jf, int N) {
  require_depth(jf, N);
  std::vector<Rational> mu{Rational(1)};
  std::vector<Rational> prev{Rational(1)}, cur;
  for (int n = 1; n <= N; ++n) {
    next_column(jf, prev, cur, n);
    mu.push_back(cur[0]);
    std::swap(prev, cur);
  }
  return mu;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Rational d = m[n - 1][n - 1];
  return sign > 0 ? d : Rational(-d);
}

Rational hankel(const std::vector<Rational>& mu, HankelKind kind, int n, int i) {
  if (kind == HankelKind::D) {
    if (n == -1) return 1;
    return hankel(mu, HankelKind::Delta, n, n);
  }
  if (kind == HankelKind::Chi) {
    if (n == -1) return 0;
    return hankel(mu, HankelKind::Delta, n + 1, n);
  }
  // Delta(i, n) with the argument order (n, i) of this signature.
  if (i < 0 || n < i) throw InvalidParams("Delta(i, n) needs 0 <= i <= n");
  if (static_cast<int>(mu.size()) <= n + i) throw InvalidParams("not enough moments for Delta(" + std::to_string(i) + ", " + std::to_string(n) + ")");
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(i + 1), std::vector<Rational>(static_cast<std::size_t>(i + 1)));
  for (int r = 0; r <= i; ++r) {
    int base = r < i ? r : n;
    for (int c = 0; c <= i; ++c) m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = mu[static_cast<std::size_t>(base + c)];
  }
  return determinant(std::move(m));
}

JFraction jfraction_from_moments(const std::vector<Rational>& mu, int N) {
  if (mu.empty() || mu[0] != 1) throw InvalidParams("moment sequence must start with mu_0 = 1");
  const int len = static_cast<int>(mu.size());
  std::vector<Rational> D{Rational(1)};  // D[k+1] = D_k
  auto Dn = [&](int k) -> Rational {
    while (static_cast<int>(D.size()) <= k + 1) D.push_back(hankel(mu, HankelKind::D, static_cast<int>(D.size()) - 1));
    return D[static_cast<std::size_t>(k + 1)];
  };
  std::vector<Rational> b, lam;
  Rational prev_ratio = 0;  // chi_{n-1}/D_{n-1}
  for (int n = 0; n <= N; ++n) {
    if (n >= 1 && 2 * n < len) {
      if (Dn(n - 1) == 0) throw NonRegular(n - 1);
      Rational l = Dn(n - 2) * Dn(n) / (Dn(n - 1) * Dn(n - 1));
      if (l == 0) throw NonRegular(n);
      lam.push_back(l);
    }
    if (2 * n + 1 < len) {
      if (Dn(n) == 0) throw NonRegular(n);
      Rational ratio = hankel(mu, HankelKind::Chi, n) / Dn(n);
      b.push_back(ratio - prev_ratio);
      prev_ratio = ratio;
    }
  }
  return JFraction(std::move(b), std::move(lam));
}

JFraction jfraction_from_moments(const std::vector<Rational>& mu) {
  return jfraction_from_moments(mu, std::max(0, static_cast<int>(mu.size()) / 2));
}

JFraction jfraction_by_inversion(const std::vector<Rational>& mu, int N) {
  if (mu.empty() || mu[0] != 1) throw InvalidParams("moment sequence must start with mu_0 = 1");
  const int len = static_cast<int>(mu.size());
  // row i holds H[i][n] at index n - i, for n <= len - 1 - i
  std::vector<Rational> prev, cur(mu);
  std::vector<Rational> b, lam;
  auto H = [](const std::vector<Rational>& row, int i, int n) -> const Rational& {
    return row[static_cast<std::size_t>(n - i)];
  };
  for (int i = 0; i <= N; ++i) {
    if (i + 1 > len - 1 - i) break;
    Rational bi = H(cur, i, i + 1) - (i >= 1 ? H(prev, i - 1, i) : Rational(0));
    b.push_back(bi);
    if (i + 1 > N || i + 2 > len - 1 - i) break;
    Rational li = H(cur, i, i + 2) - (i >= 1 ? H(prev, i - 1, i + 1) : Rational(0)) - bi * H(cur, i, i + 1);
    if (li == 0) throw NonRegular(i + 1);
    lam.push_back(li);
    // H[i+1][m] = (H[i][m+1] - H[i-1][m] - b_i H[i][m]) / lambda_{i+1}
    std::vector<Rational> next;
    for (int m = i + 1; m <= len - 2 - i; ++m) {
      Rational v = H(cur, i, m + 1) - bi * H(cur, i, m);
      if (i >= 1) v -= H(prev, i - 1, m);
      next.push_back(v / li);
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return JFraction(std::move(b), std::move(lam));
}

MonicPolyTable::MonicPolyTable(int degree) {
  c_.resize(static_cast<std::size_t>(degree + 1));
  for (int n = 0; n <= degree; ++n) c_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n + 1), Rational(0));
}

MonicPolyTable monic_polys(const JFraction& jf, int N) {
  require_depth(jf, N);
  MonicPolyTable t(N);
  t.coef(0, 0) = 1;
  for (int n = 0; n < N; ++n) {
    // P_{n+1} = x P_n - b_n P_n - lambda_n P_{n-1}
    for (int k = 0; k <= n; ++k) {
      t.coef(n + 1, k + 1) += t.coef(n, k);
      t.coef(n + 1, k) -= jf.b(n) * t.coef(n, k);
    }
    if (n >= 1)
      for (int k = 0; k <= n - 1; ++k) t.coef(n + 1, k) -= jf.lambda(n) * t.coef(n - 1, k);
  }
  return t;
}

bool verify_connection(const StieltjesTableau& tab, const MonicPolyTable& polys, int n) {
  if (n > tab.degree() || n > polys.degree()) throw InvalidParams("n exceeds table degree");
  std::vector<Rational> acc(static_cast<std::size_t>(n + 1), Rational(0));
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k <= j; ++k) acc[static_cast<std::size_t>(k)] += tab.at(j, n) * polys.coef(j, k);
  for (int k = 0; k <= n; ++k)
    if (acc[static_cast<std::size_t>(k)] != (k == n ? 1 : 0)) return false;
  return true;
}

bool verify_convolution(const StieltjesTableau& tab, const JFraction& jf, int k, int l) {
  if (k + l > tab.degree()) throw InvalidParams("k + l exceeds tableau degree");
  Rational rhs = 0, w = 1;
  for (int j = 0; j <= std::min(k, l); ++j) {
    if (j >= 1) w *= jf.lambda(j);
    rhs += w * tab.at(j, k) * tab.at(j, l);
  }
  return rhs == tab.at(0, k + l);
}

}  // namespace jfrac
