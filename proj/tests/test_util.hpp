#pragma once

#include <random>
#include <vector>

#include "jfrac/jfraction.hpp"

namespace jfrac::test {

inline Rational random_rational(std::mt19937& rng, bool nonzero = false) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (;;) {
    Rational r = ratio(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

// b_0..b_{depth}, lambda_1..lambda_{depth}, every lambda nonzero.
inline JFraction random_jfraction(std::mt19937& rng, int depth) {
  std::vector<Rational> b, lam;
  for (int n = 0; n <= depth; ++n) b.push_back(random_rational(rng));
  for (int n = 1; n <= depth; ++n) lam.push_back(random_rational(rng, true));
  return JFraction(b, lam);
}

inline BigFloat rel_err(const BigFloat& a, const BigFloat& b) {
  BigFloat d = abs(a - b);
  return b.is_zero() ? d : d / abs(b);
}

}  // namespace jfrac::test
