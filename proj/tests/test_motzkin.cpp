#include <random>

#include "doctest.h"
#include "jfrac/families.hpp"
#include "jfrac/motzkin.hpp"
#include "test_util.hpp"

using namespace jfrac;

namespace {

PathWeights unit_weights(int levels) {
  PathWeights w;
  w.b.assign(static_cast<std::size_t>(levels), Rational(0));
  w.lambda.assign(static_cast<std::size_t>(levels), Rational(1));
  w.lambda[0] = 0;
  return w;
}

}  // namespace

TEST_CASE("path sum examples") {
  auto w = unit_weights(8);
  CHECK(path_weight_sum(w, 0, 0, 0) == 1);
  CHECK(path_weight_sum(w, 0, 0, 4) == 2);  // Dyck paths of length 4
  CHECK(path_weight_sum(w, 0, 0, 6) == 5);
  CHECK(path_weight_sum(w, 0, 0, 3) == 0);  // parity
  CHECK(path_weight_sum(w, 0, 5, 2) == 0);  // out of reach
  CHECK(path_weight_sum_dp(w, 0, 5, 2) == 0);

  PathWeights m;  // Motzkin numbers
  m.b.assign(10, Rational(1));
  m.lambda.assign(10, Rational(1));
  std::vector<Rational> motzkin{1, 1, 2, 4, 9, 21, 51, 127};
  for (int n = 0; n < 8; ++n) CHECK(path_weight_sum(m, 0, 0, n) == motzkin[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(path_weight_sum(m, -1, 0, 2), InvalidParams);
}

TEST_CASE("missing level weights are reported") {
  PathWeights w;
  w.b = {0};
  w.lambda = {0};
  CHECK_THROWS_AS(path_weight_sum(w, 0, 0, 2), InvalidParams);
}

TEST_CASE("property: tableau entries are path sums") {
  int checked = 0;
  for (const auto& id : family_ids()) {
    auto f = make_family(id);
    if (!f.exact()) continue;
    auto jf = f.jfraction(12);
    auto tab = tableau_from_jfraction(jf, 10);
    auto w = PathWeights::from_jfraction(jf);
    INFO(id);
    for (int n = 0; n <= 10; ++n)
      for (int i = 0; i <= n; ++i) {
        CHECK(path_weight_sum_dp(w, 0, i, n) == tab.at(i, n));
        if (n <= 8) CHECK(path_weight_sum(w, 0, i, n) == tab.at(i, n));
      }
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("property: reversed paths carry the lambda product") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 8; ++trial) {
    auto jf = test::random_jfraction(rng, 12);
    auto w = PathWeights::from_jfraction(jf);
    for (int i = 0; i <= 5; ++i)
      for (int n = i; n <= 11; ++n)
        CHECK(jf.lambda_product(i) * path_weight_sum(w, 0, i, n) == path_weight_sum(w, i, 0, n));
  }
}

TEST_CASE("property: dynamic programming equals enumeration") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 8; ++trial) {
    auto w = PathWeights::from_jfraction(test::random_jfraction(rng, 14));
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int n = 0; n <= 10; ++n) CHECK(path_weight_sum(w, a, b, n) == path_weight_sum_dp(w, a, b, n));
  }
}
