#include "jfrac/motzkin.hpp"

#include <algorithm>
#include <cstdlib>

namespace jfrac {

PathWeights PathWeights::from_jfraction(const JFraction& jf) {
  PathWeights w;
  w.b = jf.b_values();
  w.lambda.push_back(0);
  for (const auto& l : jf.lambda_values()) w.lambda.push_back(l);
  return w;
}

int PathWeights::levels() const { return static_cast<int>(std::min(b.size(), lambda.size() + 1)); }

namespace {

void check_args(int start, int end, int n) {
  if (start < 0 || end < 0 || n < 0) throw InvalidParams("path levels and length must be >= 0");
}

const Rational& at_level(const std::vector<Rational>& v, int level, const char* what) {
  if (level >= static_cast<int>(v.size()))
    throw InvalidParams(std::string("path weights: no ") + what + " weight for level " + std::to_string(level));
  return v[static_cast<std::size_t>(level)];
}

struct Dfs {
  const PathWeights& w;
  int end;
  Rational total = 0;

  void walk(int level, int left, const Rational& acc) {
    if (std::abs(level - end) > left) return;
    if (left == 0) {
      total += acc;
      return;
    }
    walk(level + 1, left - 1, acc);
    if (std::abs(level - end) < left) {
      const Rational& bl = at_level(w.b, level, "flat");
      if (bl != 0) walk(level, left - 1, acc * bl);
    }
    if (level > 0) walk(level - 1, left - 1, acc * at_level(w.lambda, level, "down"));
  }
};

}  // namespace

Rational path_weight_sum(const PathWeights& w, int start_level, int end_level, int n) {
  check_args(start_level, end_level, n);
  if (std::abs(start_level - end_level) > n) return 0;
  Dfs d{w, end_level};
  d.walk(start_level, n, Rational(1));
  return d.total;
}

Rational path_weight_sum_dp(const PathWeights& w, int start_level, int end_level, int n) {
  check_args(start_level, end_level, n);
  if (std::abs(start_level - end_level) > n) return 0;
  const int top = start_level + n;
  std::vector<Rational> cur(static_cast<std::size_t>(top + 2), Rational(0)), next;
  cur[static_cast<std::size_t>(start_level)] = 1;
  for (int step = 0; step < n; ++step) {
    next.assign(cur.size(), Rational(0));
    for (int l = 0; l <= top; ++l) {
      const Rational& v = cur[static_cast<std::size_t>(l)];
      if (v == 0) continue;
      const int rest = n - step - 1;
      if (std::abs(l + 1 - end_level) <= rest) next[static_cast<std::size_t>(l + 1)] += v;
      if (std::abs(l - end_level) <= rest) next[static_cast<std::size_t>(l)] += v * at_level(w.b, l, "flat");
      if (l > 0 && std::abs(l - 1 - end_level) <= rest)
        next[static_cast<std::size_t>(l - 1)] += v * at_level(w.lambda, l, "down");
    }
    std::swap(cur, next);
  }
  return cur[static_cast<std::size_t>(end_level)];
}

}  // namespace jfrac
