#pragma once

#include <vector>

#include "jfrac/jfraction.hpp"

namespace jfrac {

// b[i] weights a flat step at level i; lambda[i] weights a down step from level i
// (lambda[0] is unused).
struct PathWeights {
  std::vector<Rational> b;
  std::vector<Rational> lambda;

  static PathWeights from_jfraction(const JFraction& jf);
  int levels() const;
};

// Exhaustive depth-first enumeration of weighted Motzkin paths. Exponential;
// meant as an oracle for n up to about 14.
Rational path_weight_sum(const PathWeights& w, int start_level, int end_level, int n);

// Same sum by dynamic programming over levels (this is the tableau recurrence).
Rational path_weight_sum_dp(const PathWeights& w, int start_level, int end_level, int n);

}  // namespace jfrac
