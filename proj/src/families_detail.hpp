#pragma once

#include "jfrac/families.hpp"

namespace jfrac::detail {

// a / b, throwing DomainError instead of dividing by zero.
Rational frac(const Rational& a, const Rational& b);

// pref * s, with the tail bound scaled along.
SeriesValue scaled(const BigFloat& pref, const SeriesValue& s);
SeriesValue exact_value(const BigFloat& v);

// Fills b_num/lambda_num from b_exact/lambda_exact when the latter are set.
void numeric_from_exact(FamilySpec& f);

FamilySpec build_classical(const std::string& id, const ParamMap& p);
FamilySpec build_q(const std::string& id, const ParamMap& p);
FamilySpec build_moments(const std::string& id, const ParamMap& p);

// t^j / j!
BigFloat power_over_factorial(const BigFloat& t, int j);
BigFloat q_factorial(const Rational& q, int n, const PrecisionContext& ctx);

}  // namespace jfrac::detail
