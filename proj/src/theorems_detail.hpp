#pragma once

#include "jfrac/theorems.hpp"
#include "jfrac/translation.hpp"

namespace jfrac::detail {

Rational get(const ParamMap& p, const std::string& name);
int get_int(const ParamMap& p, const std::string& name);
bool get_flag(const ParamMap& p, const std::string& name);
BigFloat get_num(const ParamMap& p, const std::string& name, const PrecisionContext& ctx);

VerificationReport start_report(Mode mode);

// RHS = sum of terms; tail_estimate = |last term|.
void finish_numeric(VerificationReport& r, const BigFloat& lhs, const std::vector<BigFloat>& terms,
                    const PrecisionContext& ctx);
void finish_numeric(VerificationReport& r, const Complex& lhs, const std::vector<Complex>& terms,
                    const PrecisionContext& ctx);
// Single-value comparison, e.g. two closed forms of one function.
void finish_numeric_pair(VerificationReport& r, const BigFloat& lhs, const BigFloat& rhs, int n_terms,
                         const PrecisionContext& ctx);
// Coefficient-wise comparison; lhs/rhs in the report are the coefficient sums.
void finish_exact(VerificationReport& r, const std::vector<Rational>& lhs, const std::vector<Rational>& rhs,
                  const PrecisionContext& ctx);
std::vector<Rational> flatten(const NormalOrderedPoly& p);

ParamMap params(std::initializer_list<std::pair<const std::string, std::string>> kv);

std::vector<TheoremCase> theorem_cases();
std::vector<TheoremCase> identity_cases();

}  // namespace jfrac::detail
