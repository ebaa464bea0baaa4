#pragma once

#include <functional>
#include <map>
#include <optional>
#include <memory>
#include <string>
#include <vector>

#include "jfrac/jfraction.hpp"
#include "jfrac/series.hpp"
#include "jfrac/translation_kind.hpp"

namespace jfrac {

using ParamMap = std::map<std::string, Rational>;
using ExactSeq = std::function<Rational(int)>;
using NumSeq = std::function<BigFloat(int, const PrecisionContext&)>;
using QFn = std::function<SeriesValue(int, const BigFloat&, const PrecisionContext&)>;
using ComplexQFn = std::function<ComplexSeriesValue(int, const BigFloat&, const PrecisionContext&)>;
using ComplexSeq = std::function<Complex(int, const PrecisionContext&)>;

// How Q_j relates to the tableau: sum_n H_{j,n} t^n / n! or / (q;q)_n.
enum class Normalization { Factorial, QFactorial };

struct FamilySpec {
  std::string id;
  ParamMap params;
  std::optional<Rational> q;  // set for every family carrying a base q
  Normalization normalization = Normalization::Factorial;
  TranslationKind translation = TranslationKind::classical();

  // Exact coefficients; empty when a coefficient is irrational for these params.
  ExactSeq b_exact, lambda_exact;
  NumSeq b_num, lambda_num;

  QFn q_fn;
  QFn q_alt_fn;          // a second closed form of Q_j, when one exists
  QFn q_tilde_fn;        // q-families only
  QFn q_tilde_alt_fn;

  // Closed-form weight overriding lambda_1...lambda_n (polynomials-as-moments families).
  ExactSeq weight_exact;
  NumSeq weight_num;

  // Coefficients of t^0..t^N in the closed form of Q_j, when they are rational.
  std::function<std::vector<Rational>(int, int)> q_series_exact;

  ExactSeq moment_exact;                        // mu_n, when given directly
  std::function<Rational(int, int)> tableau_closed;  // H_{i,n}

  // Complex-valued families (Meixner-Pollaczek as moments).
  ComplexQFn q_fn_c;
  ComplexSeq weight_c;

  bool exact() const { return static_cast<bool>(b_exact) && static_cast<bool>(lambda_exact); }
  bool is_complex() const { return static_cast<bool>(q_fn_c); }

  // b_0..b_N and lambda_1..lambda_N. Throws Unsupported for non-rational families.
  JFraction jfraction(int N) const;
  // mu_0..mu_N, exactly.
  std::vector<Rational> moments(int N) const;
  // weight_n: the closed form when given, else lambda_1...lambda_n.
  Rational weight(int n) const;
  BigFloat weight_numeric(int n, const PrecisionContext& ctx) const;
  Rational param(const std::string& name) const;
};

struct ParamInfo {
  std::string name;
  std::string default_value;
  std::string constraint;
};

struct CatalogEntry {
  std::string id;
  std::vector<ParamInfo> params;
  std::vector<std::string> functions;
  std::string translation;
};

// Unknown ids and parameter names, and violated constraints, throw InvalidParams.
FamilySpec make_family(const std::string& id, const ParamMap& params = {});
// b -> (b_n - b)/a, lambda -> lambda_n/a^2, Q_n(t) -> e^{-bt/a} Q_n(t/a).
FamilySpec make_affine(const FamilySpec& inner, const Rational& a, const Rational& b);

std::vector<CatalogEntry> catalog();
std::vector<std::string> family_ids();

SeriesValue q_function(const FamilySpec& f, int j, const BigFloat& t, const PrecisionContext& ctx);
// Throws UnsupportedTilde for families without a tilde function.
SeriesValue q_tilde_function(const FamilySpec& f, int j, const BigFloat& t, const PrecisionContext& ctx);
// Throws Unsupported for families without a closed-form tableau.
Rational tableau_closed_form(const FamilySpec& f, int i, int n);

}  // namespace jfrac
