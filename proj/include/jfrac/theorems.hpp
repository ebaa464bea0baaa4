#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jfrac/families.hpp"

namespace jfrac {

enum class Mode { Exact, Numeric };

struct VerificationReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;  // sorted by name, values as p/q
  std::optional<std::string> s, t;
  Mode mode = Mode::Numeric;
  // Numeric: decimal values. Exact: sums of all table coefficients as p/q.
  std::string lhs, rhs_partial;
  int n_terms = 0;
  // Exact mode: abs_error counts mismatching coefficients, rel_error is the mismatch fraction.
  BigFloat abs_error, rel_error, tail_estimate, tolerance;
  bool pass = false;
};

struct TheoremCase {
  std::string id;
  bool identity = false;
  std::vector<ParamMap> default_sets;  // run_suite runs every set; overrides start from the first
  long tolerance_factor = 1;           // tolerance = factor * ctx.rel_tolerance
  std::function<VerificationReport(const ParamMap&, const PrecisionContext&)> run;
};

const std::vector<TheoremCase>& theorem_registry();  // sorted by id
std::vector<std::string> theorem_ids();

// params override the case's first default set; s, t and N are ordinary params.
VerificationReport verify_theorem(const std::string& id, const ParamMap& params, const PrecisionContext& ctx);
VerificationReport verify_theorem(const std::string& id, ParamMap params, const Rational& s, const Rational& t, int N,
                                  const PrecisionContext& ctx);
VerificationReport verify_identity(const std::string& id, const ParamMap& params, const PrecisionContext& ctx);

// Every case whose id matches the glob pattern (empty pattern: all), at each of
// its default parameter sets, ordered by id. Failures are recorded, never thrown.
// An override replaces a parameter only in the sets that already carry it (e.g. N, seed).
std::vector<VerificationReport> run_suite(const std::string& pattern, const PrecisionContext& ctx,
                                          const ParamMap& overrides = {});

// The suite's JSON document: {suite_version, config, reports}.
std::string report_json(const std::vector<VerificationReport>& reports,
                        const std::vector<std::pair<std::string, std::string>>& config);
std::string mode_name(Mode m);

}  // namespace jfrac
