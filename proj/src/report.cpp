#include "jfrac/theorems.hpp"

#include "json.hpp"

namespace jfrac {

namespace {

constexpr const char* kSuiteVersion = "1";

nlohmann::ordered_json optional_string(const std::optional<std::string>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string report_json(const std::vector<VerificationReport>& reports,
                        const std::vector<std::pair<std::string, std::string>>& config) {
  nlohmann::ordered_json doc;
  doc["suite_version"] = kSuiteVersion;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) cfg[k] = v;
  doc["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["s"] = optional_string(r.s);
    j["t"] = optional_string(r.t);
    j["mode"] = mode_name(r.mode);
    j["lhs"] = r.lhs;
    j["rhs_partial"] = r.rhs_partial;
    j["n_terms"] = r.n_terms;
    j["abs_error"] = r.abs_error.to_string();
    j["rel_error"] = r.rel_error.to_string();
    j["tail_estimate"] = r.tail_estimate.to_string();
    j["tolerance"] = r.tolerance.to_string();
    j["pass"] = r.pass;
    arr.push_back(std::move(j));
  }
  doc["reports"] = arr;
  return doc.dump(2);
}

}  // namespace jfrac
