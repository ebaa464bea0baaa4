#include <fnmatch.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jfrac/motzkin.hpp"
#include "jfrac/theorems.hpp"

using namespace jfrac;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kNonRegular = 1, kInvalid = 2, kFailed = 3, kRuntime = 4 };

struct RunConfig {
  int precision_bits = 256;
  std::string rel_tolerance = "1e-30";
  int max_terms = 10000;
  std::optional<int> N;       // unset: each case keeps its own truncation
  std::optional<long> seed;   // unset: randomized cases keep their own seed
  std::string format = "text";

  PrecisionContext context() const { return PrecisionContext(precision_bits, rel_tolerance, max_terms); }

  std::vector<std::pair<std::string, std::string>> pairs() const {
    return {{"precision_bits", std::to_string(precision_bits)},
            {"rel_tolerance", rel_tolerance},
            {"max_terms", std::to_string(max_terms)},
            {"N", N ? std::to_string(*N) : "default"},
            {"seed", seed ? std::to_string(*seed) : "default"}};
  }
};

int to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long r = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return static_cast<int>(r);
  } catch (const std::exception&) {
    throw InvalidParams("config key '" + key + "' needs an integer, got '" + v + "'");
  }
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& v) {
  if (key == "precision_bits") cfg.precision_bits = to_int(key, v);
  else if (key == "rel_tolerance") cfg.rel_tolerance = v;
  else if (key == "max_terms") cfg.max_terms = to_int(key, v);
  else if (key == "N") cfg.N = to_int(key, v);
  else if (key == "seed") cfg.seed = to_int(key, v);
  else if (key == "format") cfg.format = v;
  else throw InvalidParams("unknown config key '" + key + "'");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key=value lines; '#' starts a comment.
void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot read config file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidParams("config line without '=': '" + line + "'");
    apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

ParamMap parse_params(const std::vector<std::string>& kvs) {
  ParamMap p;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw InvalidParams("--param expects key=value, got '" + kv + "'");
    p[trim(kv.substr(0, eq))] = parse_rational(kv.substr(eq + 1));
  }
  return p;
}

std::string join(const std::vector<Rational>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + to_string(v[i]);
  return s;
}

json strings(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

// Either --family with --param, or explicit --b/--lambda lists.
struct JFSpec {
  std::string family;
  std::vector<std::string> params;
  std::string b, lambda;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--family", family, "family id (see catalog)");
    cmd->add_option("--param", params, "family parameter key=value")->allow_extra_args(false);
    cmd->add_option("--b", b, "comma-separated b_0, b_1, ...");
    cmd->add_option("--lambda", lambda, "comma-separated lambda_1, lambda_2, ...");
  }

  JFraction build(int N) const {
    if (!family.empty()) {
      if (!b.empty() || !lambda.empty()) throw InvalidParams("give either --family or --b/--lambda, not both");
      return make_family(family, parse_params(params)).jfraction(N);
    }
    if (!params.empty()) throw InvalidParams("--param needs --family");
    return JFraction(parse_rational_list(b), parse_rational_list(lambda));
  }
};

int cmd_tableau(const JFSpec& spec, int N, const RunConfig& cfg) {
  StieltjesTableau tab = tableau_from_jfraction(spec.build(N), N);
  if (cfg.format == "csv") {
    std::cout << "i,n,value\n";
    for (int i = 0; i <= N; ++i)
      for (int n = i; n <= N; ++n) std::cout << i << ',' << n << ',' << to_string(tab.at(i, n)) << '\n';
  } else if (cfg.format == "json") {
    json rows = json::array();
    for (int i = 0; i <= N; ++i) rows.push_back(strings(tab.row(i)));
    std::cout << json{{"N", N}, {"rows", rows}}.dump(2) << '\n';
  } else {
    for (int i = 0; i <= N; ++i) std::cout << "H[" << i << "][" << i << ".." << N << "]: " << join(tab.row(i), " ") << '\n';
  }
  return kOk;
}

void print_sequence(const std::string& name, const std::vector<Rational>& v, const RunConfig& cfg, int first = 0) {
  if (cfg.format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t k = 0; k < v.size(); ++k) std::cout << first + static_cast<int>(k) << ',' << to_string(v[k]) << '\n';
  } else if (cfg.format == "json") {
    std::cout << json{{name, strings(v)}}.dump(2) << '\n';
  } else {
    std::cout << join(v) << '\n';
  }
}

int cmd_moments(const JFSpec& spec, int N, const RunConfig& cfg) {
  std::vector<Rational> mu;
  if (!spec.family.empty() && spec.b.empty() && spec.lambda.empty())
    mu = make_family(spec.family, parse_params(spec.params)).moments(N);
  else
    mu = moments_from_jfraction(spec.build(N), N);
  print_sequence("moments", mu, cfg);
  return kOk;
}

int cmd_jfraction(const std::string& moments, const JFSpec& spec, std::optional<int> N, const RunConfig& cfg) {
  JFraction jf;
  if (!moments.empty()) {
    if (!spec.family.empty()) throw InvalidParams("give either --moments or --family, not both");
    auto mu = parse_rational_list(moments);
    jf = N ? jfraction_from_moments(mu, *N) : jfraction_from_moments(mu);
  } else if (!spec.family.empty()) {
    jf = make_family(spec.family, parse_params(spec.params)).jfraction(N.value_or(10));
  } else {
    throw InvalidParams("jfraction needs --moments or --family");
  }
  if (cfg.format == "csv") {
    std::cout << "kind,n,value\n";
    for (int n = 0; n < jf.b_count(); ++n) std::cout << "b," << n << ',' << to_string(jf.b(n)) << '\n';
    for (int n = 1; n <= jf.lambda_count(); ++n) std::cout << "lambda," << n << ',' << to_string(jf.lambda(n)) << '\n';
  } else if (cfg.format == "json") {
    std::cout << json{{"b", strings(jf.b_values())}, {"lambda", strings(jf.lambda_values())}}.dump(2) << '\n';
  } else {
    std::cout << "b: " << join(jf.b_values()) << "\nlambda: " << join(jf.lambda_values()) << '\n';
  }
  return kOk;
}

int cmd_hankel(const std::string& moments, const std::string& kind, int n, int i, const RunConfig& cfg) {
  HankelKind k;
  if (kind == "D") k = HankelKind::D;
  else if (kind == "Delta") k = HankelKind::Delta;
  else if (kind == "Chi" || kind == "chi") k = HankelKind::Chi;
  else throw InvalidParams("--kind must be D, Delta or Chi");
  Rational v = hankel(parse_rational_list(moments), k, n, i);
  if (cfg.format == "json") std::cout << json{{"kind", kind}, {"n", n}, {"value", to_string(v)}}.dump(2) << '\n';
  else if (cfg.format == "csv") std::cout << "kind,n,value\n" << kind << ',' << n << ',' << to_string(v) << '\n';
  else std::cout << to_string(v) << '\n';
  return kOk;
}

int cmd_catalog(const std::string& family, const RunConfig& cfg) {
  json out = json::array();
  bool found = family.empty();
  for (const auto& e : catalog()) {
    if (!family.empty() && e.id != family) continue;
    found = true;
    json params = json::array();
    for (const auto& p : e.params)
      params.push_back({{"name", p.name}, {"default", p.default_value}, {"constraint", p.constraint}});
    out.push_back({{"id", e.id}, {"params", params}, {"functions", e.functions}, {"translation", e.translation}});
  }
  if (!found) throw InvalidParams("unknown family '" + family + "'");
  if (cfg.format == "json") {
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  if (cfg.format == "csv") std::cout << "id,params,translation,functions\n";
  for (const auto& e : out) {
    std::string ps, fs;
    for (const auto& p : e["params"]) ps += (ps.empty() ? "" : " ") + p["name"].get<std::string>() + "=" + p["default"].get<std::string>();
    for (const auto& f : e["functions"]) fs += (fs.empty() ? "" : " ") + f.get<std::string>();
    if (cfg.format == "csv")
      std::cout << e["id"].get<std::string>() << ',' << ps << ',' << e["translation"].get<std::string>() << ',' << fs << '\n';
    else
      std::cout << e["id"].get<std::string>() << "\n  params: " << (ps.empty() ? "-" : ps) << "\n  translation: "
                << e["translation"].get<std::string>() << "\n  functions: " << fs << '\n';
  }
  return kOk;
}

int cmd_oracle(const std::string& b, const std::string& lambda, int from, int to, int steps, const RunConfig& cfg) {
  PathWeights w{parse_rational_list(b), {Rational(0)}};
  for (const auto& l : parse_rational_list(lambda)) w.lambda.push_back(l);
  Rational v = path_weight_sum(w, from, to, steps);
  if (cfg.format == "json") std::cout << json{{"value", to_string(v)}}.dump(2) << '\n';
  else std::cout << to_string(v) << '\n';
  return kOk;
}

bool has_glob(const std::string& s) { return s.find_first_of("*?[") != std::string::npos; }

void print_reports(const std::vector<VerificationReport>& rs, const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "json") {
    os << report_json(rs, cfg.pairs()) << '\n';
  } else if (cfg.format == "csv") {
    os << "id,mode,pass,rel_error,abs_error,tolerance,n_terms\n";
    for (const auto& r : rs)
      os << r.id << ',' << mode_name(r.mode) << ',' << (r.pass ? "true" : "false") << ',' << r.rel_error.to_string(6)
         << ',' << r.abs_error.to_string(6) << ',' << r.tolerance.to_string(3) << ',' << r.n_terms << '\n';
  } else {
    int passed = 0;
    for (const auto& r : rs) {
      passed += r.pass;
      os << (r.pass ? "PASS " : "FAIL ") << r.id;
      for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
      if (r.lhs == "error") os << "  error: " << r.rhs_partial << '\n';
      else os << "  [" << mode_name(r.mode) << "] rel_error=" << r.rel_error.to_string(3) << " n_terms=" << r.n_terms << '\n';
    }
    os << passed << '/' << rs.size() << " passed\n";
  }
}

int cmd_verify(const std::vector<std::string>& patterns, bool all, bool strict, const std::vector<std::string>& kv,
               const RunConfig& cfg) {
  const PrecisionContext ctx = cfg.context();
  std::vector<VerificationReport> reports;
  if (!kv.empty()) {
    if (all || patterns.size() != 1 || has_glob(patterns[0]))
      throw InvalidParams("--param applies to exactly one theorem id");
    const std::string& id = patterns[0];
    const TheoremCase* found = nullptr;
    for (const auto& c : theorem_registry())
      if (c.id == id) found = &c;
    if (!found) throw UnknownTheorem("no theorem or identity registered as '" + id + "'");
    ParamMap p = parse_params(kv);
    if (cfg.N && found->default_sets.at(0).count("N")) p["N"] = *cfg.N;
    if (cfg.seed && found->default_sets.at(0).count("seed")) p["seed"] = *cfg.seed;
    reports.push_back(found->identity ? verify_identity(id, p, ctx) : verify_theorem(id, p, ctx));
  } else {
    if (!all && patterns.empty()) throw InvalidParams("verify needs an id pattern or --all");
    ParamMap overrides;
    if (cfg.N) overrides["N"] = *cfg.N;
    if (cfg.seed) overrides["seed"] = *cfg.seed;
    std::vector<std::string> pats = all ? std::vector<std::string>{""} : patterns;
    for (const auto& pat : pats) {
      auto rs = run_suite(pat, ctx, overrides);
      if (rs.empty() && strict) throw UnknownTheorem("no registered id matches '" + pat + "'");
      reports.insert(reports.end(), rs.begin(), rs.end());
    }
  }
  print_reports(reports, cfg, std::cout);
  for (const auto& r : reports)
    if (!r.pass) return kFailed;
  return kOk;
}

int cmd_report(const std::string& out, RunConfig cfg) {
  cfg.format = "json";
  ParamMap overrides;
  if (cfg.N) overrides["N"] = *cfg.N;
  if (cfg.seed) overrides["seed"] = *cfg.seed;
  auto reports = run_suite("", cfg.context(), overrides);
  if (out.empty() || out == "-") {
    print_reports(reports, cfg, std::cout);
  } else {
    std::ofstream f(out);
    if (!f) throw InvalidParams("cannot write '" + out + "'");
    print_reports(reports, cfg, f);
  }
  int passed = 0;
  for (const auto& r : reports) passed += r.pass;
  std::cerr << passed << '/' << reports.size() << " passed\n";
  return passed == static_cast<int>(reports.size()) ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stieltjes tableaux, J-fractions and addition-theorem verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<int> bits, max_terms, N;
  std::optional<long> seed;
  std::string rel_tol, format, config_path;
  auto* o_bits = app.add_option("--precision-bits", bits, "working precision in bits (default 256)");
  auto* o_tol = app.add_option("--rel-tol", rel_tol, "relative tolerance (default 1e-30)");
  auto* o_terms = app.add_option("--max-terms", max_terms, "series term cap (default 10000)");
  auto* o_format = app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--config", config_path, "key=value config file");
  auto* o_seed = app.add_option("--seed", seed, "seed for randomized cases");

  JFSpec spec;
  int tab_N = 0;
  auto* tableau = app.add_subcommand("tableau", "Stieltjes tableau H[i][n] for 0 <= i <= n <= N");
  spec.add_to(tableau);
  tableau->add_option("--N", tab_N, "degree")->required();

  JFSpec mspec;
  int mom_N = 0;
  auto* moments = app.add_subcommand("moments", "moments mu_0..mu_N");
  mspec.add_to(moments);
  moments->add_option("--N", mom_N, "degree")->required();

  std::string jf_moments;
  JFSpec jspec;
  auto* jfrac_cmd = app.add_subcommand("jfraction", "J-fraction coefficients from moments or a family");
  jfrac_cmd->add_option("--moments", jf_moments, "comma-separated mu_0, mu_1, ...");
  jfrac_cmd->add_option("--family", jspec.family, "family id");
  jfrac_cmd->add_option("--param", jspec.params, "family parameter key=value");
  std::optional<int> jf_N;
  jfrac_cmd->add_option("--N", jf_N, "largest coefficient index");

  std::string hk_moments, hk_kind = "D";
  int hk_n = 0, hk_i = 0;
  auto* hank = app.add_subcommand("hankel", "Hankel determinants D_n, Delta(i, n), chi_n");
  hank->add_option("--moments", hk_moments, "comma-separated moments")->required();
  hank->add_option("--kind", hk_kind, "D, Delta or Chi");
  hank->add_option("--n", hk_n, "index n")->required();
  hank->add_option("--i", hk_i, "row index i (Delta only)");

  std::string cat_family;
  auto* cat = app.add_subcommand("catalog", "list families, parameters and available functions");
  cat->add_option("--family", cat_family, "show a single family");

  std::string or_b, or_lambda;
  int or_from = 0, or_to = 0, or_steps = 0;
  auto* oracle = app.add_subcommand("oracle", "weighted Motzkin path sum by enumeration");
  oracle->add_option("--b", or_b, "level weights b_0, b_1, ...");
  oracle->add_option("--lambda", or_lambda, "down-step weights lambda_1, lambda_2, ...");
  oracle->add_option("--from", or_from, "start level");
  oracle->add_option("--to", or_to, "end level");
  oracle->add_option("--steps", or_steps, "path length")->required();

  std::vector<std::string> patterns, vparams;
  bool all = false, strict = false;
  auto* verify = app.add_subcommand("verify", "run registered theorems and identities");
  verify->add_option("patterns", patterns, "ids or glob patterns");
  verify->add_flag("--all", all, "run the whole registry");
  verify->add_flag("--strict", strict, "unknown ids are an error");
  verify->add_option("--param", vparams, "parameter override key=value (single id only)");
  auto* o_vN = verify->add_option("--N", N, "truncation override for numeric cases");

  std::string out_path;
  std::optional<int> rN;
  auto* report = app.add_subcommand("report", "full-suite JSON report");
  report->add_option("--out", out_path, "output file (default stdout)");
  auto* o_rN = report->add_option("--N", rN, "truncation override for numeric cases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    RunConfig cfg;
    if (const char* env = std::getenv("JFRAC_PRECISION_BITS")) apply_setting(cfg, "precision_bits", env);
    if (!config_path.empty()) load_config_file(cfg, config_path);
    if (o_bits->count()) cfg.precision_bits = *bits;
    if (o_tol->count()) cfg.rel_tolerance = rel_tol;
    if (o_terms->count()) cfg.max_terms = *max_terms;
    if (o_format->count()) cfg.format = format;
    if (o_seed->count()) cfg.seed = *seed;
    if (o_vN->count()) cfg.N = *N;
    if (o_rN->count()) cfg.N = *rN;
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
      throw InvalidParams("format must be json, csv or text");
    cfg.context();  // validates precision settings

    if (*tableau) return cmd_tableau(spec, tab_N, cfg);
    if (*moments) return cmd_moments(mspec, mom_N, cfg);
    if (*jfrac_cmd) return cmd_jfraction(jf_moments, jspec, jf_N, cfg);
    if (*hank) return cmd_hankel(hk_moments, hk_kind, hk_n, hk_i, cfg);
    if (*cat) return cmd_catalog(cat_family, cfg);
    if (*oracle) return cmd_oracle(or_b, or_lambda, or_from, or_to, or_steps, cfg);
    if (*verify) return cmd_verify(patterns, all, strict, vparams, cfg);
    if (*report) return cmd_report(out_path, cfg);
  } catch (const NonRegular& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonRegular;
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const UnknownTheorem& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const Unsupported& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntime;
  }
  return kOk;
}
