#include <algorithm>

#include "doctest.h"
#include "jfrac/theorems.hpp"

using namespace jfrac;

namespace {

const PrecisionContext ctx;

BigFloat num(const std::string& s) { return BigFloat::parse(s, ctx.precision_bits); }

const TheoremCase& find(const std::string& id) {
  const auto& reg = theorem_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const TheoremCase& c) { return c.id == id; });
  REQUIRE(it != reg.end());
  return *it;
}

// |a - b| for decimal strings, either real or "x+yi".
BigFloat distance(const std::string& a, const std::string& b) {
  auto split = [](const std::string& v) -> std::pair<BigFloat, BigFloat> {
    if (v.empty() || v.back() != 'i') return {num(v), num("0")};
    std::size_t k = v.size() - 1;
    while (k > 0 && !((v[k] == '+' || v[k] == '-') && v[k - 1] != 'e')) --k;
    return {num(v.substr(0, k)), num(v.substr(k, v.size() - k - 1))};
  };
  auto [ar, ai] = split(a);
  auto [br, bi] = split(b);
  return hypot(ar - br, ai - bi);
}

bool has_param(const TheoremCase& c, const std::string& name) { return c.default_sets.front().count(name) > 0; }

VerificationReport run(const std::string& id, const ParamMap& p = {}, const PrecisionContext& c = ctx) {
  return find(id).identity ? verify_identity(id, p, c) : verify_theorem(id, p, c);
}

}  // namespace

TEST_CASE("registry") {
  auto ids = theorem_ids();
  CHECK(std::is_sorted(ids.begin(), ids.end()));
  CHECK(std::adjacent_find(ids.begin(), ids.end()) == ids.end());
  for (const char* id : {"conf_hyp_1f1", "bessel_plus", "little_qj", "little_qj_alt", "big_qj", "asc_qtrans",
                         "asc_noncomm", "q_ultra", "q_ultra_beta0", "askey_wilson", "hermite_moments",
                         "laguerre_moments", "meixner_moments", "mp_moments", "gegenbauer_moments", "affine",
                         "classical_generic", "ogf_variant", "hermite_convolution", "bessel_reduction",
                         "plane_wave_ultra", "plane_wave_cheby", "plane_wave_jacobi", "bessel_1f1_link",
                         "hankel_gegenbauer", "hankel_affine", "connection_rogers"})
    CHECK_MESSAGE(std::find(ids.begin(), ids.end(), id) != ids.end(), id);
}

TEST_CASE("confluent case at the origin") {
  auto r = verify_theorem("conf_hyp_1f1", {{"alpha", 0}, {"beta", 0}}, 0, 0, 10, ctx);
  CHECK(r.pass);
  CHECK(num(r.lhs) == 1L);
  CHECK(r.s == "0");
  CHECK(r.t == "0");
}

TEST_CASE("exact examples") {
  auto h = verify_theorem("hermite_moments", {}, ctx);
  CHECK(h.mode == Mode::Exact);
  CHECK(h.pass);
  CHECK(h.abs_error.is_zero());

  auto c = verify_identity("hermite_convolution", {{"max", 1}, {"x", ratio(3, 7)}}, ctx);
  CHECK(c.pass);
  CHECK(c.n_terms == 4);

  auto g = verify_identity("hankel_gegenbauer", {{"n", 1}, {"nu", ratio(3, 2)}, {"x", 2}}, ctx);
  CHECK(g.pass);
  CHECK(g.lhs == "7/4");  // D_0 + D_1 = 1 + 3/4
  CHECK(g.rhs_partial == "7/4");
}

TEST_CASE("plane wave at y = 0") {
  auto r = verify_identity("plane_wave_ultra", {{"y", 0}}, ctx);
  CHECK(r.pass);
  CHECK(num(r.lhs) == 1L);
  CHECK(num(r.rhs_partial) == 1L);
}

TEST_CASE("every default case passes") {
  auto reports = run_suite("", ctx);
  CHECK(reports.size() >= theorem_registry().size());
  for (const auto& r : reports) CHECK_MESSAGE(r.pass, r.id << " rel_error=" << r.rel_error.to_string(3) << " " << r.rhs_partial);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].id <= reports[i].id);
}

TEST_CASE("suite patterns") {
  auto lq = run_suite("little_*", ctx);
  REQUIRE(lq.size() == 2);
  CHECK(lq[0].id == "little_qj");
  CHECK(lq[1].id == "little_qj_alt");
  CHECK(run_suite("nonexistent*", ctx).empty());
  auto hg = run_suite("hankel_gegenbauer", ctx);
  CHECK(hg.size() == 4);
}

TEST_CASE("suite overrides apply only where the parameter exists") {
  auto reports = run_suite("conf_hyp_1f1", ctx, {{"N", 30}});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].n_terms == 31);
  auto ex = run_suite("hermite_convolution", ctx, {{"N", 30}});
  for (const auto& r : ex) CHECK(std::none_of(r.params.begin(), r.params.end(), [](const auto& kv) { return kv.first == "N"; }));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(verify_theorem("no_such_case", {}, ctx), UnknownTheorem);
  CHECK_THROWS_AS(verify_identity("conf_hyp_1f1", {}, ctx), UnknownTheorem);
  CHECK_THROWS_AS(verify_theorem("hermite_convolution", {}, ctx), UnknownTheorem);
  CHECK_THROWS_AS(verify_theorem("conf_hyp_1f1", {{"gamma", 1}}, ctx), InvalidParams);
  CHECK_THROWS_AS(verify_theorem("asc_qtrans", {{"printed", 2}}, ctx), InvalidParams);
  auto failed = run_suite("conf_hyp_1f1", ctx, {{"N", -1}});
  REQUIRE(failed.size() == 1);
  CHECK_FALSE(failed[0].pass);
  CHECK(failed[0].lhs == "error");
}

TEST_CASE("printed forms fail") {
  for (const char* id : {"asc_qtrans", "q_ultra_beta0", "askey_wilson", "laguerre_moments", "meixner_moments",
                         "mp_moments", "affine"}) {
    auto r = run(id, {{"printed", 1}});
    CHECK_MESSAGE(!r.pass, id);
    CHECK_MESSAGE(r.rel_error > num("1e-4"), id);
  }
  for (const char* id : {"laguerre_moments", "meixner_moments"}) {
    auto r = run(id, {{"printed", 1}, {"numeric", 1}});
    CHECK_MESSAGE(!r.pass, id);
    CHECK(r.mode == Mode::Numeric);
  }
  // the corrected numeric paths pass
  for (const char* id : {"hermite_moments", "laguerre_moments", "meixner_moments", "gegenbauer_moments"})
    CHECK_MESSAGE(run(id, {{"numeric", 1}}).pass, id);
}

TEST_CASE("tail estimate bounds the next five terms") {
  for (const auto& c : theorem_registry()) {
    if (!has_param(c, "N")) continue;
    ParamMap p = c.default_sets.front();
    if (p.count("numeric")) p["numeric"] = 1;
    auto a = run(c.id, p);
    if (a.mode != Mode::Numeric) continue;
    p["N"] += 5;
    auto b = run(c.id, p);
    BigFloat diff = distance(a.rhs_partial, b.rhs_partial);
    CHECK_MESSAGE(diff <= a.tail_estimate, c.id << " diff=" << diff.to_string(3) << " tail=" << a.tail_estimate.to_string(3));
  }
}

TEST_CASE("more precision and more terms never hurt") {
  for (const char* id : {"conf_hyp_1f1", "little_qj", "q_ultra"}) {
    PrecisionContext loose(256, "1e-20");
    ParamMap p = find(id).default_sets.front();
    p["N"] = 4;
    BigFloat prev = run(id, p, loose).rel_error;
    for (const char* tol : {"5e-21", "2.5e-21", "1.25e-21"}) {
      p["N"] *= 2;
      BigFloat e = run(id, p, PrecisionContext(256, tol)).rel_error;
      CHECK_MESSAGE(e <= prev, std::string(id) << " tol=" << tol << " " << e.to_string(3) << " > " << prev.to_string(3));
      prev = e;
    }
  }
}

TEST_CASE("reports are deterministic") {
  auto a = report_json(run_suite("", ctx), {{"k", "v"}});
  auto b = report_json(run_suite("", ctx), {{"k", "v"}});
  CHECK(a == b);
  CHECK(a.find("\"suite_version\": \"1\"") != std::string::npos);
}

TEST_CASE("random-fraction cases honour the seed") {
  auto a = verify_theorem("classical_generic", {{"seed", 5}}, ctx);
  auto b = verify_theorem("classical_generic", {{"seed", 5}}, ctx);
  auto c = verify_theorem("classical_generic", {{"seed", 6}}, ctx);
  CHECK(a.pass);
  CHECK(c.pass);
  CHECK(a.lhs == b.lhs);
  CHECK(a.lhs != c.lhs);
}
