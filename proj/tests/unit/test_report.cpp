#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kuwata/report.hpp"

using namespace kuwata;

TEST_CASE("prime power resolution") {
  RunConfig cfg;
  cfg.q = 49;
  resolve_prime_power(cfg);
  CHECK(cfg.p == 7);
  CHECK(cfg.k == 2);
  cfg.q = 13;
  resolve_prime_power(cfg);
  CHECK(cfg.p == 13);
  CHECK(cfg.k == 1);
  cfg.q = 12;
  CHECK_THROWS_AS(resolve_prime_power(cfg), std::invalid_argument);
}

TEST_CASE("json output is byte-deterministic for a fixed config") {
  RunConfig cfg;
  cfg.q = 7;
  cfg.b = 2;
  cfg.c = 6;
  cfg.samples = 50;
  cfg.seed = 42;
  auto a = to_json(cmd_verify_iso(cfg));
  auto b = to_json(cmd_verify_iso(cfg));
  CHECK(a == b);
  auto c = to_json(cmd_rank(cfg));
  auto d = to_json(cmd_rank(cfg));
  CHECK(c == d);
}

TEST_CASE("json schema carries exact rationals and passes") {
  RunConfig cfg;
  cfg.q = 7;
  cfg.b = 2;
  cfg.c = 6;
  auto env = cmd_heights(cfg);
  CHECK(env.pass());
  auto j = nlohmann::json::parse(to_json(env));
  CHECK(j["version"] == kVersion);
  CHECK(j["command"] == "heights");
  CHECK(j["config"]["q"] == "7");
  CHECK(j["pass"] == true);
  bool found_rational = false;
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("claim_source"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("pass"));
    if (c["computed"].is_array()) {
      auto cell = c["computed"][0][0];
      if (cell.is_object() && cell.contains("num") && cell.contains("den")) {
        found_rational = true;
        CHECK(cell["num"].is_string());
        CHECK(cell["den"].is_string());
      }
    }
  }
  CHECK(found_rational);
}

TEST_CASE("check-params exit codes are per-hypothesis") {
  CHECK(param_exit_code(ParamViolation::QMod3) == 10);
  CHECK(param_exit_code(ParamViolation::BIsCube) == 12);
  CHECK(param_exit_code(ParamViolation::CNotCube) == 14);
  CHECK(param_exit_code(ParamViolation::CIsSquare) == 15);

  RunConfig good;
  good.q = 7;
  good.b = 2;
  good.c = 6;
  auto env = cmd_check_params(good);
  CHECK(env.pass());
  for (const auto& [k, v] : env.extra)
    if (k == "exit_code") CHECK(v == "0");

  RunConfig bad = good;
  bad.b = 6;
  auto envb = cmd_check_params(bad);
  CHECK_FALSE(envb.pass());
  for (const auto& [k, v] : envb.extra)
    if (k == "exit_code") CHECK(v == std::to_string(param_exit_code(ParamViolation::BIsCube)));

  RunConfig relaxed = bad;
  relaxed.relaxed = true;
  auto envr = cmd_check_params(relaxed);
  CHECK(envr.pass());
}

TEST_CASE("shipped presets are valid parameter sets") {
  auto presets = shipped_presets();
  CHECK(presets.size() == 3);
  for (const auto& [name, cfg] : presets) {
    CHECK_NOTHROW(params_from_config(cfg));
    auto env = cmd_rank(cfg);
    CHECK(env.pass());
  }
}

TEST_CASE("renderers") {
  RunConfig cfg;
  cfg.q = 7;
  cfg.b = 2;
  cfg.c = 6;
  auto env = cmd_relations(cfg);
  CHECK(env.pass());
  auto csv = to_csv(env);
  CHECK(csv.find("name,claim_source,expected,computed,pass") == 0);
  CHECK(csv.find("P0+P1+P2=O") != std::string::npos);
  auto text = to_text(env);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("OK") != std::string::npos);
  CHECK_THROWS_AS(render(env, "yaml"), std::invalid_argument);
}

TEST_CASE("search command distinguishes claim sources") {
  RunConfig strict;
  strict.q = 7;
  strict.b = 2;
  strict.c = 6;
  strict.surface = "k2";
  strict.max_deg = 1;
  auto env = cmd_search(strict);
  CHECK(env.pass());
  bool corollary = false;
  for (const auto& c : env.checks) corollary = corollary || c.claim_source == "corollary/k2-no-section";
  CHECK(corollary);

  RunConfig k12 = strict;
  k12.surface = "k6n";
  k12.n = 2;
  k12.max_deg = 0;
  auto env2 = cmd_search(k12);
  CHECK(env2.pass());
  bool evidence = false;
  for (const auto& c : env2.checks) evidence = evidence || c.claim_source == "problem-1/evidence";
  CHECK(evidence);
}
