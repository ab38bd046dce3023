#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kuwata/heights.hpp"
#include "kuwata/search.hpp"

namespace kuwata {

inline constexpr const char* kVersion = "0.1.0";

/// Parsed invocation: parameters plus the knobs of the randomized and
/// search subcommands. All numbers are decimal on the wire.
struct RunConfig {
  std::uint64_t q = 0;  // p^k
  std::uint64_t p = 0;
  unsigned k = 1;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  bool relaxed = false;
  unsigned n = 1;
  std::string surface = "k2";  // search target: "k2" or "k6n"
  unsigned max_deg = 1;
  bool rational_search = false;
  unsigned samples = 1000;
  std::uint64_t seed = 42;
  std::string format = "text";
  BigInt cap = BigInt(1000000000);
  unsigned jobs = 1;
};

/// Splits q into p^k (throws if q is not a prime power with p > 3).
void resolve_prime_power(RunConfig& cfg);

/// One expected-vs-computed comparison. The claim source names the verified
/// statement ("table1/E0", "theorem/mw-k6", ...) or is "artifact-derived".
/// expected/computed hold JSON fragments (see json_* helpers).
struct CheckRecord {
  std::string name;
  std::string claim_source;
  std::string expected;
  std::string computed;
  bool pass = true;
};

struct ReportEnvelope {
  std::string version = kVersion;
  std::string command;
  RunConfig config;
  std::vector<CheckRecord> checks;
  std::vector<std::pair<std::string, std::string>> extra;  // name -> JSON fragment
  std::string note;  // free-form, text output only

  bool pass() const;
};

// JSON fragment builders (lossless: rationals as {"num": "...", "den": "..."})
std::string json_str(const std::string& s);
std::string json_int(long long v);
std::string json_bool(bool v);
std::string json_bigint(const BigInt& v);
std::string json_rational(const Rational& r);
std::string json_mat2q(const Mat2Q& m);
std::string json_mat2z(const Mat2Z& m);
std::string json_list(const std::vector<std::string>& fragments);

/// Renderers; the JSON form is byte-deterministic for a fixed config+seed.
std::string to_json(const ReportEnvelope& env);
std::string to_csv(const ReportEnvelope& env);
std::string to_text(const ReportEnvelope& env);
std::string render(const ReportEnvelope& env, const std::string& format);

// ---- subcommand pipelines ---------------------------------------------------

ReportEnvelope cmd_check_params(const RunConfig& cfg);
ReportEnvelope cmd_table1(const RunConfig& cfg);
ReportEnvelope cmd_heights(const RunConfig& cfg);
ReportEnvelope cmd_frobenius(const RunConfig& cfg);
ReportEnvelope cmd_rank(const RunConfig& cfg);
ReportEnvelope cmd_verify_iso(const RunConfig& cfg);
ReportEnvelope cmd_relations(const RunConfig& cfg);
ReportEnvelope cmd_search(const RunConfig& cfg);
ReportEnvelope cmd_torsion(const RunConfig& cfg);

/// 0 when every check passes, 1 otherwise.
int exit_code(const ReportEnvelope& env);
/// check-params contract: distinct statuses per violated hypothesis.
int param_exit_code(ParamViolation v);

/// Shipped parameter presets: p7 = (7,2,6), p13 = (13,2,5),
/// relaxed7 = (7,6,6) in relaxed mode.
std::vector<std::pair<std::string, RunConfig>> shipped_presets();

FamilyParams params_from_config(const RunConfig& cfg);

}  // namespace kuwata
