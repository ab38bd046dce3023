#include "kuwata/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace kuwata {

using ordered_json = nlohmann::ordered_json;

void resolve_prime_power(RunConfig& cfg) {
  if (cfg.q < 5) throw std::invalid_argument("q must be a prime power with p > 3");
  std::uint64_t m = cfg.q;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = m;  // q itself prime
  unsigned k = 0;
  std::uint64_t acc = 1;
  while (m != 1) {
    if (m % p != 0) throw std::invalid_argument("q is not a prime power");
    m /= p;
    acc *= p;
    ++k;
  }
  if (acc != cfg.q) throw std::invalid_argument("q is not a prime power");
  cfg.p = p;
  cfg.k = k;
}

bool ReportEnvelope::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

// ---- JSON fragments ----------------------------------------------------------

std::string json_str(const std::string& s) { return ordered_json(s).dump(); }
std::string json_int(long long v) { return std::to_string(v); }
std::string json_bool(bool v) { return v ? "true" : "false"; }
std::string json_bigint(const BigInt& v) { return json_str(v.str()); }

std::string json_rational(const Rational& r) {
  return std::string("{\"num\": ") + json_str(num(r).str()) + ", \"den\": " +
         json_str(den(r).str()) + "}";
}

std::string json_mat2q(const Mat2Q& m) {
  return "[[" + json_rational(m.a) + ", " + json_rational(m.b) + "], [" + json_rational(m.c) +
         ", " + json_rational(m.d) + "]]";
}

std::string json_mat2z(const Mat2Z& m) {
  std::ostringstream os;
  os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
  return os.str();
}

std::string json_list(const std::vector<std::string>& fragments) {
  std::string out = "[";
  for (size_t i = 0; i < fragments.size(); ++i) {
    if (i) out += ", ";
    out += fragments[i];
  }
  return out + "]";
}

// ---- rendering ----------------------------------------------------------------

namespace {

ordered_json config_json(const RunConfig& cfg) {
  ordered_json j;
  j["q"] = std::to_string(cfg.q);
  j["p"] = std::to_string(cfg.p);
  j["k"] = cfg.k;
  j["b"] = std::to_string(cfg.b);
  j["c"] = std::to_string(cfg.c);
  j["mode"] = cfg.relaxed ? "relaxed" : "strict";
  j["n"] = cfg.n;
  j["surface"] = cfg.surface;
  j["max_deg"] = cfg.max_deg;
  j["rational_search"] = cfg.rational_search;
  j["samples"] = cfg.samples;
  j["seed"] = std::to_string(cfg.seed);
  j["cap"] = cfg.cap.str();
  j["jobs"] = cfg.jobs;
  return j;
}

}  // namespace

std::string to_json(const ReportEnvelope& env) {
  ordered_json j;
  j["version"] = env.version;
  j["command"] = env.command;
  j["config"] = config_json(env.config);
  ordered_json checks = ordered_json::array();
  for (const auto& c : env.checks) {
    ordered_json r;
    r["name"] = c.name;
    r["claim_source"] = c.claim_source;
    r["expected"] = ordered_json::parse(c.expected);
    r["computed"] = ordered_json::parse(c.computed);
    r["pass"] = c.pass;
    checks.push_back(std::move(r));
  }
  j["checks"] = std::move(checks);
  ordered_json extra;
  for (const auto& [k, v] : env.extra) extra[k] = ordered_json::parse(v);
  j["extra"] = std::move(extra);
  j["pass"] = env.pass();
  return j.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const ReportEnvelope& env) {
  std::ostringstream os;
  os << "name,claim_source,expected,computed,pass\n";
  for (const auto& c : env.checks)
    os << csv_escape(c.name) << "," << csv_escape(c.claim_source) << ","
       << csv_escape(c.expected) << "," << csv_escape(c.computed) << ","
       << (c.pass ? "true" : "false") << "\n";
  return os.str();
}

std::string to_text(const ReportEnvelope& env) {
  std::ostringstream os;
  os << env.command << " (q=" << env.config.q << ", b=" << env.config.b << ", c=" << env.config.c
     << ", " << (env.config.relaxed ? "relaxed" : "strict") << ")\n";
  for (const auto& c : env.checks) {
    os << (c.pass ? "  [PASS] " : "  [FAIL] ") << c.name << ": " << c.computed;
    if (!c.pass) os << "  (expected " << c.expected << ")";
    os << "  {" << c.claim_source << "}\n";
  }
  for (const auto& [k, v] : env.extra) os << "  " << k << " = " << v << "\n";
  if (!env.note.empty()) os << "  " << env.note << "\n";
  os << (env.pass() ? "OK" : "FAILED") << "\n";
  return os.str();
}

std::string render(const ReportEnvelope& env, const std::string& format) {
  if (format == "json") return to_json(env);
  if (format == "csv") return to_csv(env);
  if (format == "text") return to_text(env);
  throw std::invalid_argument("unknown format: " + format);
}

int exit_code(const ReportEnvelope& env) { return env.pass() ? 0 : 1; }

int param_exit_code(ParamViolation v) {
  switch (v) {
    case ParamViolation::QMod3: return 10;
    case ParamViolation::BZero: return 11;
    case ParamViolation::BIsCube: return 12;
    case ParamViolation::CZero: return 13;
    case ParamViolation::CNotCube: return 14;
    case ParamViolation::CIsSquare: return 15;
    case ParamViolation::NBad: return 16;
  }
  return 1;
}

std::vector<std::pair<std::string, RunConfig>> shipped_presets() {
  RunConfig p7;
  p7.q = 7; p7.b = 2; p7.c = 6;
  RunConfig p13;
  p13.q = 13; p13.b = 2; p13.c = 5;
  RunConfig r7;
  r7.q = 7; r7.b = 6; r7.c = 6; r7.relaxed = true;
  for (RunConfig* cfg : {&p7, &p13, &r7}) resolve_prime_power(*cfg);
  return {{"p7", p7}, {"p13", p13}, {"relaxed7", r7}};
}

FamilyParams params_from_config(const RunConfig& cfg) {
  RunConfig c = cfg;
  if (c.p == 0) resolve_prime_power(c);
  FieldPtr base = make_field(c.p, c.k);
  FieldElement b = element_at(base, BigInt(c.b) % base->order);
  FieldElement cc = element_at(base, BigInt(c.c) % base->order);
  return validate_params(base, b, cc, c.relaxed);
}

// ---- subcommands ----------------------------------------------------------------

ReportEnvelope cmd_check_params(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "check-params";
  env.config = cfg;
  resolve_prime_power(env.config);
  try {
    FamilyParams par = params_from_config(env.config);
    env.checks.push_back({"q-mod-3", "hypotheses/base-field", json_str("q = 1 (mod 3)"),
                          json_str("q = 1 (mod 3)"), true});
    env.checks.push_back({"c-is-cube", "hypotheses/c", json_bool(true), json_bool(true), true});
    env.checks.push_back({"c-is-nonsquare", "hypotheses/c", json_bool(true), json_bool(true), true});
    env.checks.push_back({"b-is-noncube", "hypotheses/b", json_bool(true),
                          json_bool(!par.b_is_cube), !par.b_is_cube || par.relaxed});
    if (par.b_is_cube)
      env.extra.emplace_back("flag", json_str("b is a cube: relaxed (rank-2) scenario"));
    env.extra.emplace_back("omega", json_str(par.consts.omega.str()));
    env.extra.emplace_back("sqrt_minus3", json_str(par.consts.sqrt_minus3.str()));
    env.extra.emplace_back("cbrt_c", json_str(par.cbrt_c.str()));
    env.extra.emplace_back("exit_code", json_int(0));
  } catch (const ParamError& e) {
    env.checks.push_back({"hypotheses", "hypotheses/" + violation_str(e.violation()),
                          json_str("satisfied"), json_str(violation_str(e.violation())), false});
    env.extra.emplace_back("exit_code", json_int(param_exit_code(e.violation())));
  }
  return env;
}

namespace {

struct Table1Row {
  int j;
  std::vector<FiberType> fibers;
  std::map<RootLattice, int> lattice;
  MwGroup mw;
  int rho;
  int euler;
};

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {0, {FiberType::IV, FiberType::IVstar},
       {{RootLattice::A2, 1}, {RootLattice::E6, 1}}, {0, "Z/3"}, 10, 12},
      {1, {FiberType::II, FiberType::IV, FiberType::I0star},
       {{RootLattice::A2, 1}, {RootLattice::D4, 1}}, {2, "0"}, 10, 12},
      {2, {FiberType::IV, FiberType::IV, FiberType::IV},
       {{RootLattice::A2, 3}}, {2, "Z/3"}, 10, 12},
      {5, {FiberType::IV, FiberType::IIstar, FiberType::IIstar},
       {{RootLattice::A2, 1}, {RootLattice::E8, 2}}, {0, "0"}, 20, 24},
  };
  return rows;
}

std::vector<std::string> fiber_multiset(const std::vector<FiberType>& v) {
  std::vector<std::string> names;
  for (auto t : v) names.push_back(fiber_type_str(t));
  std::sort(names.begin(), names.end());
  return names;
}

std::vector<std::string> fiber_multiset(const FibrationReport& rep) {
  std::vector<FiberType> v;
  for (const auto& f : rep.fibers)
    for (int i = 0; i < f.place.degree; ++i) v.push_back(f.type);
  return fiber_multiset(v);
}

std::string json_strings(const std::vector<std::string>& v) {
  std::vector<std::string> frags;
  for (const auto& s : v) frags.push_back(json_str(s));
  return json_list(frags);
}

}  // namespace

ReportEnvelope cmd_table1(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "table1";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  for (const auto& row : table1_rows()) {
    auto curve = weierstrass_model(par, SurfaceId::ej(row.j));
    auto rep = fiber_configuration(curve, "E" + std::to_string(row.j));
    auto gm = geometric_mw(rep);
    const std::string tag = "fiber-table/E" + std::to_string(row.j);
    env.checks.push_back({"E" + std::to_string(row.j) + "-fibers", tag,
                          json_strings(fiber_multiset(row.fibers)),
                          json_strings(fiber_multiset(rep)),
                          fiber_multiset(row.fibers) == fiber_multiset(rep)});
    env.checks.push_back({"E" + std::to_string(row.j) + "-lattice", tag,
                          json_str([&] {
                            FibrationReport tmp;
                            tmp.lattice = row.lattice;
                            return tmp.lattice_str();
                          }()),
                          json_str(rep.lattice_str()), row.lattice == rep.lattice});
    std::string mw_str = gm ? gm->mw.str() : "unsupported configuration";
    env.checks.push_back({"E" + std::to_string(row.j) + "-mw", tag, json_str(row.mw.str()),
                          json_str(mw_str), gm && gm->mw.rank == row.mw.rank &&
                                                gm->mw.torsion == row.mw.torsion});
    int rho = gm ? shioda_tate_rho(rep, gm->mw) : -1;
    env.checks.push_back({"E" + std::to_string(row.j) + "-rho", tag, json_int(row.rho),
                          json_int(rho), rho == row.rho});
    env.checks.push_back({"E" + std::to_string(row.j) + "-euler", "artifact-derived",
                          json_int(row.euler), json_int(rep.euler_sum),
                          rep.euler_sum == row.euler});
    if (gm) env.extra.emplace_back("E" + std::to_string(row.j) + "-provenance",
                                   json_str(gm->provenance));
  }
  return env;
}

ReportEnvelope cmd_heights(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "heights";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  Section p0 = named_section(par, SectionFamily::P, 0);
  Section p1 = named_section(par, SectionFamily::P, 1);
  SectionLattice l1 = make_lattice(p0.curve(), p0, p1);
  Section q0 = named_section(par, SectionFamily::Q, 0);
  Section q1 = named_section(par, SectionFamily::Q, 1);
  SectionLattice l2 = make_lattice(q0.curve(), q0, q1);
  env.checks.push_back({"height-matrix-L1", "heights/L1", json_mat2q(expected_gram_L1()),
                        json_mat2q(l1.gram), l1.gram == expected_gram_L1()});
  env.checks.push_back({"height-matrix-L2", "heights/L2", json_mat2q(expected_gram_L2()),
                        json_mat2q(l2.gram), l2.gram == expected_gram_L2()});
  env.checks.push_back({"det-L1", "artifact-derived", json_rational(Rational(1, 12)),
                        json_rational(l1.gram.det()), l1.gram.det() == Rational(1, 12)});
  env.checks.push_back({"det-L2", "artifact-derived", json_rational(Rational(1, 3)),
                        json_rational(l2.gram.det()), l2.gram.det() == Rational(1, 3)});
  return env;
}

ReportEnvelope cmd_frobenius(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "frobenius";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  MWReport rep = mw_rank_k6(par);

  auto isometry = [](const Mat2Q& gram, const Mat2Z& m) {
    Mat2Q mq = m.to_q();
    return mq.transpose() * gram * mq == gram;
  };
  env.checks.push_back({"symbol-4b", "frobenius/L1", json_str("omega^" + std::to_string(rep.symbol_4b)),
                        json_str("omega^" + std::to_string(rep.symbol_4b)), true});
  env.checks.push_back({"frobenius-L1", "frobenius/L1",
                        json_mat2z(expected_frobenius_L1(rep.symbol_4b)),
                        json_mat2z(rep.frob_L1.m),
                        rep.frob_L1.m == expected_frobenius_L1(rep.symbol_4b)});
  env.checks.push_back({"symbol-b", "frobenius/L2", json_str("omega^" + std::to_string(rep.symbol_b)),
                        json_str("omega^" + std::to_string(rep.symbol_b)), true});
  env.checks.push_back({"frobenius-L2", "frobenius/L2",
                        json_mat2z(expected_frobenius_L2(rep.symbol_b)),
                        json_mat2z(rep.frob_L2.m),
                        rep.frob_L2.m == expected_frobenius_L2(rep.symbol_b)});
  env.checks.push_back({"isometry-L1", "artifact-derived", json_bool(true),
                        json_bool(isometry(rep.gram_L1, rep.frob_L1.m)),
                        isometry(rep.gram_L1, rep.frob_L1.m)});
  env.checks.push_back({"isometry-L2", "artifact-derived", json_bool(true),
                        json_bool(isometry(rep.gram_L2, rep.frob_L2.m)),
                        isometry(rep.gram_L2, rep.frob_L2.m)});
  bool order6 = rep.frob_L1.m.pow(6) == Mat2Z::identity() &&
                rep.frob_L2.m.pow(6) == Mat2Z::identity();
  env.checks.push_back(
      {"frobenius-order-divides-6", "artifact-derived", json_bool(true), json_bool(order6), order6});
  if (!par.relaxed)
    env.checks.push_back({"identity-case-excluded", "frobenius/L2", json_bool(true),
                          json_bool(rep.symbol_b != 0), rep.symbol_b != 0});
  return env;
}

ReportEnvelope cmd_rank(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "rank";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  MWReport rep = mw_rank_k6(par);
  const bool remark_case = rep.relaxed && rep.b_is_cube;
  const int expected_rank = remark_case ? 2 : 0;
  const std::string source = remark_case ? "remark/cube-rank-2" : "theorem/mw-k6";
  env.checks.push_back({"mw-rank", source, json_int(expected_rank), json_int(rep.rank),
                        rep.rank == expected_rank});
  env.checks.push_back({"mw-torsion", "theorem/mw-k6", json_str("Z/3"), json_str(rep.torsion),
                        rep.torsion == "Z/3"});
  int sum = 0;
  std::vector<std::string> ranks;
  for (int r : rep.ej_ranks) {
    sum += r;
    ranks.push_back(json_int(r));
  }
  env.checks.push_back({"rank-decomposition", "rank-decomposition/sum-over-Ej",
                        json_int(rep.rank), json_int(sum), sum == rep.rank});
  env.extra.emplace_back("ej_ranks", json_list(ranks));
  env.extra.emplace_back("symbol_4b", json_int(rep.symbol_4b));
  env.extra.emplace_back("symbol_b", json_int(rep.symbol_b));
  env.extra.emplace_back("frobenius_L1", json_mat2z(rep.frob_L1.m));
  env.extra.emplace_back("frobenius_L2", json_mat2z(rep.frob_L2.m));
  return env;
}

ReportEnvelope cmd_verify_iso(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "verify-iso";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  const unsigned n = env.config.n;

  std::mt19937_64 rng(env.config.seed);
  unsigned failures = 0;
  for (unsigned i = 0; i < env.config.samples; ++i) {
    KummerPointExt pt = sample_kummer_point(par, n, rng);
    PhiPoint ph = phi_point(par, n, pt.x0, pt.x1, pt.t);
    bool ok = !ph.exceptional && on_curve(ph.point);
    if (ok) {
      PhiInvPoint inv = phi_inv_point(par, n, ph.point, pt.t);
      ok = !inv.exceptional && inv.x0 == pt.x0 && inv.x1 == pt.x1;
    }
    if (!ok) ++failures;
  }
  env.checks.push_back({"phi-roundtrip-failures", "iso/phi-roundtrip", json_int(0),
                        json_int(failures), failures == 0});
  // Schwartz-Zippel tail: a false identity of total degree D vanishes at a
  // uniform sample of F_{q^6} with probability at most D / q^6
  const BigInt degree_bound = 20 * n + 10;
  const BigInt ratio = par.ext->order / degree_bound;
  if (ratio < 2) throw std::domain_error("sample space too small for a meaningful bound");
  const unsigned long long exponent =
      static_cast<unsigned long long>(env.config.samples) * floor_log2(ratio);
  env.checks.push_back({"sampling-bound-log2", "artifact-derived", json_str("> 40"),
                        json_int(static_cast<long long>(exponent)), exponent > 40});
  env.extra.emplace_back("sampling_bound", json_str("2^-" + std::to_string(exponent)));
  env.extra.emplace_back("identity_degree_bound", json_bigint(degree_bound));

  for (int j = 0; j <= 5; ++j) {
    auto rep = check_global_minimality(weierstrass_model(par, SurfaceId::ej(j)));
    env.checks.push_back({"minimal-E" + std::to_string(j), "model/global-minimality",
                          json_bool(true), json_bool(rep.minimal), rep.minimal});
    auto at_inf = tate_at_place(weierstrass_model(par, SurfaceId::ej(j)), Place::infinity());
    auto partner = tate_at_place(weierstrass_model(par, SurfaceId::ej(infinity_partner(j))),
                                 Place::at(Poly::t(par.base)));
    bool pairing_ok = (at_inf.has_value() == partner.has_value()) &&
                      (!at_inf || at_inf->type == partner->type);
    env.checks.push_back({"infinity-chart-E" + std::to_string(j) + "-matches-E" +
                              std::to_string(infinity_partner(j)),
                          "model/infinity-chart", json_bool(true), json_bool(pairing_ok),
                          pairing_ok});
  }
  for (unsigned nn : {1u, 2u, 3u}) {
    auto model = weierstrass_model(par, SurfaceId::k6n(nn));
    auto rep = check_global_minimality(model);
    env.checks.push_back({"minimal-K" + std::to_string(6 * nn), "model/global-minimality",
                          json_bool(true), json_bool(rep.minimal), rep.minimal});
    auto cfg_rep = fiber_configuration(model, "K" + std::to_string(6 * nn));
    bool genus_ok = cfg_rep.chi == static_cast<int>(2 * nn) &&
                    cfg_rep.euler_sum == static_cast<long>(24 * nn);
    env.checks.push_back({"arithmetic-genus-K" + std::to_string(6 * nn), "k6n/arithmetic-genus",
                          json_int(2 * nn), json_int(cfg_rep.chi), genus_ok});
  }
  return env;
}

ReportEnvelope cmd_relations(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "relations";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  RelationReport rel = verify_relations(par);
  env.checks.push_back({"P0+P1+P2=O", "relations/triple-sum", json_bool(true),
                        json_bool(rel.p_relation), rel.p_relation});
  env.checks.push_back({"Q0+Q1+Q2=O", "relations/triple-sum", json_bool(true),
                        json_bool(rel.q_relation), rel.q_relation});
  return env;
}

ReportEnvelope cmd_torsion(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "torsion";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);
  const unsigned n = env.config.n;

  auto zero = kummer_zero_section(par, SurfaceId::k6n(n));
  Section zero_img = phi_section(par, n, zero);
  env.checks.push_back({"zero-section-maps-to-O", "iso/zero-section", json_bool(true),
                        json_bool(zero_img.is_zero()), zero_img.is_zero()});

  auto tors = kummer_torsion_sections(par);
  auto model_ctx = make_height_context(weierstrass_model_ext(par, SurfaceId::k6n(n)));
  int idx = 0;
  std::array<Section, 2> images = {Section{}, Section{}};
  for (const auto& ts : tors) {
    ++idx;
    Section img = phi_section(par, n, ts);
    images[idx - 1] = img;
    std::string nm = "torsion-" + std::to_string(idx);
    bool nonzero = !img.is_zero() && !scalar_mul(2, img).is_zero();
    bool order3 = scalar_mul(3, img).is_zero();
    env.checks.push_back({nm + "-order-3", "torsion-sections/order", json_bool(true),
                          json_bool(order3 && nonzero), order3 && nonzero});
    TorsionInfo ti = is_torsion(model_ctx, img);
    env.checks.push_back({nm + "-height-0", "artifact-derived", json_bool(true),
                          json_bool(ti.torsion && ti.order == 3), ti.torsion && ti.order == 3});
  }
  bool negatives = images[1] == neg(images[0]);
  env.checks.push_back({"torsion-sections-are-negatives", "artifact-derived", json_bool(true),
                        json_bool(negatives), negatives});
  return env;
}

ReportEnvelope cmd_search(const RunConfig& cfg) {
  ReportEnvelope env;
  env.command = "search";
  env.config = cfg;
  resolve_prime_power(env.config);
  FamilyParams par = params_from_config(env.config);

  const bool k2 = env.config.surface == "k2";
  if (!k2 && env.config.surface != "k6n" && env.config.surface != "k6")
    throw std::invalid_argument("surface must be k2 or k6n");
  SearchSpec spec;
  spec.surface = kummer_surface(par, k2 ? SurfaceId::k2() : SurfaceId::k6n(env.config.n));
  spec.field = par.base;
  spec.max_degree = env.config.max_deg;
  spec.rational = env.config.rational_search;
  spec.cap = env.config.cap;
  spec.jobs = env.config.jobs;

  SearchResult res = search_sections(spec);
  std::vector<std::string> found;
  for (const auto& [x0, x1] : res.found)
    found.push_back(json_str("(" + x0.str() + ", " + x1.str() + ")"));

  if (par.b_is_cube) {
    // control case: the constant sections (cbrt(b) omega^i, cbrt(b) omega^j)
    // are forced; check all nine are found
    auto roots = cube_roots(par.b);
    bool all_found = true;
    for (const auto& r0 : roots)
      for (const auto& r1 : roots) {
        RatFunc c0 = RatFunc::constant(r0), c1 = RatFunc::constant(r1);
        bool present = std::any_of(res.found.begin(), res.found.end(), [&](const auto& pr) {
          return pr.first == c0 && pr.second == c1;
        });
        all_found = all_found && present;
      }
    env.checks.push_back({"constant-sections-found", "relaxed-control/constant-sections",
                          json_int(9), json_int(static_cast<long long>(res.found.size())),
                          all_found});
  } else if (k2) {
    env.checks.push_back({"no-affine-section", "corollary/k2-no-section", json_int(0),
                          json_int(static_cast<long long>(res.found.size())),
                          res.found.empty() && res.exhausted});
  } else if (env.config.n == 1) {
    env.checks.push_back({"no-affine-section", "theorem/mw-k6", json_int(0),
                          json_int(static_cast<long long>(res.found.size())),
                          res.found.empty() && res.exhausted});
  } else {
    // Problem-1 territory: report evidence only, never an answer
    env.checks.push_back({"sections-found-within-bound", "problem-1/evidence",
                          json_str("open question; evidence only"),
                          json_int(static_cast<long long>(res.found.size())), true});
  }
  env.checks.push_back({"exhausted-within-bound", "artifact-derived", json_bool(true),
                        json_bool(res.exhausted), res.exhausted});
  env.extra.emplace_back("family", json_str(res.family));
  env.extra.emplace_back("family_space", json_bigint(res.family_space));
  env.extra.emplace_back("nominal_space", json_bigint(res.nominal_space));
  env.extra.emplace_back("found", json_list(found));
  env.note = "elapsed: " + std::to_string(res.elapsed_seconds) + " s";
  return env;
}

}  // namespace kuwata
