// Command-line front end: every pipeline as a subcommand with
// machine-readable output. Exit status is 0 iff every check passes;
// check-params signals the violated hypothesis through dedicated codes.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kuwata/report.hpp"

namespace {

using kuwata::ReportEnvelope;
using kuwata::RunConfig;

void add_param_flags(CLI::App* sub, RunConfig& cfg, std::string& preset) {
  sub->add_option("--q", cfg.q, "field size q = p^k (decimal)");
  sub->add_option("--b", cfg.b, "parameter b (decimal encoding of the element)");
  sub->add_option("--c", cfg.c, "parameter c (decimal encoding of the element)");
  sub->add_flag("--relaxed", cfg.relaxed, "accept a cube b (the rank-2 scenario)");
  sub->add_option("--format", cfg.format, "output format: json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--preset", preset, "parameter preset: p7 | p13 | relaxed7");
}

int emit(const ReportEnvelope& env, const RunConfig& cfg) {
  std::cout << kuwata::render(env, cfg.format);
  for (const auto& [k, v] : env.extra)
    if (k == "exit_code") return std::stoi(v);
  return kuwata::exit_code(env);
}

void apply_preset(RunConfig& cfg, const std::string& preset) {
  if (preset.empty()) return;
  for (const auto& [name, pc] : kuwata::shipped_presets()) {
    if (name == preset) {
      cfg.q = pc.q;
      cfg.p = pc.p;
      cfg.k = pc.k;
      cfg.b = pc.b;
      cfg.c = pc.c;
      cfg.relaxed = pc.relaxed;
      return;
    }
  }
  throw CLI::ValidationError("--preset", "unknown preset: " + preset);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for the K2/K6n elliptic-surface family over F_q(t)"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string preset;
  std::string cap_str;

  auto* check = app.add_subcommand("check-params", "validate the (q, b, c) hypotheses");
  bool scan = false;
  check->add_flag("--scan", scan, "list all valid (b, c) for the given q");
  auto* table1 = app.add_subcommand("table1", "reproduce the fiber/lattice/MW/rho table");
  auto* heights = app.add_subcommand("heights", "canonical height matrices of L1 and L2");
  auto* frob = app.add_subcommand("frobenius", "Frobenius matrices and residue symbols");
  auto* rank = app.add_subcommand("rank", "Mordell-Weil rank and torsion of K6");
  auto* viso = app.add_subcommand("verify-iso", "sample the phi round trip; minimality checks");
  auto* rel = app.add_subcommand("relations", "verify the triple-sum section relations");
  auto* tors = app.add_subcommand("torsion", "order-3 sections at infinity and their images");
  auto* search = app.add_subcommand("search", "exhaustive bounded-degree section search");

  for (CLI::App* sub : {check, table1, heights, frob, rank, viso, rel, tors, search})
    add_param_flags(sub, cfg, preset);

  viso->add_option("--samples", cfg.samples, "number of sampled points");
  viso->add_option("--seed", cfg.seed, "RNG seed for the sampling oracle");
  viso->add_option("--n", cfg.n, "surface index n of K_{6n}");
  tors->add_option("--n", cfg.n, "surface index n of K_{6n}");
  search->add_option("--surface", cfg.surface, "k2 or k6n")
      ->check(CLI::IsMember({"k2", "k6", "k6n"}));
  search->add_option("--n", cfg.n, "surface index n of K_{6n}");
  search->add_option("--max-deg", cfg.max_deg, "degree bound d of the search");
  search->add_flag("--rational", cfg.rational_search,
                   "search reduced rational pairs instead of polynomial pairs");
  search->add_option("--cap", cap_str, "candidate-pair cap (decimal)");
  search->add_option("--jobs", cfg.jobs, "worker threads for the search");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_preset(cfg, preset);
    if (!cap_str.empty()) cfg.cap = kuwata::BigInt(cap_str);
    if (cfg.q == 0) {
      std::cerr << "error: --q (or --preset) is required\n";
      return 2;
    }

    if (check->parsed()) {
      if (scan) {
        kuwata::resolve_prime_power(cfg);
        auto base = kuwata::make_field(cfg.p, cfg.k);
        for (const auto& pp : kuwata::enumerate_valid_params(base, true))
          std::cout << "b=" << pp.b << " c=" << pp.c
                    << (pp.b_is_cube ? "  (relaxed only: b is a cube)" : "") << "\n";
        return 0;
      }
      return emit(kuwata::cmd_check_params(cfg), cfg);
    }
    if (table1->parsed()) return emit(kuwata::cmd_table1(cfg), cfg);
    if (heights->parsed()) return emit(kuwata::cmd_heights(cfg), cfg);
    if (frob->parsed()) return emit(kuwata::cmd_frobenius(cfg), cfg);
    if (rank->parsed()) return emit(kuwata::cmd_rank(cfg), cfg);
    if (viso->parsed()) return emit(kuwata::cmd_verify_iso(cfg), cfg);
    if (rel->parsed()) return emit(kuwata::cmd_relations(cfg), cfg);
    if (tors->parsed()) return emit(kuwata::cmd_torsion(cfg), cfg);
    if (search->parsed()) return emit(kuwata::cmd_search(cfg), cfg);
  } catch (const kuwata::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kuwata::param_exit_code(e.violation());
  } catch (const kuwata::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
