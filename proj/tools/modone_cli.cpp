// Command-line front end: worksheet reproduction, experiment runner and
// quick access to the individual statistics.
//
// Exit codes: 0 success / match, 1 usage or config error, 2 acceptance
// mismatch, 3 resource limit.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modone/modone.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

struct CommonOpts {
  std::int64_t seed = 1;
  std::string out = ".";
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--format", o.format, "csv|json");
}

void apply_common(modone::Config& cfg, const CommonOpts& o) {
  cfg.set("seed", std::to_string(o.seed));
  cfg.set("out_dir", o.out);
  cfg.set("format", o.format);
}

int run_and_report(const modone::Config& cfg) {
  const auto files = modone::run_experiment(cfg);
  for (const auto& f : files) std::cout << "wrote " << f << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local statistics of sequences mod one and their limit laws"};
  app.require_subcommand(1);

  // repro-maple
  auto* repro = app.add_subcommand("repro-maple", "reproduce the sqrt(m sqrt 2) gap worksheet");
  std::int64_t repro_n = 6001;
  repro->add_option("--n", repro_n, "number of points (default 6001)");

  // run <config>
  auto* run = app.add_subcommand("run", "run an experiment from a key=value config file");
  std::string config_path;
  run->add_option("config", config_path, "config file")->required();
  CommonOpts run_opts;
  std::string run_out;  // only override when given
  run->add_option("--seed", run_opts.seed, "random seed override");
  run->add_option("--out", run_out, "output directory override");
  run->add_option("--format", run_opts.format, "csv|json");

  // gaps
  auto* gaps = app.add_subcommand("gaps", "gap histogram of a generated sequence");
  std::string gaps_gen = "sqrt", gaps_alpha = "sqrt2", gaps_conv = "open-chain";
  std::int64_t gaps_n = 6001, gaps_bins = 35;
  double gaps_width = 0.2;
  CommonOpts gaps_opts;
  gaps->add_option("--generator", gaps_gen, "malpha|sqrt|iid");
  gaps->add_option("--alpha", gaps_alpha, "alpha (number, sqrt2, golden)");
  gaps->add_option("--n", gaps_n, "number of points");
  gaps->add_option("--convention", gaps_conv, "circular|open-chain");
  gaps->add_option("--bin-width", gaps_width, "histogram bin width");
  gaps->add_option("--bins", gaps_bins, "number of bins");
  add_common(gaps, gaps_opts);

  // ekl (empirical)
  auto* ekl = app.add_subcommand("ekl", "empirical E_N(k, L) for frac(m alpha)");
  std::int64_t ekl_n = 2000, ekl_draws = 10000;
  double ekl_L = 1.0;
  std::string ekl_x0;
  CommonOpts ekl_opts;
  ekl->add_option("--n", ekl_n, "points per draw");
  ekl->add_option("--L", ekl_L, "window length in mean spacings");
  ekl->add_option("--draws", ekl_draws, "number of (alpha, x0) draws");
  ekl->add_option("--x0", ekl_x0, "fix the window center (number or sqrt3-1)");
  add_common(ekl, ekl_opts);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Monte-Carlo limit law E(k, L) via Haar sampling");
  std::string oracle_psi = "rectangle";
  double oracle_L = 1.0;
  std::int64_t oracle_samples = 1000000, oracle_kmax = 10;
  CommonOpts oracle_opts;
  oracle->add_option("--psi", oracle_psi, "rectangle|triangle");
  oracle->add_option("--L", oracle_L, "window length");
  oracle->add_option("--samples", oracle_samples, "Haar samples");
  oracle->add_option("--kmax", oracle_kmax, "largest k reported even if empty");
  add_common(oracle, oracle_opts);

  // dioph
  auto* dioph = app.add_subcommand("dioph", "diophantine type profile and singular average");
  std::string dioph_alpha = "sqrt2";
  std::int64_t dioph_qmax = 100000, dioph_n = 1000000;
  double dioph_beta = 0.5;
  CommonOpts dioph_opts;
  dioph->add_option("--alpha", dioph_alpha, "alpha (number, sqrt2, golden)");
  dioph->add_option("--qmax", dioph_qmax, "largest denominator scanned");
  dioph->add_option("--beta", dioph_beta, "singularity exponent");
  dioph->add_option("--n", dioph_n, "terms in the singular average");
  add_common(dioph, dioph_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (repro->parsed()) {
      const modone::MapleReproResult res = modone::repro_maple(repro_n);
      std::cout << res.report;
      std::cout << (res.match ? "MATCH" : "MISMATCH") << "\n";
      return res.match ? kExitOk : kExitMismatch;
    }

    modone::Config cfg;
    if (run->parsed()) {
      cfg = modone::Config::parse_file(config_path);
      if (run->count("--seed") > 0) cfg.set("seed", std::to_string(run_opts.seed));
      if (!run_out.empty()) cfg.set("out_dir", run_out);
      if (run->count("--format") > 0) cfg.set("format", run_opts.format);
      return run_and_report(cfg);
    }
    if (gaps->parsed()) {
      cfg.set("experiment", "gaps");
      cfg.set("generator", gaps_gen);
      cfg.set("alpha", gaps_alpha);
      cfg.set("n", std::to_string(gaps_n));
      cfg.set("convention", gaps_conv);
      cfg.set("bin_width", modone::format_sig12(gaps_width));
      cfg.set("bins", std::to_string(gaps_bins));
      apply_common(cfg, gaps_opts);
      return run_and_report(cfg);
    }
    if (ekl->parsed()) {
      cfg.set("experiment", "ekl-empirical");
      cfg.set("n", std::to_string(ekl_n));
      cfg.set("L", modone::format_sig12(ekl_L));
      cfg.set("draws", std::to_string(ekl_draws));
      if (!ekl_x0.empty()) cfg.set("x0", ekl_x0);
      apply_common(cfg, ekl_opts);
      return run_and_report(cfg);
    }
    if (oracle->parsed()) {
      cfg.set("experiment", "ekl-oracle");
      cfg.set("psi", oracle_psi);
      cfg.set("L", modone::format_sig12(oracle_L));
      cfg.set("samples", std::to_string(oracle_samples));
      cfg.set("k_max", std::to_string(oracle_kmax));
      apply_common(cfg, oracle_opts);
      return run_and_report(cfg);
    }
    if (dioph->parsed()) {
      cfg.set("experiment", "dioph");
      cfg.set("alpha", dioph_alpha);
      cfg.set("q_max", std::to_string(dioph_qmax));
      cfg.set("beta", modone::format_sig12(dioph_beta));
      cfg.set("n", std::to_string(dioph_n));
      apply_common(cfg, dioph_opts);
      return run_and_report(cfg);
    }
  } catch (const modone::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
