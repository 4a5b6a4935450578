#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "app.hpp"
#include "fxpca/errors.hpp"

namespace {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FXPCA_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw fxpca::DomainError("FXPCA_SEED must be an unsigned integer");
    }
  }
  return 12345;
}

void add_ingest_options(CLI::App* cmd, fxpca::cli::RunConfig& cfg, bool required = true) {
  auto* opt = cmd->add_option("--input", cfg.input, "Input CSV (one curve per row)");
  if (required) opt->required();
  cmd->add_flag("--header", cfg.has_header, "Skip a header row");
  cmd->add_flag("--transpose", cfg.transpose, "Input is one curve per column");
  cmd->add_flag("--sqrt", cfg.sqrt_transform, "Apply the entrywise square root");
  cmd->add_option("--grid-weight", cfg.grid_weight, "Quadrature weight per grid point");
}

void add_out_option(CLI::App* cmd, fxpca::cli::RunConfig& cfg, bool with_svg = false) {
  cmd->add_option("--out", cfg.out_dir, "Output directory (created if missing)");
  if (with_svg) cmd->add_flag("--svg", cfg.svg, "Also render a convenience SVG plot");
}

void add_k_range_options(CLI::App* cmd, fxpca::cli::RunConfig& cfg) {
  cmd->add_option("--k", cfg.k, "Number of extreme observations");
  cmd->add_option("--k-min", cfg.k_min, "Start of a k range (overrides --k)");
  cmd->add_option("--k-max", cfg.k_max, "End of a k range");
}

}  // namespace

int main(int argc, char** argv) {
  fxpca::cli::RunConfig cfg;
  CLI::App app{"PCA of functional extremes: simulation, diagnostics and bounds"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional key=value config file (flags take precedence)");

  try {
    cfg.seed = default_seed();
  } catch (const fxpca::DomainError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  auto* simulate = app.add_subcommand("simulate", "Draw a synthetic sample");
  simulate->add_option("--model", cfg.model, "mult6 | mix1 | mix2 | spiked")->required();
  simulate->add_option("--n", cfg.n, "Sample size");
  simulate->add_option("--d", cfg.d, "Grid / embedding dimension");
  simulate->add_option("--alpha", cfg.alpha, "Mixture tail index");
  simulate->add_option("--alpha-z", cfg.alpha_z, "Spiked model: tail index of Z");
  simulate->add_option("--alpha-rho", cfg.alpha_rho, "Spiked model: tail index of rho");
  simulate->add_option("--seed", cfg.seed, "Base seed (default env FXPCA_SEED or 12345)");
  add_out_option(simulate, cfg);

  auto* hill_cmd = app.add_subcommand("hill", "Hill estimates of the radial tail index");
  add_ingest_options(hill_cmd, cfg);
  add_k_range_options(hill_cmd, cfg);
  hill_cmd->add_option("--ci", cfg.ci_level, "Confidence level for the interval");
  add_out_option(hill_cmd, cfg, true);

  auto* qq = app.add_subcommand("pareto-qq", "Pareto quantile plot of the top radii");
  add_ingest_options(qq, cfg);
  qq->add_option("--k", cfg.k, "Number of top order statistics");
  add_out_option(qq, cfg);

  auto* moments = app.add_subcommand("moments", "Conditional first-moment stability series");
  add_ingest_options(moments, cfg);
  add_k_range_options(moments, cfg);
  add_out_option(moments, cfg, true);

  auto* pca = app.add_subcommand("pca", "Eigendecomposition of the extreme angular covariance");
  add_ingest_options(pca, cfg);
  pca->add_option("--k", cfg.k, "Number of extreme observations");
  pca->add_option("--p", cfg.p, "Eigenfunctions to export");
  add_out_option(pca, cfg);

  auto* scree = app.add_subcommand("scree", "Scree series of extreme vs full covariance");
  add_ingest_options(scree, cfg);
  scree->add_option("--k", cfg.k, "Number of extreme observations");
  add_out_option(scree, cfg, true);

  auto* bounds = app.add_subcommand("bounds", "Closed-form concentration bounds");
  bounds->add_option("--n", cfg.n, "Sample size")->required();
  bounds->add_option("--k", cfg.k, "Number of extreme observations")->required();
  bounds->add_option("--delta", cfg.delta, "Confidence parameter in (0,1)")->required();
  double gap_value = 0.0;
  auto* gap_opt = bounds->add_option("--gap", gap_value, "Empirical eigen gap g_p");
  add_out_option(bounds, cfg);

  auto* recovery = app.add_subcommand("recovery", "Eigenspace recovery on the simulated model");
  recovery->add_option("--n", cfg.n, "Sample size");
  recovery->add_option("--d", cfg.d, "Grid size");
  recovery->add_option("--k", cfg.k, "Number of extreme observations");
  recovery->add_option("--p", cfg.p, "Subspace dimension");
  recovery->add_option("--seed", cfg.seed, "Base seed");
  add_out_option(recovery, cfg);

  auto* cv = app.add_subcommand("reconstruct-cv",
                                "Three-variant reconstruction cross-validation");
  add_ingest_options(cv, cfg, /*required=*/false);
  cv->add_option("--n", cfg.n, "Sample size when simulating");
  cv->add_option("--d", cfg.d, "Grid size when simulating");
  cv->add_option("--k", cfg.k, "Number of extreme observations");
  cv->add_option("--p", cfg.p, "Subspace dimension");
  cv->add_option("--v", cfg.v, "Validation set size");
  cv->add_option("--reps", cfg.reps, "Replications");
  cv->add_option("--mode", cfg.cv_mode, "random | tail");
  cv->add_option("--seed", cfg.seed, "Base seed");
  add_out_option(cv, cfg, true);

  auto* tail = app.add_subcommand("tail-mass", "Angular mass escaping the leading axes");
  add_ingest_options(tail, cfg, /*required=*/false);
  tail->add_option("--model", cfg.model, "mix1 | mix2 when simulating");
  tail->add_option("--alpha", cfg.alpha, "Mixture tail index");
  tail->add_option("--n", cfg.n, "Sample size when simulating");
  tail->add_option("--d", cfg.d, "Embedding dimension when simulating");
  tail->add_option("--seed", cfg.seed, "Base seed");
  tail->add_option("--d-cut", cfg.d_cut, "Leading axes kept")->required();
  add_k_range_options(tail, cfg);
  add_out_option(tail, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (gap_opt->count() > 0) cfg.eigen_gap = gap_value;
    fxpca::cli::run_command(cfg);
  } catch (const fxpca::DomainError& e) {
    std::cerr << "error: usage: " << e.what() << '\n';
    return 2;
  } catch (const fxpca::DataError& e) {
    std::cerr << "error: data: " << e.what() << '\n';
    return 3;
  } catch (const fxpca::DegeneracyError& e) {
    std::cerr << "error: degeneracy: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
