#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fxpca/polar.hpp"

namespace fxpca::cli {

/// Effective settings of one CLI invocation. Flags override the optional
/// config file; every field used by a command is echoed into the run manifest.
struct RunConfig {
  std::string command;

  // Ingestion.
  std::string input;
  bool has_header = false;
  bool transpose = false;
  bool sqrt_transform = false;
  double grid_weight = 1.0;

  // Shared numeric parameters.
  std::size_t k = 100;
  std::size_t k_min = 0;  // 0 = unset; k ranges apply to hill/moments/tail-mass
  std::size_t k_max = 0;
  std::size_t p = 2;
  double delta = 0.1;
  double ci_level = 0.95;
  std::uint64_t seed = 12345;
  std::string out_dir = ".";

  // Simulation parameters.
  std::string model;  // mult6 | mix1 | mix2 | spiked (aliases accepted)
  std::size_t n = 10000;
  std::size_t d = 48;
  double alpha = 1.0;
  double alpha_z = 10.0;
  double alpha_rho = 1.0;

  // bounds.
  std::optional<double> eigen_gap;

  // reconstruct-cv.
  std::size_t v = 30;
  std::size_t reps = 300;
  std::string cv_mode = "random";  // random | tail

  // tail-mass.
  std::size_t d_cut = 20;

  // Convenience SVG rendering of the series (the CSVs stay normative).
  bool svg = false;
};

/// Executes one command; throws DomainError / DataError / DegeneracyError on
/// failure. Writes the documented CSVs plus run-manifest.txt under out_dir.
void run_command(const RunConfig& cfg);

/// Loads --input per the ingestion flags (header, transpose, grid weight,
/// square-root transform).
FunctionalSample load_sample(const RunConfig& cfg);

/// Canonical model name for an accepted alias; DomainError on unknown names.
std::string canonical_model(const std::string& name);

}  // namespace fxpca::cli
