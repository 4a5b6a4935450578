#include "app.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "fxpca/bounds.hpp"
#include "fxpca/covariance.hpp"
#include "fxpca/diagnostics.hpp"
#include "fxpca/experiments.hpp"
#include "fxpca/io.hpp"
#include "fxpca/simulate.hpp"
#include "svg.hpp"

namespace fs = std::filesystem;

namespace fxpca::cli {

namespace {

constexpr const char* kRngVersion = "splitmix64-counter-v1";

std::string fmt(double v) { return format_double(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return fs::path(cfg.out_dir) / name;
}

void write_manifest(const RunConfig& cfg, std::map<std::string, std::string> entries) {
  entries["command"] = cfg.command;
  entries["out"] = cfg.out_dir;
  entries["rng"] = kRngVersion;
  std::ofstream out(out_path(cfg, "run-manifest.txt"), std::ios::binary);
  if (!out) throw DataError("cannot write run manifest under " + cfg.out_dir);
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
}

std::map<std::string, std::string> ingest_entries(const RunConfig& cfg) {
  return {{"input", cfg.input},
          {"header", cfg.has_header ? "true" : "false"},
          {"transpose", cfg.transpose ? "true" : "false"},
          {"sqrt", cfg.sqrt_transform ? "true" : "false"},
          {"grid_weight", fmt(cfg.grid_weight)}};
}

// Radii of an ingested sample.
std::vector<double> load_radii(const RunConfig& cfg, PolarSample* polar_out = nullptr) {
  const FunctionalSample sample = load_sample(cfg);
  PolarSample polar = polar_decompose(sample);
  std::vector<double> radii = polar.radii;
  if (polar_out) *polar_out = std::move(polar);
  return radii;
}

std::pair<std::size_t, std::size_t> k_range(const RunConfig& cfg) {
  if (cfg.k_min > 0 || cfg.k_max > 0) {
    if (cfg.k_min < 1 || cfg.k_max < cfg.k_min)
      throw DomainError("require 1 <= k-min <= k-max");
    return {cfg.k_min, cfg.k_max};
  }
  return {cfg.k, cfg.k};
}

void cmd_simulate(const RunConfig& cfg) {
  const std::string model = canonical_model(cfg.model);
  auto entries = std::map<std::string, std::string>{
      {"model", model}, {"n", fmt(cfg.n)}, {"seed", fmt(cfg.seed)}};
  if (model == "mult6") {
    const MultiplicativeModel m = six_factor_sine_model(cfg.d);
    entries["d"] = fmt(cfg.d);
    emit_sample_csv(out_path(cfg, "sample.csv"), sample_multiplicative(m, cfg.n, cfg.seed));
  } else if (model == "mix1" || model == "mix2") {
    MixtureModel m;
    m.alpha = cfg.alpha;
    m.weight_exponent = model == "mix1" ? 1 : 2;
    m.d_trunc = cfg.d;
    const MixtureDraws draws = sample_mixture(m, cfg.n, cfg.seed);
    emit_sample_csv(out_path(cfg, "sample.csv"), draws.sample);
    CsvWriter aux({"row", "index", "escaped"});
    for (std::size_t i = 0; i < cfg.n; ++i)
      aux.add_row({fmt(i + 1), std::to_string(draws.angle_index[i]),
                   draws.escaped[i] ? "1" : "0"});
    aux.write(out_path(cfg, "mixture_indices.csv"));
    entries["alpha"] = fmt(cfg.alpha);
    entries["d"] = fmt(cfg.d);
  } else {  // spiked
    SpikedProcessModel m;
    m.alpha_z = cfg.alpha_z;
    m.alpha_rho = cfg.alpha_rho;
    m.grid_size = cfg.d;
    const SpikedDraws draws = sample_spiked(m, cfg.n, cfg.seed);
    emit_sample_csv(out_path(cfg, "sample.csv"), draws.sample);
    CsvWriter aux({"row", "sup_norm", "l2_norm"});
    for (std::size_t i = 0; i < cfg.n; ++i)
      aux.add_row({fmt(i + 1), fmt(draws.sup_norm[i]), fmt(draws.l2_norm[i])});
    aux.write(out_path(cfg, "spiked_norms.csv"));
    entries["alpha_z"] = fmt(cfg.alpha_z);
    entries["alpha_rho"] = fmt(cfg.alpha_rho);
    entries["d"] = fmt(cfg.d);
  }
  write_manifest(cfg, std::move(entries));
}

void cmd_hill(const RunConfig& cfg) {
  const std::vector<double> radii = load_radii(cfg);
  const auto [lo, hi] = k_range(cfg);
  CsvWriter csv({"k", "value", "ci_low", "ci_high"});
  const auto series = hill_plot(radii, lo, hi, cfg.ci_level);
  for (const HillResult& h : series)
    csv.add_row({fmt(h.k), fmt(h.alpha_hat), fmt(h.alpha_ci_low), fmt(h.alpha_ci_high)});
  csv.write(out_path(cfg, "hill.csv"));
  if (cfg.svg) {
    SvgSeries est{"alpha_hat", {}, {}}, low{"ci_low", {}, {}}, high{"ci_high", {}, {}};
    for (const HillResult& h : series) {
      est.x.push_back(static_cast<double>(h.k));
      est.y.push_back(h.alpha_hat);
      low.x.push_back(static_cast<double>(h.k));
      low.y.push_back(h.alpha_ci_low);
      high.x.push_back(static_cast<double>(h.k));
      high.y.push_back(h.alpha_ci_high);
    }
    svg_line_plot(out_path(cfg, "hill.svg"), "Hill plot", {est, low, high});
  }
  auto entries = ingest_entries(cfg);
  entries["k_min"] = fmt(lo);
  entries["k_max"] = fmt(hi);
  entries["ci"] = fmt(cfg.ci_level);
  write_manifest(cfg, std::move(entries));
}

void cmd_pareto_qq(const RunConfig& cfg) {
  const std::vector<double> radii = load_radii(cfg);
  const ParetoQq qq = pareto_qq(radii, cfg.k);
  CsvWriter points({"i", "theoretical_quantile", "log_radius"});
  for (const auto& pt : qq.points)
    points.add_row({fmt(pt.rank), fmt(pt.theoretical), fmt(pt.log_radius)});
  points.write(out_path(cfg, "pareto_qq.csv"));
  CsvWriter fit({"slope", "intercept", "degenerate"});
  fit.add_row({fmt(qq.slope), fmt(qq.intercept), qq.degenerate ? "1" : "0"});
  fit.write(out_path(cfg, "pareto_qq_fit.csv"));
  auto entries = ingest_entries(cfg);
  entries["k"] = fmt(cfg.k);
  write_manifest(cfg, std::move(entries));
}

void cmd_moments(const RunConfig& cfg) {
  const FunctionalSample sample = load_sample(cfg);
  const PolarSample polar = polar_decompose(sample);
  const auto [lo, hi] = k_range(cfg);
  const auto hs = default_test_functions(sample.d);
  std::vector<SvgSeries> svg_series;
  for (std::size_t fn = 0; fn < hs.size(); ++fn) {
    const int j = kTestFunctionFrequencies[fn];
    CsvWriter csv({"k", "value"});
    SvgSeries line{"j=" + std::to_string(j), {}, {}};
    for (const auto& pt : moment_stability(polar, hs[fn], lo, hi)) {
      csv.add_row({fmt(pt.k), fmt(pt.value)});
      line.x.push_back(static_cast<double>(pt.k));
      line.y.push_back(pt.value);
    }
    csv.write(out_path(cfg, "moments_j" + std::to_string(j) + ".csv"));
    svg_series.push_back(std::move(line));
  }
  if (cfg.svg)
    svg_line_plot(out_path(cfg, "moments.svg"), "Conditional first moments", svg_series);
  auto entries = ingest_entries(cfg);
  entries["k_min"] = fmt(lo);
  entries["k_max"] = fmt(hi);
  write_manifest(cfg, std::move(entries));
}

void cmd_pca(const RunConfig& cfg) {
  const FunctionalSample sample = load_sample(cfg);
  const PolarSample polar = polar_decompose(sample);
  const CovarianceEstimate cov = empirical_extreme_cov(polar, cfg.k);
  const EigenSystem es = symmetric_eigen(cov.op);
  if (cfg.p < 1 || cfg.p >= sample.d) throw DomainError("pca: require 1 <= p < d");

  CsvWriter values({"j", "eigenvalue"});
  for (std::size_t j = 0; j < sample.d; ++j) values.add_row({fmt(j + 1), fmt(es.eigenvalue(j))});
  values.write(out_path(cfg, "eigenvalues.csv"));

  // Eigenvectors are orthonormal coordinates; rescale to unit-L2 functions.
  std::vector<std::string> cols;
  for (std::size_t j = 1; j <= cfg.p; ++j) cols.push_back("phi_" + std::to_string(j));
  CsvWriter funcs(cols);
  const double inv_sw = 1.0 / std::sqrt(sample.grid_weight);
  for (std::size_t r = 0; r < sample.d; ++r) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < cfg.p; ++j) row.push_back(fmt(inv_sw * es.eigenvector(j)[r]));
    funcs.add_row(std::move(row));
  }
  funcs.write(out_path(cfg, "eigenfunctions.csv"));

  auto entries = ingest_entries(cfg);
  entries["k"] = fmt(cfg.k);
  entries["p"] = fmt(cfg.p);
  write_manifest(cfg, std::move(entries));
}

void cmd_scree(const RunConfig& cfg) {
  const FunctionalSample sample = load_sample(cfg);
  const PolarSample polar = polar_decompose(sample);
  const ScreeComparison cmp = scree_comparison(polar, cfg.k);
  CsvWriter csv({"j", "extreme", "full"});
  SvgSeries se{"extreme", {}, {}}, sf{"full", {}, {}};
  for (std::size_t j = 0; j < cmp.extreme.size(); ++j) {
    csv.add_row({fmt(j + 1), fmt(cmp.extreme[j]), fmt(cmp.full[j])});
    se.x.push_back(static_cast<double>(j + 1));
    se.y.push_back(cmp.extreme[j]);
    sf.x.push_back(static_cast<double>(j + 1));
    sf.y.push_back(cmp.full[j]);
  }
  csv.write(out_path(cfg, "scree.csv"));
  if (cfg.svg) svg_line_plot(out_path(cfg, "scree.svg"), "Scree comparison", {se, sf});
  auto entries = ingest_entries(cfg);
  entries["k"] = fmt(cfg.k);
  write_manifest(cfg, std::move(entries));
}

void cmd_bounds(const RunConfig& cfg) {
  BoundReport report = bound_total(cfg.n, cfg.k, cfg.delta);
  if (cfg.eigen_gap) eigenspace_bound(report, *cfg.eigen_gap);
  CsvWriter csv({"n", "k", "delta", "b_prop41", "b_prop42", "b_total", "eigen_gap",
                 "rho_bound"});
  csv.add_row({fmt(report.n), fmt(report.k), fmt(report.delta), fmt(report.b_prop41),
               fmt(report.b_prop42), fmt(report.b_total),
               report.eigen_gap ? fmt(*report.eigen_gap) : "",
               report.rho_bound ? fmt(*report.rho_bound) : ""});
  csv.write(out_path(cfg, "bounds.csv"));
  std::cout << "b_total=" << fmt(report.b_total) << '\n';
  auto entries = std::map<std::string, std::string>{
      {"n", fmt(cfg.n)}, {"k", fmt(cfg.k)}, {"delta", fmt(cfg.delta)}};
  if (cfg.eigen_gap) entries["gap"] = fmt(*cfg.eigen_gap);
  write_manifest(cfg, std::move(entries));
}

void cmd_recovery(const RunConfig& cfg) {
  const MultiplicativeModel model = six_factor_sine_model(cfg.d);
  const FunctionalSample sample = sample_multiplicative(model, cfg.n, cfg.seed);
  const PolarSample polar = polar_decompose(sample);
  const auto curves = six_factor_unit_curves(cfg.d);
  const Subspace target =
      Subspace::from_curves({curves[0], curves[1]}, model.grid_weight);
  const double rho_extreme = eigenfunction_recovery(polar, cfg.k, cfg.p, target);
  const LeadingSubspace full = leading_subspace(empirical_full_cov(polar), cfg.p);
  const double rho_full = rho_distance(full.subspace, target);
  CsvWriter csv({"k", "rho_extreme", "rho_full"});
  csv.add_row({fmt(cfg.k), fmt(rho_extreme), fmt(rho_full)});
  csv.write(out_path(cfg, "recovery.csv"));
  write_manifest(cfg, {{"model", "mult6"},
                       {"n", fmt(cfg.n)},
                       {"d", fmt(cfg.d)},
                       {"k", fmt(cfg.k)},
                       {"p", fmt(cfg.p)},
                       {"seed", fmt(cfg.seed)}});
}

void cmd_reconstruct_cv(const RunConfig& cfg) {
  PolarSample polar;
  auto entries = std::map<std::string, std::string>();
  if (!cfg.input.empty()) {
    load_radii(cfg, &polar);
    entries = ingest_entries(cfg);
  } else {
    const MultiplicativeModel model = six_factor_sine_model(cfg.d);
    polar = polar_decompose(sample_multiplicative(model, cfg.n, cfg.seed));
    entries["model"] = "mult6";
    entries["n"] = fmt(cfg.n);
    entries["d"] = fmt(cfg.d);
  }
  CvConfig cv;
  cv.k = cfg.k;
  cv.p = cfg.p;
  cv.v = cfg.v;
  cv.reps = cfg.reps;
  if (cfg.cv_mode == "random") {
    cv.mode = CvMode::RandomCv;
  } else if (cfg.cv_mode == "tail") {
    cv.mode = CvMode::TailHoldout;
  } else {
    throw DomainError("mode must be 'random' or 'tail'");
  }
  cv.seed = cfg.seed;
  const CvResult result = reconstruction_cv(polar, cv);

  CsvWriter errors({"rep", "variant", "error"});
  for (std::size_t variant = 0; variant < 3; ++variant)
    for (std::size_t rep = 0; rep < cfg.reps; ++rep)
      errors.add_row({fmt(rep + 1), CvResult::variant_names[variant],
                      fmt(result.errors[variant][rep])});
  errors.write(out_path(cfg, "cv_errors.csv"));

  CsvWriter summary({"variant", "min", "q1", "median", "q3", "max"});
  std::vector<std::pair<std::string, FiveNumber>> boxes;
  for (std::size_t variant = 0; variant < 3; ++variant) {
    const FiveNumber f = five_number_summary(result.errors[variant]);
    summary.add_row({CvResult::variant_names[variant], fmt(f.min), fmt(f.q1), fmt(f.median),
                     fmt(f.q3), fmt(f.max)});
    boxes.emplace_back(CvResult::variant_names[variant], f);
  }
  summary.write(out_path(cfg, "cv_summary.csv"));
  if (cfg.svg)
    svg_box_plot(out_path(cfg, "cv_boxplot.svg"), "Validation reconstruction error", boxes);

  entries["k"] = fmt(cfg.k);
  entries["p"] = fmt(cfg.p);
  entries["v"] = fmt(cfg.v);
  entries["reps"] = fmt(cfg.reps);
  entries["mode"] = cfg.cv_mode;
  entries["seed"] = fmt(cfg.seed);
  write_manifest(cfg, std::move(entries));
}

void cmd_tail_mass(const RunConfig& cfg) {
  PolarSample polar;
  auto entries = std::map<std::string, std::string>();
  if (!cfg.input.empty()) {
    load_radii(cfg, &polar);
    entries = ingest_entries(cfg);
  } else {
    const std::string model = canonical_model(cfg.model.empty() ? "mix1" : cfg.model);
    if (model != "mix1" && model != "mix2")
      throw DomainError("tail-mass simulation supports the mixture models only");
    MixtureModel m;
    m.alpha = cfg.alpha;
    m.weight_exponent = model == "mix1" ? 1 : 2;
    m.d_trunc = cfg.d;
    polar = polar_decompose(sample_mixture(m, cfg.n, cfg.seed).sample);
    entries["model"] = model;
    entries["alpha"] = fmt(cfg.alpha);
    entries["n"] = fmt(cfg.n);
    entries["d"] = fmt(cfg.d);
    entries["seed"] = fmt(cfg.seed);
  }
  const auto [lo, hi] = k_range(cfg);
  CsvWriter csv({"k", "value"});
  SvgSeries line{"mass beyond d_cut", {}, {}};
  for (std::size_t k = lo; k <= hi; ++k) {
    const double value = tail_mass_beyond(polar, cfg.d_cut, k);
    csv.add_row({fmt(k), fmt(value)});
    line.x.push_back(static_cast<double>(k));
    line.y.push_back(value);
  }
  csv.write(out_path(cfg, "tail_mass.csv"));
  if (cfg.svg) svg_line_plot(out_path(cfg, "tail_mass.svg"), "Escaping angular mass", {line});
  entries["d_cut"] = fmt(cfg.d_cut);
  entries["k_min"] = fmt(lo);
  entries["k_max"] = fmt(hi);
  write_manifest(cfg, std::move(entries));
}

}  // namespace

std::string canonical_model(const std::string& name) {
  if (name == "mult6" || name == "example1" || name == "multiplicative") return "mult6";
  if (name == "mix1" || name == "propce") return "mix1";
  if (name == "mix2" || name == "example3") return "mix2";
  if (name == "spiked") return "spiked";
  throw DomainError("unknown model '" + name + "' (expected mult6, mix1, mix2 or spiked)");
}

FunctionalSample load_sample(const RunConfig& cfg) {
  if (cfg.input.empty()) throw DomainError("this command requires --input");
  FunctionalSample sample =
      ingest_csv(cfg.input, cfg.has_header, cfg.transpose, cfg.grid_weight);
  if (cfg.sqrt_transform) sample = sqrt_transform(sample);
  return sample;
}

void run_command(const RunConfig& cfg) {
  if (cfg.command == "simulate") return cmd_simulate(cfg);
  if (cfg.command == "hill") return cmd_hill(cfg);
  if (cfg.command == "pareto-qq") return cmd_pareto_qq(cfg);
  if (cfg.command == "moments") return cmd_moments(cfg);
  if (cfg.command == "pca") return cmd_pca(cfg);
  if (cfg.command == "scree") return cmd_scree(cfg);
  if (cfg.command == "bounds") return cmd_bounds(cfg);
  if (cfg.command == "recovery") return cmd_recovery(cfg);
  if (cfg.command == "reconstruct-cv") return cmd_reconstruct_cv(cfg);
  if (cfg.command == "tail-mass") return cmd_tail_mass(cfg);
  throw DomainError("unknown command '" + cfg.command + "'");
}

}  // namespace fxpca::cli
