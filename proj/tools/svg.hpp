#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fxpca/experiments.hpp"

namespace fxpca::cli {

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Minimal line plot, one polyline per series. Convenience rendering only;
/// the CSVs are the normative output.
void svg_line_plot(const std::filesystem::path& path, const std::string& title,
                   const std::vector<SvgSeries>& series);

/// One box per labelled five-number summary.
void svg_box_plot(const std::filesystem::path& path, const std::string& title,
                  const std::vector<std::pair<std::string, FiveNumber>>& boxes);

}  // namespace fxpca::cli
