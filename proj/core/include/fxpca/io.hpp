#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fxpca/polar.hpp"

namespace fxpca {

/// Reads a rectangular numeric CSV into a FunctionalSample (row = one curve
/// unless transpose is set). Raises DataError naming the offending (1-based)
/// row/column for ragged bodies and non-numeric cells, and for empty files.
FunctionalSample ingest_csv(const std::filesystem::path& path, bool has_header,
                            bool transpose, double grid_weight = 1.0);

/// Writes the sample as plain CSV, 17 significant digits, LF newlines, no
/// header: ingest_csv(emit) round-trips finite doubles exactly.
void emit_sample_csv(const std::filesystem::path& path, const FunctionalSample& sample);

/// Shortest-round-trip style formatting used for every CSV cell ("%.17g").
std::string format_double(double value);

/// Minimal CSV table writer: one header row then data rows, LF newlines.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void add_row(std::vector<std::string> cells);
  void write(const std::filesystem::path& path) const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace fxpca
