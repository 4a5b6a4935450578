#include "fxpca/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fxpca {

namespace {

// Strict full-cell parse of a double (leading/trailing spaces tolerated).
bool parse_cell(std::string_view cell, double& out) {
  std::size_t begin = 0;
  std::size_t end = cell.size();
  while (begin < end && (cell[begin] == ' ' || cell[begin] == '\t')) ++begin;
  while (end > begin && (cell[end - 1] == ' ' || cell[end - 1] == '\t')) --end;
  if (begin == end) return false;
  const char* first = cell.data() + begin;
  const char* last = cell.data() + end;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

FunctionalSample ingest_csv(const std::filesystem::path& path, bool has_header, bool transpose,
                            double grid_weight) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open input file: " + path.string());

  std::vector<std::vector<double>> body;
  std::string line;
  std::size_t line_number = 0;
  bool header_skipped = !has_header;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    const auto cells = split_csv_line(line);
    std::vector<double> row(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_cell(cells[c], row[c]))
        throw DataError("non-numeric cell '" + cells[c] + "' at row " +
                        std::to_string(line_number) + ", column " + std::to_string(c + 1) +
                        " of " + path.string());
    }
    if (!body.empty() && row.size() != body.front().size())
      throw DataError("ragged row " + std::to_string(line_number) + " of " + path.string() +
                      ": expected " + std::to_string(body.front().size()) + " cells, got " +
                      std::to_string(row.size()));
    body.push_back(std::move(row));
  }
  if (body.empty()) throw DataError("empty input file: " + path.string());

  FunctionalSample sample;
  const std::size_t rows = body.size();
  const std::size_t cols = body.front().size();
  if (!transpose) {
    sample.n = rows;
    sample.d = cols;
    sample.values.reserve(rows * cols);
    for (const auto& r : body) sample.values.insert(sample.values.end(), r.begin(), r.end());
  } else {
    sample.n = cols;
    sample.d = rows;
    sample.values.resize(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) sample.values[j * rows + i] = body[i][j];
  }
  sample.grid_weight = grid_weight;
  sample.validate();
  return sample;
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void emit_sample_csv(const std::filesystem::path& path, const FunctionalSample& sample) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path.string());
  for (std::size_t i = 0; i < sample.n; ++i) {
    const auto row = sample.row(i);
    for (std::size_t j = 0; j < sample.d; ++j) {
      if (j) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw DomainError("csv row width does not match the header");
  rows_.push_back(std::move(cells));
}

void CsvWriter::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path.string());
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    if (j) out << ',';
    out << columns_[j];
  }
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  if (!out) throw DataError("failed writing " + path.string());
}

}  // namespace fxpca
