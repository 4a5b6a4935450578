#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "fxpca/errors.hpp"
#include "fxpca/io.hpp"

namespace fxpca::cli {

namespace {

constexpr double kWidth = 640.0, kHeight = 400.0, kPad = 48.0;
constexpr const char* kColors[] = {"#1b6ca8", "#c0392b", "#27ae60", "#8e44ad",
                                   "#d35400", "#16a085"};

std::ofstream open_svg(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file: " + path.string());
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  return out;
}

void close_svg(std::ofstream& out) { out << "</svg>\n"; }

void title_text(std::ofstream& out, const std::string& title) {
  out << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
}

}  // namespace

void svg_line_plot(const std::filesystem::path& path, const std::string& title,
                   const std::vector<SvgSeries>& series) {
  if (series.empty()) throw DomainError("svg_line_plot: no series");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (double v : s.x) {
      xmin = std::min(xmin, v);
      xmax = std::max(xmax, v);
    }
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  auto px = [&](double x) {
    return kPad + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kPad);
  };
  auto py = [&](double y) {
    return kHeight - kPad - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kPad);
  };

  std::ofstream out = open_svg(path);
  title_text(out, title);
  out << "<rect x=\"" << kPad << "\" y=\"" << kPad << "\" width=\"" << kWidth - 2 * kPad
      << "\" height=\"" << kHeight - 2 * kPad
      << "\" fill=\"none\" stroke=\"#666\" stroke-width=\"1\"/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    out << "<polyline fill=\"none\" stroke=\"" << kColors[s % 6]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[s].x.size(); ++i)
      out << format_double(px(series[s].x[i])) << ',' << format_double(py(series[s].y[i]))
          << ' ';
    out << "\"/>\n";
    out << "<text x=\"" << kPad + 6 << "\" y=\"" << kPad + 16 + 16 * s << "\" fill=\""
        << kColors[s % 6] << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << series[s].label << "</text>\n";
  }
  close_svg(out);
}

void svg_box_plot(const std::filesystem::path& path, const std::string& title,
                  const std::vector<std::pair<std::string, FiveNumber>>& boxes) {
  if (boxes.empty()) throw DomainError("svg_box_plot: no boxes");
  double ymin = 1e300, ymax = -1e300;
  for (const auto& [label, f] : boxes) {
    ymin = std::min(ymin, f.min);
    ymax = std::max(ymax, f.max);
  }
  if (ymax <= ymin) ymax = ymin + 1.0;
  auto py = [&](double y) {
    return kHeight - kPad - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kPad);
  };
  const double slot = (kWidth - 2 * kPad) / static_cast<double>(boxes.size());

  std::ofstream out = open_svg(path);
  title_text(out, title);
  for (std::size_t b = 0; b < boxes.size(); ++b) {
    const auto& [label, f] = boxes[b];
    const double cx = kPad + slot * (static_cast<double>(b) + 0.5);
    const double half = slot * 0.22;
    const char* color = kColors[b % 6];
    out << "<line x1=\"" << cx << "\" y1=\"" << py(f.min) << "\" x2=\"" << cx << "\" y2=\""
        << py(f.max) << "\" stroke=\"" << color << "\"/>\n";
    out << "<rect x=\"" << cx - half << "\" y=\"" << py(f.q3) << "\" width=\"" << 2 * half
        << "\" height=\"" << py(f.q1) - py(f.q3) << "\" fill=\"" << color
        << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\"/>\n";
    out << "<line x1=\"" << cx - half << "\" y1=\"" << py(f.median) << "\" x2=\"" << cx + half
        << "\" y2=\"" << py(f.median) << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << cx << "\" y=\"" << kHeight - kPad + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << label
        << "</text>\n";
  }
  close_svg(out);
}

}  // namespace fxpca::cli
