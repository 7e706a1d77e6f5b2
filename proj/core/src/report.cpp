// Copyright 2026 The ccopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ccopt/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ccopt/errors.hpp"

namespace ccopt {

std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, end);
}

namespace {

std::string csv_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else if (c == '\n' || c == '\r') out += ' ';
    else out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw std::runtime_error("study csv: unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

double parse_real(const std::string& text) {
  if (text.empty()) return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("study csv: bad real '" + text + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& text) {
  if (text.empty()) return 0;
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::runtime_error("study csv: bad integer '" + text + "'");
  }
  return value;
}

}  // namespace

void write_study_csv(std::ostream& out, const StudyResult& result) {
  out << "trial,failed";
  for (std::size_t i = 1; i <= result.dimension; ++i) out << ",u_" << i;
  out << ",cost,oracle_v_hat,oracle_violations,oracle_n,failure\n";
  for (const auto& row : result.rows) {
    out << row.trial << ',' << (row.failed ? 1 : 0);
    if (row.failed) {
      for (std::size_t i = 0; i < result.dimension; ++i) out << ',';
      out << ",,,,," << csv_quote(row.failure) << '\n';
      continue;
    }
    for (double x : row.point.coords()) out << ',' << format_real(x);
    out << ',' << format_real(row.cost) << ',' << format_real(row.oracle.v_hat) << ','
        << row.oracle.violations << ',' << row.oracle.sample_count << ",\n";
  }
}

void emit_csv(const StudyResult& result, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_study_csv(out, result);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<TrialRow> parse_study_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("study csv: missing header");
  const auto header = split_csv_line(line);
  if (header.size() < 7 || header[0] != "trial" || header[1] != "failed") {
    throw std::runtime_error("study csv: unexpected header");
  }
  const std::size_t dim = header.size() - 7;
  std::vector<TrialRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != header.size()) {
      throw std::runtime_error("study csv: row has " + std::to_string(f.size()) +
                               " fields, expected " + std::to_string(header.size()));
    }
    TrialRow row;
    row.trial = parse_count(f[0]);
    row.failed = f[1] == "1";
    if (row.failed) {
      row.cost = std::numeric_limits<double>::quiet_NaN();
      row.failure = f[dim + 6];
    } else {
      std::vector<double> coords(dim);
      for (std::size_t i = 0; i < dim; ++i) coords[i] = parse_real(f[2 + i]);
      row.point = DecisionPoint(std::move(coords));
      row.cost = parse_real(f[dim + 2]);
      row.oracle = ViolationEstimate::from_counts(parse_count(f[dim + 4]), parse_count(f[dim + 5]));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

struct MarkerStyle {
  const char* shape;
  const char* color;
};

// Star, dot, square and circle first, in the order of the classic four-series
// comparison plot.
constexpr MarkerStyle kStyles[] = {
    {"star", "#1a9e1a"}, {"dot", "#1f4fd6"},     {"square", "#c020c0"},
    {"circle", "#d62020"}, {"diamond", "#202020"}, {"triangle", "#e08000"},
};

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, 2);
  return std::string(buf, end);
}

void draw_marker(std::ostream& out, const MarkerStyle& style, double x, double y,
                 const char* css_class) {
  const std::string cls = std::string("class=\"") + css_class + "\"";
  const std::string shape = style.shape;
  if (shape == "dot") {
    out << "<circle " << cls << " cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"2.5\" fill=\"" << style.color << "\"/>\n";
  } else if (shape == "circle") {
    out << "<circle " << cls << " cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
        << "\" r=\"4\" fill=\"none\" stroke=\"" << style.color << "\"/>\n";
  } else if (shape == "square") {
    out << "<rect " << cls << " x=\"" << fmt(x - 3.5) << "\" y=\"" << fmt(y - 3.5)
        << "\" width=\"7\" height=\"7\" fill=\"none\" stroke=\"" << style.color << "\"/>\n";
  } else {
    // Polygon shapes: star (10 vertices), diamond (4), triangle (3).
    const int n = shape == "star" ? 10 : shape == "diamond" ? 4 : 3;
    out << "<polygon " << cls << " points=\"";
    for (int k = 0; k < n; ++k) {
      const double r = (shape == "star" && k % 2 == 1) ? 2.2 : 5.0;
      const double a = -std::numbers::pi / 2 + 2 * std::numbers::pi * k / n;
      if (k > 0) out << ' ';
      out << fmt(x + r * std::cos(a)) << ',' << fmt(y + r * std::sin(a));
    }
    out << "\" fill=\"" << (shape == "star" ? style.color : "none") << "\" stroke=\""
        << style.color << "\"/>\n";
  }
}

void check_plottable(std::span<const StudyResult> results) {
  if (results.empty()) throw ConfigError("results", "nothing to plot");
  for (const auto& r : results) {
    if (r.dimension != 2) {
      throw std::invalid_argument("scatter plot needs a 2-D decision space; '" + r.label +
                                  "' has dimension " + std::to_string(r.dimension));
    }
  }
}

}  // namespace

void write_scatter_svg(std::ostream& out, std::span<const StudyResult> results,
                       const BoxDomain& domain) {
  check_plottable(results);
  if (domain.dimension() != 2) {
    throw std::invalid_argument("scatter plot needs a 2-D domain");
  }
  constexpr double kWidth = 640, kHeight = 560;
  constexpr double kLeft = 60, kRight = 180, kTop = 20, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const double x0 = domain.lower()[0], x1 = domain.upper()[0];
  const double y0 = domain.lower()[1], y1 = domain.upper()[1];
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto py = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n"
      << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(plot_w)
      << "\" height=\"" << fmt(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double t = std::ceil(x0); t <= x1; t += 1.0) {
    out << "<line x1=\"" << fmt(px(t)) << "\" y1=\"" << fmt(kTop + plot_h) << "\" x2=\""
        << fmt(px(t)) << "\" y2=\"" << fmt(kTop + plot_h + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt(px(t)) << "\" y=\"" << fmt(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  for (double t = std::ceil(y0); t <= y1; t += 1.0) {
    out << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(py(t)) << "\" x2=\""
        << fmt(kLeft) << "\" y2=\"" << fmt(py(t)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(py(t) + 4)
        << "\" text-anchor=\"end\">" << t << "</text>\n";
  }
  out << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 10)
      << "\" text-anchor=\"middle\">u_1</text>\n"
      << "<text x=\"15\" y=\"" << fmt(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 15 " << fmt(kTop + plot_h / 2) << ")\">u_2</text>\n";

  constexpr std::size_t kStyleCount = sizeof(kStyles) / sizeof(kStyles[0]);
  for (std::size_t s = 0; s < results.size(); ++s) {
    const auto& style = kStyles[s % kStyleCount];
    out << "<g class=\"series\" data-label=\"" << xml_escape(results[s].label) << "\">\n";
    for (const auto& row : results[s].rows) {
      if (row.failed) continue;
      draw_marker(out, style, px(row.point[0]), py(row.point[1]), "marker");
    }
    out << "</g>\n";
    const double ly = kTop + 15 + 20.0 * static_cast<double>(s);
    const double lx = kLeft + plot_w + 20;
    out << "<g class=\"legend-entry\">\n";
    draw_marker(out, style, lx, ly, "legend-symbol");
    out << "<text x=\"" << fmt(lx + 12) << "\" y=\"" << fmt(ly + 4) << "\">"
        << xml_escape(results[s].label) << "</text>\n</g>\n";
  }
  out << "</svg>\n";
}

void emit_scatter_plot(std::span<const StudyResult> results, const BoxDomain& domain,
                       const std::filesystem::path& path) {
  std::ostringstream svg;
  write_scatter_svg(svg, results, domain);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << svg.str();
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace ccopt
