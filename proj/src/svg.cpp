#include "aligngain/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aligngain/csv.hpp"
#include "aligngain/errors.hpp"

namespace aligngain {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 30.0;
constexpr double kMarginB = 45.0;

std::string num(double v) {
  // fixed short decimal for pixel coordinates
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << v;
  return out.str();
}

} // namespace

std::string render_line_plot_svg(const SweepGrid& grid, const std::string& title) {
  if (grid.axis2)
    throw DomainError("render_line_plot_svg: only 1D sweeps can be plotted");

  const bool logx = grid.axis1.spacing == AxisSpacing::log;
  auto xmap = [&](double x) { return logx ? std::log10(x) : x; };

  const double x_lo = xmap(grid.axis1.min);
  const double x_hi = xmap(grid.axis1.max);
  double y_lo = grid.values.front(), y_hi = y_lo;
  for (double v : grid.values) {
    y_lo = std::min(y_lo, v);
    y_hi = std::max(y_hi, v);
  }
  if (y_hi == y_lo) {
    y_lo -= 1.0;
    y_hi += 1.0;
  }
  const double pad = 0.05 * (y_hi - y_lo);
  y_lo -= pad;
  y_hi += pad;

  const double plot_w = kWidth - kMarginL - kMarginR;
  const double plot_h = kHeight - kMarginT - kMarginB;
  auto px = [&](double x) {
    return kMarginL + plot_w * (xmap(x) - x_lo) / (x_hi - x_lo);
  };
  auto py = [&](double y) {
    return kMarginT + plot_h * (y_hi - y) / (y_hi - y_lo);
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth
      << ' ' << kHeight << "\">\n"
      << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n"
      << "<rect x=\"" << num(kMarginL) << "\" y=\"" << num(kMarginT)
      << "\" width=\"" << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  if (y_lo < 0.0 && y_hi > 0.0)
    svg << "<line x1=\"" << num(kMarginL) << "\" y1=\"" << num(py(0.0))
        << "\" x2=\"" << num(kMarginL + plot_w) << "\" y2=\"" << num(py(0.0))
        << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

  svg << "<polyline fill=\"none\" stroke=\"#1f5fa8\" stroke-width=\"1.5\" points=\"";
  for (int i = 0; i < grid.axis1.count; ++i) {
    if (i) svg << ' ';
    svg << num(px(grid.axis1.at(i))) << ',' << num(py(grid.value_at(i)));
  }
  svg << "\"/>\n";

  svg << "<text x=\"" << num(kMarginL) << "\" y=\"" << num(kHeight - 12)
      << "\" font-family=\"sans-serif\" font-size=\"11\">" << grid.axis1.name
      << " = " << format_sci6(grid.axis1.min) << (logx ? " .. " : " .. ")
      << format_sci6(grid.axis1.max) << (logx ? " (log)" : "") << "</text>\n";
  svg << "<text x=\"8\" y=\"" << num(kMarginT + 10)
      << "\" font-family=\"sans-serif\" font-size=\"11\">scaled gain "
      << format_sci6(y_lo) << " .. " << format_sci6(y_hi) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

void write_svg_file(const SweepGrid& grid, const std::string& title,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << render_line_plot_svg(grid, title);
  if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace aligngain
