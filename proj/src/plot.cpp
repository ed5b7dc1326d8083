#include "dcglearn/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dcglearn {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 64.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 48.0;

const char* const kPalette[] = {"#1b6ca8", "#c0392b", "#1e8449", "#8e44ad",
                                "#d68910", "#16a085", "#7f8c8d", "#2c3e50"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

std::string series_name(const ResultRow& r) {
  std::string name = to_string(r.model) + " / " + to_string(r.pair_mode);
  if (r.pair_flips > 0) name += " / " + std::to_string(r.pair_flips) + " flipped pairs";
  if (r.grade_flips > 0) name += " / " + std::to_string(r.grade_flips) + " flipped grades";
  return name;
}

}  // namespace

std::string render_svg(const std::vector<ResultRow>& rows, const std::string& metric,
                       const std::string& title) {
  const bool use_precision = metric == "precision";
  if (!use_precision && metric != "similarity")
    throw std::invalid_argument("metric must be precision or similarity, got '" + metric + "'");
  if (rows.empty()) throw std::invalid_argument("no rows to plot");

  // series -> x -> per-seed values
  std::map<std::string, std::map<int, std::vector<double>>> grouped;
  for (const ResultRow& r : rows)
    grouped[series_name(r)][r.train_pairs].push_back(use_precision ? r.precision : r.similarity);

  int x_min = rows.front().train_pairs;
  int x_max = x_min;
  double y_min = 0.0;
  double y_max = 1.0;
  std::map<std::string, std::vector<std::pair<int, double>>> lines;
  for (const auto& [name, by_x] : grouped) {
    for (const auto& [x, vals] : by_x) {
      const double m = median(vals);
      lines[name].emplace_back(x, m);
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, m);
      y_max = std::max(y_max, m);
    }
  }
  if (x_min == x_max) {
    --x_min;
    ++x_max;
  }
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto sy = [&](double y) { return kMarginTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    svg << "<text x=\"" << kMarginLeft << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
        << title << "</text>\n";

  // axes and gridlines
  svg << "<g stroke=\"#ccc\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int i = 0; i <= 5; ++i) {
    const double y = y_min + (y_max - y_min) * i / 5.0;
    svg << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(sy(y)) << "\" x2=\""
        << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(sy(y)) << "\"/>\n";
    svg << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(sy(y) + 4)
        << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#333\">" << fmt(y) << "</text>\n";
  }
  for (int i = 0; i <= 5; ++i) {
    const double x = x_min + (x_max - x_min) * i / 5.0;
    svg << "<line x1=\"" << fmt(sx(x)) << "\" y1=\"" << fmt(kMarginTop) << "\" x2=\"" << fmt(sx(x))
        << "\" y2=\"" << fmt(kMarginTop + plot_h) << "\"/>\n";
    svg << "<text x=\"" << fmt(sx(x)) << "\" y=\"" << fmt(kMarginTop + plot_h + 18)
        << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#333\">" << fmt(x) << "</text>\n";
  }
  svg << "</g>\n";
  svg << "<text x=\"" << fmt(kMarginLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">training pairs</text>\n";
  svg << "<text x=\"16\" y=\"" << fmt(kMarginTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
      << fmt(kMarginTop + plot_h / 2) << ")\">median " << metric << "</text>\n";

  int color = 0;
  double legend_y = kMarginTop + 8;
  for (const auto& [name, pts] : lines) {
    const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : pts) svg << fmt(sx(x)) << ',' << fmt(sy(y)) << ' ';
    svg << "\"/>\n";
    for (const auto& [x, y] : pts)
      svg << "<circle cx=\"" << fmt(sx(x)) << "\" cy=\"" << fmt(sy(y)) << "\" r=\"3\" fill=\"" << stroke
          << "\"/>\n";
    svg << "<rect x=\"" << fmt(kWidth - kMarginRight + 12) << "\" y=\"" << fmt(legend_y - 9)
        << "\" width=\"12\" height=\"12\" fill=\"" << stroke << "\"/>\n";
    svg << "<text x=\"" << fmt(kWidth - kMarginRight + 30) << "\" y=\"" << fmt(legend_y + 1)
        << "\" font-family=\"sans-serif\" font-size=\"11\">" << name << "</text>\n";
    legend_y += 18;
    ++color;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace dcglearn
