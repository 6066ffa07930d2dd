#include "graphspace/svg.hpp"

#include <algorithm>
#include <cmath>

#include "graphspace/csv.hpp"

namespace graphspace::svg {

namespace {

std::string num(double v) { return csv::cell(std::round(v * 100.0) / 100.0); }

std::string open_svg(double width, double height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
}

std::string line(double x1, double y1, double x2, double y2, const std::string& stroke) {
  return "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
         num(y2) + "\" stroke=\"" + stroke + "\"/>\n";
}

std::string rect(double x, double y, double w, double h, const std::string& fill,
                 const std::string& stroke) {
  return "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
         num(h) + "\" fill=\"" + fill + "\" stroke=\"" + stroke + "\"/>\n";
}

std::string text(double x, double y, const std::string& s, const std::string& anchor = "start") {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"" + anchor + "\">" + s +
         "</text>\n";
}

struct Scale {
  double lo, hi, out_lo, out_hi;
  double operator()(double v) const {
    double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
    return out_lo + t * (out_hi - out_lo);
  }
};

}  // namespace

std::string boxplot(const std::vector<Box>& boxes, const std::string& value_label) {
  double lo = 0.0;
  double hi = 1.0;
  for (const auto& b : boxes) {
    lo = std::min({lo, b.stats.min, std::isnan(b.marker) ? lo : b.marker});
    hi = std::max({hi, b.stats.max, std::isnan(b.marker) ? hi : b.marker});
  }
  double row_h = 46.0;
  double width = 640.0;
  double height = 40.0 + row_h * static_cast<double>(boxes.size()) + 30.0;
  Scale sx{lo, hi, 140.0, width - 20.0};
  std::string out = open_svg(width, height);
  out += line(140.0, 20.0, 140.0, height - 40.0, "#444");
  out += line(140.0, height - 40.0, width - 20.0, height - 40.0, "#444");
  for (int tick = 0; tick <= 5; ++tick) {
    double v = lo + (hi - lo) * tick / 5.0;
    out += line(sx(v), height - 40.0, sx(v), height - 36.0, "#444");
    out += text(sx(v), height - 24.0, num(v), "middle");
  }
  out += text((140.0 + width - 20.0) / 2.0, height - 8.0, value_label, "middle");
  double y = 20.0;
  for (const auto& b : boxes) {
    double mid = y + row_h / 2.0;
    out += text(132.0, mid + 4.0, b.label, "end");
    out += line(sx(b.stats.min), mid, sx(b.stats.q1), mid, "#666");
    out += line(sx(b.stats.q3), mid, sx(b.stats.max), mid, "#666");
    out += rect(sx(b.stats.q1), mid - 10.0, std::max(1.0, sx(b.stats.q3) - sx(b.stats.q1)), 20.0,
                "#cfe2f3", "#3d6fa8");
    out += line(sx(b.stats.median), mid - 10.0, sx(b.stats.median), mid + 10.0, "#1f3f66");
    for (double p : b.points) {
      out += "<circle cx=\"" + num(sx(p)) + "\" cy=\"" + num(mid + 16.0) +
             "\" r=\"1.5\" fill=\"#888\"/>\n";
    }
    if (!std::isnan(b.marker)) {
      double mx = sx(b.marker);
      out += "<path d=\"M" + num(mx) + " " + num(mid - 8.0) + " L" + num(mx + 6.0) + " " +
             num(mid) + " L" + num(mx) + " " + num(mid + 8.0) + " L" + num(mx - 6.0) + " " +
             num(mid) + " Z\" fill=\"#c0392b\"/>\n";
    }
    y += row_h;
  }
  out += "</svg>\n";
  return out;
}

std::string line_chart_logx(const std::vector<Series>& series, const std::string& x_label,
                            const std::string& y_label) {
  double xlo = 1e300;
  double xhi = -1e300;
  double ylo = 0.0;
  double yhi = -1e300;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xlo = std::min(xlo, s.x[i]);
      xhi = std::max(xhi, s.x[i]);
      yhi = std::max(yhi, s.y[i]);
    }
  double width = 640.0;
  double height = 400.0;
  Scale sx{std::log10(xlo), std::log10(xhi), 70.0, width - 140.0};
  Scale sy{ylo, yhi, height - 50.0, 20.0};
  const char* colors[] = {"#3d6fa8", "#c0392b", "#2e7d32", "#8e44ad", "#b8860b"};
  std::string out = open_svg(width, height);
  out += line(70.0, 20.0, 70.0, height - 50.0, "#444");
  out += line(70.0, height - 50.0, width - 140.0, height - 50.0, "#444");
  for (double decade = std::ceil(std::log10(xlo)); decade <= std::log10(xhi) + 1e-9; ++decade) {
    double px = sx(decade);
    out += line(px, height - 50.0, px, height - 46.0, "#444");
    out += text(px, height - 32.0, "1e" + csv::cell(static_cast<long long>(decade)), "middle");
  }
  for (int tick = 0; tick <= 4; ++tick) {
    double v = ylo + (yhi - ylo) * tick / 4.0;
    out += line(66.0, sy(v), 70.0, sy(v), "#444");
    out += text(62.0, sy(v) + 4.0, num(v), "end");
  }
  out += text((70.0 + width - 140.0) / 2.0, height - 12.0, x_label, "middle");
  out += text(16.0, 16.0, y_label);
  int idx = 0;
  for (const auto& s : series) {
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i)
      pts += num(sx(std::log10(s.x[i]))) + "," + num(sy(s.y[i])) + " ";
    const char* color = colors[idx % 5];
    out += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\"/>\n";
    out += text(width - 130.0, 30.0 + 16.0 * idx, s.label);
    out += line(width - 138.0, 26.0 + 16.0 * idx, width - 132.0, 26.0 + 16.0 * idx, color);
    ++idx;
  }
  out += "</svg>\n";
  return out;
}

std::string heatmap(const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels,
                    const std::vector<std::vector<double>>& values) {
  double cell_size = 34.0;
  double left = 110.0;
  double top = 40.0;
  double width = left + cell_size * static_cast<double>(col_labels.size()) + 20.0;
  double height = top + cell_size * static_cast<double>(row_labels.size()) + 20.0;
  std::string out = open_svg(width, height);
  for (std::size_t c = 0; c < col_labels.size(); ++c)
    out += text(left + cell_size * (static_cast<double>(c) + 0.5), top - 8.0, col_labels[c],
                "middle");
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    double yy = top + cell_size * static_cast<double>(r);
    out += text(left - 8.0, yy + cell_size / 2.0 + 4.0, row_labels[r], "end");
    for (std::size_t c = 0; c < values[r].size(); ++c) {
      // log scale from 1e-3 to 1: small p-values dark.
      double v = std::clamp(values[r][c], 1e-3, 1.0);
      double t = (std::log10(v) + 3.0) / 3.0;
      int shade = static_cast<int>(30.0 + 225.0 * t);
      std::string fill = "rgb(" + std::to_string(shade) + "," + std::to_string(shade) + ",255)";
      double xx = left + cell_size * static_cast<double>(c);
      out += rect(xx, yy, cell_size, cell_size, fill, "#fff");
      out += text(xx + cell_size / 2.0, yy + cell_size / 2.0 + 4.0, num(values[r][c]), "middle");
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace graphspace::svg
