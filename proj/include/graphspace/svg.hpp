#pragma once

#include <limits>
#include <string>
#include <vector>

#include "graphspace/edev.hpp"

namespace graphspace::svg {

struct Box {
  std::string label;
  DistributionSummary stats;
  /// Individual points drawn beside the box (optional).
  std::vector<double> points;
  /// Highlighted marker (observed value); NaN when absent.
  double marker = std::numeric_limits<double>::quiet_NaN();
};

/// Horizontal boxplots, one row per entry, shared value axis.
std::string boxplot(const std::vector<Box>& boxes, const std::string& value_label);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Polyline chart with a logarithmic x axis.
std::string line_chart_logx(const std::vector<Series>& series, const std::string& x_label,
                            const std::string& y_label);

/// Grid of cells colored by value on a log scale, dark = small.
std::string heatmap(const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels,
                    const std::vector<std::vector<double>>& values);

}  // namespace graphspace::svg
