#pragma once

#include <span>
#include <vector>

namespace wsd {

using Point = std::vector<double>;

struct WeiszfeldOptions {
  double tolerance = 1e-6;     // stop when an update moves less than this
  int max_iterations = 128;
  double coincidence = 1e-12;  // iterate this close to an input is that input
};

/// Weiszfeld iteration from the arithmetic mean. One or two points return
/// their mean. If an input point has a lower distance sum than the final
/// iterate (slow convergence toward a vertex optimum), that point is returned.
/// Throws std::invalid_argument on empty input or mixed dimensions.
Point geometric_median(std::span<const Point> points, const WeiszfeldOptions& options = {});

/// Per-coordinate median (mean of the two middle values for even counts).
Point coordinate_median(std::span<const Point> points);

Point mean(std::span<const Point> points);
double distance_sum(std::span<const Point> points, std::span<const double> x);

}  // namespace wsd
