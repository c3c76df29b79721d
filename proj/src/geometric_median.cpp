#include "wsd/geometric_median.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsd {

namespace {

double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

void check(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("median of an empty point set");
  const std::size_t dim = points.front().size();
  for (const Point& p : points) {
    if (p.size() != dim) throw std::invalid_argument("points differ in dimension");
  }
}

}  // namespace

Point mean(std::span<const Point> points) {
  check(points);
  Point m(points.front().size(), 0.0);
  for (const Point& p : points) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += p[i];
  }
  for (double& v : m) v /= static_cast<double>(points.size());
  return m;
}

double distance_sum(std::span<const Point> points, std::span<const double> x) {
  double s = 0.0;
  for (const Point& p : points) s += distance(p, x);
  return s;
}

Point geometric_median(std::span<const Point> points, const WeiszfeldOptions& options) {
  Point x = mean(points);
  if (points.size() <= 2) return x;

  const std::size_t dim = x.size();
  Point next(dim);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    double weight_sum = 0.0;
    for (const Point& p : points) {
      const double d = distance(p, x);
      if (d < options.coincidence) return p;
      const double w = 1.0 / d;
      weight_sum += w;
      for (std::size_t i = 0; i < dim; ++i) next[i] += w * p[i];
    }
    for (double& v : next) v /= weight_sum;
    const double moved = distance(next, x);
    x.swap(next);
    if (moved < options.tolerance) break;
  }

  // Weiszfeld approaches a vertex optimum only sublinearly.
  double best = distance_sum(points, x);
  const Point* best_input = nullptr;
  for (const Point& p : points) {
    const double s = distance_sum(points, p);
    if (s < best) {
      best = s;
      best_input = &p;
    }
  }
  return best_input ? *best_input : x;
}

Point coordinate_median(std::span<const Point> points) {
  check(points);
  const std::size_t dim = points.front().size();
  Point out(dim);
  std::vector<double> column(points.size());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) column[j] = points[j][i];
    std::sort(column.begin(), column.end());
    const std::size_t mid = column.size() / 2;
    out[i] = column.size() % 2 ? column[mid] : 0.5 * (column[mid - 1] + column[mid]);
  }
  return out;
}

}  // namespace wsd
