#include "extremal/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace extremal::numerics {

namespace {
constexpr double kRoundoffUlps = 4.0;
}  // namespace

ConcavityReport grid_concavity_check(const std::function<double(double)>& g,
                                     const std::vector<double>& grid, double tol) {
  if (grid.size() < 3) {
    throw std::invalid_argument("concavity check needs at least 3 grid points");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("concavity grid must be strictly increasing");
    }
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    values[i] = g(grid[i]);
  }

  ConcavityReport report;
  report.worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
    const double lambda = (grid[i + 1] - grid[i]) / (grid[i + 1] - grid[i - 1]);
    const double d2 = 2.0 * (lambda * values[i - 1] + (1.0 - lambda) * values[i + 1] - values[i]);
    const double noise = kRoundoffUlps * std::numeric_limits<double>::epsilon() *
                         (std::abs(values[i - 1]) + 2.0 * std::abs(values[i]) + std::abs(values[i + 1]));
    report.worst = std::max(report.worst, d2);
    if (!(d2 <= tol + noise)) {
      report.concave = false;
      report.violations.push_back({i, grid[i], d2 - tol});
    }
  }
  return report;
}

std::vector<double> interior_grid(double a, double b, std::size_t count) {
  std::vector<double> grid(count);
  const double step = (b - a) / static_cast<double>(count + 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = a + step * static_cast<double>(i + 1);
  }
  return grid;
}

}  // namespace extremal::numerics
