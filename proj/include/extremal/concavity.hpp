#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace extremal::numerics {

struct ConcavityViolation {
  std::size_t index;  // middle point of the offending triple
  double x;
  double excess;  // scaled second difference minus tol
};

struct ConcavityReport {
  bool concave = true;
  double worst = 0.0;  // largest scaled second difference seen
  std::vector<ConcavityViolation> violations;
};

/// Checks g for concavity on a strictly increasing grid of at least 3 points.
///
/// For each consecutive triple x0 < x1 < x2 with lambda = (x2 - x1)/(x2 - x0) the
/// scaled second difference is 2 (lambda g(x0) + (1 - lambda) g(x2) - g(x1)),
/// which reduces to g(x0) - 2 g(x1) + g(x2) on an even grid. The function is
/// reported concave iff every value is at most tol plus a rounding allowance of
/// 4 eps (|g(x0)| + 2|g(x1)| + |g(x2)|).
ConcavityReport grid_concavity_check(const std::function<double(double)>& g,
                                     const std::vector<double>& grid, double tol);

/// `count` evenly spaced interior points of (a, b).
std::vector<double> interior_grid(double a, double b, std::size_t count);

}  // namespace extremal::numerics
