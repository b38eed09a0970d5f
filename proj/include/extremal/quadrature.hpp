#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace extremal::numerics {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, >= 0
  std::size_t evaluations = 0;
};

/// Thrown when the adaptive scheme exhausts its depth or interval budget.
class QuadratureFailure : public std::runtime_error {
 public:
  QuadratureFailure(const std::string& what, QuadratureResult best)
      : std::runtime_error(what), best_(best) {}
  const QuadratureResult& best() const { return best_; }

 private:
  QuadratureResult best_;
};

/// Integrand on (0,1) given only t.
using UnitIntegrand = std::function<double(double t)>;
/// Integrand on (0,1) given t and 1 - t, both to full relative precision.
using SplitUnitIntegrand = std::function<double(double t, double one_minus_t)>;

inline constexpr int kMaxBisectionDepth = 60;

/// Integrates f over (0,1).
///
/// The interval is mapped by t = (1 + tanh(pi/2 sinh u)) / 2 and the transformed
/// integrand is integrated with adaptive 7/15-point Gauss-Kronrod bisection,
/// refining the subinterval with the largest error until the summed error
/// estimate is at most abs_tol. Integrable endpoint singularities such as ln t,
/// ln(1-t), ln(-ln t) and t^{-a} (a < 1) decay double exponentially under the
/// map. Nodes are confined to min(t, 1-t) >= 1e-300.
///
/// The single-argument overload only sees t, so its nodes are further confined
/// to 1 - t >= 1e-15; use the split overload when the integrand is singular at 1.
QuadratureResult integrate_unit(const UnitIntegrand& f, double abs_tol);
QuadratureResult integrate_unit(const SplitUnitIntegrand& f, double abs_tol);

/// Integrates f over (a, b); either endpoint may be infinite. Infinite ends use
/// the rational maps x = a + t/(1-t), x = b - (1-t)/t and x = 1/(1-t) - 1/t.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol);

}  // namespace extremal::numerics
