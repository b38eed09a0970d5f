#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "extremal/distribution.hpp"
#include "extremal/extended_real.hpp"
#include "extremal/monte_carlo.hpp"
#include "extremal/norming.hpp"
#include "extremal/quadrature.hpp"

namespace extremal::measures {

enum class Method { closed_form, quadrature, monte_carlo };

std::string_view to_string(Method m);
/// Accepts "closed", "quad", "mc" and the full enum names.
Method method_from_string(std::string_view name);

struct MeasureValue {
  ExtendedReal value;
  Method method = Method::closed_form;
  double error_estimate = 0.0;
};

struct MeasureOptions {
  double quad_tol = 1e-10;
  std::size_t mc_samples = 100000;
  std::uint64_t seed = 0;
  numerics::Execution exec = numerics::Execution::parallel;
};

// Closed forms for H(X_(n)) and J(X_(n)). The GEV extropy needs xi > -2 and
// throws std::domain_error otherwise. n < 1 throws std::invalid_argument.
double shannon_closed(const dist::DistributionSpec& d, long n);
double extropy_closed(const dist::DistributionSpec& d, long n);

/// 1 - ln n - 1/n - int_0^1 n y^{n-1} ln I(y) dy.
numerics::QuadratureResult shannon_quadrature(const dist::DistributionSpec& d, long n,
                                              double tol);
/// -(n^2/2) int_0^1 t^{2n-2} I(t) dt.
numerics::QuadratureResult extropy_quadrature(const dist::DistributionSpec& d, long n,
                                              double tol);

MeasureValue shannon_max(const dist::DistributionSpec& d, long n,
                         Method method = Method::closed_form, const MeasureOptions& opts = {});
MeasureValue extropy_max(const dist::DistributionSpec& d, long n,
                         Method method = Method::closed_form, const MeasureOptions& opts = {});

/// lim H(X_(n)) as n -> infinity.
ExtendedReal shannon_limit(const dist::DistributionSpec& d);
/// lim J(X_(n)); the Pareto limit is indeterminate (0 x -inf) with companion 0.
ExtendedReal extropy_limit(const dist::DistributionSpec& d);

// Entropy and extropy of (X_(n) - b_n)/a_n: -ln a_n + H and a_n J. b_n plays no part.
MeasureValue shannon_normalized(const dist::DistributionSpec& d, long n,
                                Method method = Method::closed_form,
                                const MeasureOptions& opts = {});
MeasureValue shannon_normalized(const dist::DistributionSpec& d, long n,
                                const evt::NormingConstants& c,
                                Method method = Method::closed_form,
                                const MeasureOptions& opts = {});
MeasureValue extropy_normalized(const dist::DistributionSpec& d, long n,
                                Method method = Method::closed_form,
                                const MeasureOptions& opts = {});
MeasureValue extropy_normalized(const dist::DistributionSpec& d, long n,
                                const evt::NormingConstants& c,
                                Method method = Method::closed_form,
                                const MeasureOptions& opts = {});

struct CrossCheck {
  double closed;
  double quadrature;
  double quad_error;
  double gap;  // |closed - quadrature|
};

CrossCheck cross_check_shannon(const dist::DistributionSpec& d, long n, double tol = 1e-10);
CrossCheck cross_check_extropy(const dist::DistributionSpec& d, long n, double tol = 1e-10);

}  // namespace extremal::measures
