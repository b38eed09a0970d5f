#pragma once

#include <cmath>
#include <string>
#include <string_view>

namespace extremal::dist {

enum class Family { uniform, exponential, logistic, pareto, power_function, gev };

std::string_view to_string(Family family);
/// Throws std::invalid_argument for unknown names.
Family family_from_string(std::string_view name);

/// Open support interval; endpoints may be +-inf.
struct Support {
  double lower;
  double upper;
};

/// GEV shapes with |xi| below this are evaluated through the Gumbel (xi = 0) formulas.
inline constexpr double kGumbelSwitch = 1e-8;

/// An immutable, validated parent distribution.
///
/// theta is the rate/scale of the first five families (Uniform(0, theta),
/// Exp with rate theta, Logistic with slope theta, Pareto with scale theta,
/// power function on (0, 1/theta)); nu is the shape of the Pareto and power
/// function; xi is the extreme value index of the GEV family.
class DistributionSpec {
 public:
  static DistributionSpec uniform(double theta);
  static DistributionSpec exponential(double theta);
  static DistributionSpec logistic(double theta);
  static DistributionSpec pareto(double theta, double nu);
  static DistributionSpec power_function(double theta, double nu);
  static DistributionSpec gev(double xi);

  Family family() const { return family_; }
  double theta() const { return theta_; }
  double nu() const { return nu_; }
  double xi() const { return xi_; }
  bool has_theta() const { return family_ != Family::gev; }
  bool has_nu() const { return family_ == Family::pareto || family_ == Family::power_function; }
  /// True for GEV members evaluated through the xi = 0 branch.
  bool is_gumbel() const { return family_ == Family::gev && std::abs(xi_) < kGumbelSwitch; }

  Support support() const;
  std::string describe() const;

  friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

 private:
  DistributionSpec(Family family, double theta, double nu, double xi);

  Family family_;
  double theta_;
  double nu_;
  double xi_;
};

// Density, distribution, and quantile functions. Outside the support pdf is 0
// and cdf is 0 or 1; at an endpoint the density takes its one-sided limit.
double pdf(const DistributionSpec& d, double x);
double log_pdf(const DistributionSpec& d, double x);
double cdf(const DistributionSpec& d, double x);
double log_cdf(const DistributionSpec& d, double x);
/// 1 - F(x), computed without cancellation in the upper tail.
double survival(const DistributionSpec& d, double x);

/// F^{-1}(t) for t in (0,1); throws std::domain_error otherwise.
double quantile(const DistributionSpec& d, double t);
/// F^{-1}(1 - s) for s in (0,1), accurate for small s.
double tail_quantile(const DistributionSpec& d, double s);

/// Density quantile function I(t) = f(F^{-1}(t)) in closed form; t in (0,1).
double density_quantile(const DistributionSpec& d, double t);
/// Same, given t and 1 - t separately so both ends keep full precision.
double density_quantile(const DistributionSpec& d, double t, double one_minus_t);
/// ln I(t), evaluated as a sum of logarithms so it stays finite where I underflows.
double log_density_quantile(const DistributionSpec& d, double t, double one_minus_t);

/// sup f over the support; +inf for unbounded densities.
double sup_density(const DistributionSpec& d);

/// Whether ln f is concave on the support.
bool is_log_concave(const DistributionSpec& d);

}  // namespace extremal::dist
