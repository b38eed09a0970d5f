#include "extremal/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "extremal/special.hpp"

namespace extremal::measures {

namespace {

using dist::Family;
using special::euler_gamma;
using special::harmonic;

void require_n(long n) {
  if (n < 1) {
    throw std::invalid_argument("n must be a positive integer");
  }
}

// y^k from y and 1 - y.
double split_power(double t, double tc, double k) {
  if (k == 0.0) {
    return 1.0;
  }
  return t < 0.5 ? std::pow(t, k) : std::exp(k * std::log1p(-tc));
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::quadrature:
      return "quadrature";
    case Method::monte_carlo:
      return "monte_carlo";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "closed" || name == "closed_form") {
    return Method::closed_form;
  }
  if (name == "quad" || name == "quadrature") {
    return Method::quadrature;
  }
  if (name == "mc" || name == "monte_carlo") {
    return Method::monte_carlo;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

double shannon_closed(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const double ln_n = std::log(nn);
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return 1.0 - ln_n - 1.0 / nn + std::log(th);
    case Family::exponential:
      return 1.0 - ln_n - 1.0 / nn - std::log(th) + harmonic(n);
    case Family::logistic:
      return 1.0 - ln_n - std::log(th) + harmonic(n);
    case Family::pareto:
      return 1.0 + ln_n / nu - 1.0 / nn - std::log(nu / th) + (nu + 1.0) / nu * (harmonic(n) - ln_n);
    case Family::power_function:
      return 1.0 - ln_n - std::log(nu * th) - 1.0 / (nu * nn);
    case Family::gev: {
      const double xi = d.xi();
      return 1.0 + euler_gamma() + xi * euler_gamma() + xi * ln_n;
    }
  }
  throw std::logic_error("unhandled family");
}

double extropy_closed(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return -nn * nn / (2.0 * (2.0 * nn - 1.0) * th);
    case Family::exponential:
      // -n^2 theta / (2(2n-1)) + n theta / 4
      return -nn * th / (4.0 * (2.0 * nn - 1.0));
    case Family::logistic:
      return -nn * th / (4.0 * (2.0 * nn + 1.0));
    case Family::pareto:
      return -(nu * nn * nn / (2.0 * th)) * special::beta_function(2.0 * nn - 1.0, (2.0 * nu + 1.0) / nu);
    case Family::power_function:
      if (2.0 * nn * nu <= 1.0) {
        return -std::numeric_limits<double>::infinity();
      }
      return -nn * nn * nu * nu * th / (2.0 * (2.0 * nn * nu - 1.0));
    case Family::gev: {
      const double xi = d.xi();
      if (!(xi > -2.0)) {
        throw std::domain_error("no closed form: GEV extropy requires xi > -2");
      }
      return -std::exp(special::log_gamma(xi + 2.0) - (xi + 3.0) * std::log(2.0) - xi * std::log(nn));
    }
  }
  throw std::logic_error("unhandled family");
}

numerics::QuadratureResult shannon_quadrature(const dist::DistributionSpec& d, long n, double tol) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const double k = nn - 1.0;
  auto integrand = [&](double t, double tc) {
    return nn * split_power(t, tc, k) * dist::log_density_quantile(d, t, tc);
  };
  auto r = numerics::integrate_unit(numerics::SplitUnitIntegrand(integrand), tol);
  r.value = 1.0 - std::log(nn) - 1.0 / nn - r.value;
  return r;
}

numerics::QuadratureResult extropy_quadrature(const dist::DistributionSpec& d, long n, double tol) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const double k = 2.0 * nn - 2.0;
  auto integrand = [&](double t, double tc) {
    return split_power(t, tc, k) * dist::density_quantile(d, t, tc);
  };
  auto r = numerics::integrate_unit(numerics::SplitUnitIntegrand(integrand), tol);
  const double scale = nn * nn / 2.0;
  r.value *= -scale;
  r.error_estimate *= scale;
  return r;
}

MeasureValue shannon_max(const dist::DistributionSpec& d, long n, Method method,
                         const MeasureOptions& opts) {
  switch (method) {
    case Method::closed_form:
      return {ExtendedReal::finite(shannon_closed(d, n)), method, 0.0};
    case Method::quadrature: {
      const auto r = shannon_quadrature(d, n, opts.quad_tol);
      return {ExtendedReal::finite(r.value), method, r.error_estimate};
    }
    case Method::monte_carlo: {
      const auto e = numerics::mc_entropy_max(d, n, opts.mc_samples, opts.seed, opts.exec);
      return {ExtendedReal::finite(e.estimate), method, e.std_error};
    }
  }
  throw std::logic_error("unhandled method");
}

MeasureValue extropy_max(const dist::DistributionSpec& d, long n, Method method,
                         const MeasureOptions& opts) {
  switch (method) {
    case Method::closed_form:
      return {ExtendedReal::finite(extropy_closed(d, n)), method, 0.0};
    case Method::quadrature: {
      const auto r = extropy_quadrature(d, n, opts.quad_tol);
      return {ExtendedReal::finite(r.value), method, r.error_estimate};
    }
    case Method::monte_carlo: {
      const auto e = numerics::mc_extropy_max(d, n, opts.mc_samples, opts.seed, opts.exec);
      return {ExtendedReal::finite(e.estimate), method, e.std_error};
    }
  }
  throw std::logic_error("unhandled method");
}

ExtendedReal shannon_limit(const dist::DistributionSpec& d) {
  switch (d.family()) {
    case Family::uniform:
    case Family::power_function:
      return ExtendedReal::neg_infinity();
    case Family::exponential:
    case Family::logistic:
      return ExtendedReal::finite(1.0 - std::log(d.theta()) + euler_gamma());
    case Family::pareto:
      return ExtendedReal::pos_infinity();
    case Family::gev:
      if (d.is_gumbel()) {
        return ExtendedReal::finite(1.0 + euler_gamma());
      }
      return d.xi() > 0.0 ? ExtendedReal::pos_infinity() : ExtendedReal::neg_infinity();
  }
  throw std::logic_error("unhandled family");
}

ExtendedReal extropy_limit(const dist::DistributionSpec& d) {
  switch (d.family()) {
    case Family::uniform:
    case Family::power_function:
      return ExtendedReal::neg_infinity();
    case Family::exponential:
    case Family::logistic:
      return ExtendedReal::finite(-d.theta() / 8.0);
    case Family::pareto:
      return ExtendedReal::indeterminate(0.0);
    case Family::gev:
      if (d.is_gumbel()) {
        return ExtendedReal::finite(-0.125);
      }
      return d.xi() > 0.0 ? ExtendedReal::finite(0.0) : ExtendedReal::neg_infinity();
  }
  throw std::logic_error("unhandled family");
}

MeasureValue shannon_normalized(const dist::DistributionSpec& d, long n,
                                const evt::NormingConstants& c, Method method,
                                const MeasureOptions& opts) {
  MeasureValue v = shannon_max(d, n, method, opts);
  v.value = v.value + ExtendedReal::finite(-std::log(c.a_n));
  return v;
}

MeasureValue shannon_normalized(const dist::DistributionSpec& d, long n, Method method,
                                const MeasureOptions& opts) {
  return shannon_normalized(d, n, evt::norming_constants(d, n), method, opts);
}

MeasureValue extropy_normalized(const dist::DistributionSpec& d, long n,
                                const evt::NormingConstants& c, Method method,
                                const MeasureOptions& opts) {
  MeasureValue v = extropy_max(d, n, method, opts);
  v.value = ExtendedReal::finite(c.a_n * v.value.value());
  v.error_estimate *= c.a_n;
  return v;
}

MeasureValue extropy_normalized(const dist::DistributionSpec& d, long n, Method method,
                                const MeasureOptions& opts) {
  return extropy_normalized(d, n, evt::norming_constants(d, n), method, opts);
}

CrossCheck cross_check_shannon(const dist::DistributionSpec& d, long n, double tol) {
  const double closed = shannon_closed(d, n);
  const auto q = shannon_quadrature(d, n, tol);
  return {closed, q.value, q.error_estimate, std::abs(closed - q.value)};
}

CrossCheck cross_check_extropy(const dist::DistributionSpec& d, long n, double tol) {
  const double closed = extropy_closed(d, n);
  const auto q = extropy_quadrature(d, n, tol);
  return {closed, q.value, q.error_estimate, std::abs(closed - q.value)};
}

}  // namespace extremal::measures
