#include "extremal/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace extremal::dist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be a positive finite real");
  }
}

void require_unit(double t, const char* where) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error(std::string(where) + ": argument must lie in (0,1)");
  }
}

// log(1 + e^x) without overflow.
double softplus(double x) {
  if (x > 0.0) {
    return x + std::log1p(std::exp(-x));
  }
  return std::log1p(std::exp(x));
}

// ln t given t and 1 - t, using whichever is more accurate.
double log_of(double t, double tc) { return t < 0.5 ? std::log(t) : std::log1p(-tc); }

// -ln t for the GEV density quantile.
double neg_log_of(double t, double tc) { return t < 0.5 ? -std::log(t) : -std::log1p(-tc); }

// GEV pieces for xi != 0 at z = 1 + xi x > 0: returns z^{-1/xi}.
double gev_tail_power(double xi, double x) { return std::exp(-std::log1p(xi * x) / xi); }

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::uniform:
      return "uniform";
    case Family::exponential:
      return "exponential";
    case Family::logistic:
      return "logistic";
    case Family::pareto:
      return "pareto";
    case Family::power_function:
      return "power_function";
    case Family::gev:
      return "gev";
  }
  return "unknown";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::uniform, Family::exponential, Family::logistic, Family::pareto,
                   Family::power_function, Family::gev}) {
    if (to_string(f) == name) {
      return f;
    }
  }
  throw std::invalid_argument("unknown distribution family '" + std::string(name) + "'");
}

DistributionSpec::DistributionSpec(Family family, double theta, double nu, double xi)
    : family_(family), theta_(theta), nu_(nu), xi_(xi) {}

DistributionSpec DistributionSpec::uniform(double theta) {
  require_positive(theta, "theta");
  return {Family::uniform, theta, 0.0, 0.0};
}

DistributionSpec DistributionSpec::exponential(double theta) {
  require_positive(theta, "theta");
  return {Family::exponential, theta, 0.0, 0.0};
}

DistributionSpec DistributionSpec::logistic(double theta) {
  require_positive(theta, "theta");
  return {Family::logistic, theta, 0.0, 0.0};
}

DistributionSpec DistributionSpec::pareto(double theta, double nu) {
  require_positive(theta, "theta");
  require_positive(nu, "nu");
  return {Family::pareto, theta, nu, 0.0};
}

DistributionSpec DistributionSpec::power_function(double theta, double nu) {
  require_positive(theta, "theta");
  require_positive(nu, "nu");
  return {Family::power_function, theta, nu, 0.0};
}

DistributionSpec DistributionSpec::gev(double xi) {
  if (!std::isfinite(xi)) {
    throw std::invalid_argument("xi must be a finite real");
  }
  return {Family::gev, 1.0, 0.0, xi};
}

Support DistributionSpec::support() const {
  switch (family_) {
    case Family::uniform:
      return {0.0, theta_};
    case Family::exponential:
      return {0.0, kInf};
    case Family::logistic:
      return {-kInf, kInf};
    case Family::pareto:
      return {theta_, kInf};
    case Family::power_function:
      return {0.0, 1.0 / theta_};
    case Family::gev:
      if (is_gumbel()) {
        return {-kInf, kInf};
      }
      return xi_ > 0.0 ? Support{-1.0 / xi_, kInf} : Support{-kInf, -1.0 / xi_};
  }
  return {-kInf, kInf};
}

std::string DistributionSpec::describe() const {
  char buf[96];
  switch (family_) {
    case Family::pareto:
    case Family::power_function:
      std::snprintf(buf, sizeof buf, "%s(theta=%g, nu=%g)", to_string(family_).data(), theta_, nu_);
      break;
    case Family::gev:
      std::snprintf(buf, sizeof buf, "gev(xi=%g)", xi_);
      break;
    default:
      std::snprintf(buf, sizeof buf, "%s(theta=%g)", to_string(family_).data(), theta_);
      break;
  }
  return buf;
}

double log_pdf(const DistributionSpec& d, double x) {
  const Support s = d.support();
  if (x < s.lower || x > s.upper) {
    return -kInf;
  }
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return -std::log(th);
    case Family::exponential:
      return std::log(th) - th * x;
    case Family::logistic:
      return std::log(th) - softplus(-th * x) - softplus(th * x);
    case Family::pareto:
      return std::log(nu / th) + (nu + 1.0) * std::log(th / x);
    case Family::power_function:
      if (x == 0.0) {
        return nu == 1.0 ? std::log(th) : (nu > 1.0 ? -kInf : kInf);
      }
      return std::log(nu * th) + (nu - 1.0) * std::log(th * x);
    case Family::gev: {
      if (d.is_gumbel()) {
        return -x - std::exp(-x);
      }
      const double xi = d.xi();
      const double z = 1.0 + xi * x;
      if (z <= 0.0) {
        // Endpoint: -1/xi for xi < 0 is the upper end, where g -> z^{-(xi+1)/xi}.
        if (xi > 0.0) {
          return -kInf;
        }
        if (xi == -1.0) {
          return 0.0;
        }
        return xi > -1.0 ? -kInf : kInf;
      }
      const double lz = std::log1p(xi * x);
      return -(1.0 + 1.0 / xi) * lz - std::exp(-lz / xi);
    }
  }
  return -kInf;
}

double pdf(const DistributionSpec& d, double x) {
  const Support s = d.support();
  if (x < s.lower || x > s.upper) {
    return 0.0;
  }
  switch (d.family()) {
    case Family::uniform:
      return 1.0 / d.theta();
    case Family::exponential:
      return d.theta() * std::exp(-d.theta() * x);
    case Family::power_function:
      return d.nu() * d.theta() * std::pow(d.theta() * x, d.nu() - 1.0);
    default:
      return std::exp(log_pdf(d, x));
  }
}

double cdf(const DistributionSpec& d, double x) {
  const Support s = d.support();
  if (x <= s.lower) {
    return 0.0;
  }
  if (x >= s.upper) {
    return 1.0;
  }
  const double th = d.theta();
  switch (d.family()) {
    case Family::uniform:
      return x / th;
    case Family::exponential:
      return -std::expm1(-th * x);
    case Family::logistic:
      return 1.0 / (1.0 + std::exp(-th * x));
    case Family::pareto:
      return -std::expm1(d.nu() * std::log(th / x));
    case Family::power_function:
      return std::pow(th * x, d.nu());
    case Family::gev:
      if (d.is_gumbel()) {
        return std::exp(-std::exp(-x));
      }
      return std::exp(-gev_tail_power(d.xi(), x));
  }
  return 0.0;
}

double log_cdf(const DistributionSpec& d, double x) {
  const Support s = d.support();
  if (x <= s.lower) {
    return -kInf;
  }
  if (x >= s.upper) {
    return 0.0;
  }
  const double th = d.theta();
  switch (d.family()) {
    case Family::uniform:
      return std::log(x / th);
    case Family::exponential:
      return std::log(-std::expm1(-th * x));
    case Family::logistic:
      return -softplus(-th * x);
    case Family::pareto:
      return std::log1p(-std::pow(th / x, d.nu()));
    case Family::power_function:
      return d.nu() * std::log(th * x);
    case Family::gev:
      if (d.is_gumbel()) {
        return -std::exp(-x);
      }
      return -gev_tail_power(d.xi(), x);
  }
  return -kInf;
}

double survival(const DistributionSpec& d, double x) {
  const Support s = d.support();
  if (x <= s.lower) {
    return 1.0;
  }
  if (x >= s.upper) {
    return 0.0;
  }
  const double th = d.theta();
  switch (d.family()) {
    case Family::uniform:
      return (th - x) / th;
    case Family::exponential:
      return std::exp(-th * x);
    case Family::logistic:
      return 1.0 / (1.0 + std::exp(th * x));
    case Family::pareto:
      return std::pow(th / x, d.nu());
    case Family::power_function:
      return -std::expm1(d.nu() * std::log(th * x));
    case Family::gev:
      if (d.is_gumbel()) {
        return -std::expm1(-std::exp(-x));
      }
      return -std::expm1(-gev_tail_power(d.xi(), x));
  }
  return 0.0;
}

namespace {

// Quantile from the pair (t, 1 - t).
double quantile_split(const DistributionSpec& d, double t, double tc) {
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return t <= 0.5 ? th * t : th - th * tc;
    case Family::exponential:
      return -std::log(tc) / th;
    case Family::logistic:
      return (log_of(t, tc) - std::log(tc)) / th;
    case Family::pareto:
      return th * std::exp(-std::log(tc) / nu);
    case Family::power_function:
      return std::exp(log_of(t, tc) / nu) / th;
    case Family::gev: {
      const double l = neg_log_of(t, tc);
      if (d.is_gumbel()) {
        return -std::log(l);
      }
      const double xi = d.xi();
      return std::expm1(-xi * std::log(l)) / xi;
    }
  }
  return 0.0;
}

}  // namespace

double quantile(const DistributionSpec& d, double t) {
  require_unit(t, "quantile");
  return quantile_split(d, t, 1.0 - t);
}

double tail_quantile(const DistributionSpec& d, double s) {
  require_unit(s, "tail_quantile");
  return quantile_split(d, 1.0 - s, s);
}

double density_quantile(const DistributionSpec& d, double t) {
  require_unit(t, "density_quantile");
  return density_quantile(d, t, 1.0 - t);
}

double density_quantile(const DistributionSpec& d, double t, double tc) {
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return 1.0 / th;
    case Family::exponential:
      return th * tc;
    case Family::logistic:
      return th * t * tc;
    case Family::pareto:
      return nu / th * std::pow(tc, (nu + 1.0) / nu);
    case Family::power_function:
      return nu * th * std::pow(t, (nu - 1.0) / nu);
    case Family::gev: {
      const double l = neg_log_of(t, tc);
      return d.is_gumbel() ? t * l : t * std::pow(l, d.xi() + 1.0);
    }
  }
  return 0.0;
}

double log_density_quantile(const DistributionSpec& d, double t, double tc) {
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return -std::log(th);
    case Family::exponential:
      return std::log(th) + std::log(tc);
    case Family::logistic:
      return std::log(th) + log_of(t, tc) + std::log(tc);
    case Family::pareto:
      return std::log(nu / th) + (nu + 1.0) / nu * std::log(tc);
    case Family::power_function:
      return std::log(nu * th) + (nu - 1.0) / nu * log_of(t, tc);
    case Family::gev: {
      const double shape = d.is_gumbel() ? 1.0 : d.xi() + 1.0;
      return log_of(t, tc) + shape * std::log(neg_log_of(t, tc));
    }
  }
  return 0.0;
}

double sup_density(const DistributionSpec& d) {
  const double th = d.theta();
  const double nu = d.nu();
  switch (d.family()) {
    case Family::uniform:
      return 1.0 / th;
    case Family::exponential:
      return th;
    case Family::logistic:
      return th / 4.0;
    case Family::pareto:
      return nu / th;
    case Family::power_function:
      return nu >= 1.0 ? nu * th : kInf;
    case Family::gev: {
      // sup_t t (-ln t)^{xi+1} is attained at t = e^{-(xi+1)} when xi > -1.
      const double shape = d.is_gumbel() ? 1.0 : d.xi() + 1.0;
      if (shape < 0.0) {
        return kInf;
      }
      if (shape == 0.0) {
        return 1.0;
      }
      return std::exp(-shape + shape * std::log(shape));
    }
  }
  return kInf;
}

bool is_log_concave(const DistributionSpec& d) {
  switch (d.family()) {
    case Family::uniform:
    case Family::exponential:
    case Family::logistic:
      return true;
    case Family::pareto:
      return false;
    case Family::power_function:
      // ln f = const + (nu - 1) ln x
      return d.nu() >= 1.0;
    case Family::gev:
      return d.is_gumbel() || (d.xi() > -1.0 && d.xi() < 0.0);
  }
  return false;
}

}  // namespace extremal::dist
