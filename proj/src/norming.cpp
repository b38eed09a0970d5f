#include "extremal/norming.hpp"

#include <cmath>
#include <stdexcept>

#include "extremal/special.hpp"

namespace extremal::evt {

namespace {

using dist::Family;

void require_n(long n) {
  if (n < 2) {
    throw std::invalid_argument("norming constants need n >= 2");
  }
}

}  // namespace

std::string_view to_string(MaxDomain domain) {
  switch (domain) {
    case MaxDomain::frechet:
      return "frechet";
    case MaxDomain::gumbel:
      return "gumbel";
    case MaxDomain::reversed_weibull:
      return "reversed_weibull";
  }
  return "unknown";
}

DomainOfAttraction mda_classify(const dist::DistributionSpec& d) {
  switch (d.family()) {
    case Family::exponential:
    case Family::logistic:
      return {MaxDomain::gumbel, 0.0};
    case Family::uniform:
    case Family::power_function:
      return {MaxDomain::reversed_weibull, -1.0};
    case Family::pareto:
      return {MaxDomain::frechet, 1.0 / d.nu()};
    case Family::gev:
      if (d.is_gumbel()) {
        return {MaxDomain::gumbel, 0.0};
      }
      return {d.xi() > 0.0 ? MaxDomain::frechet : MaxDomain::reversed_weibull, d.xi()};
  }
  throw std::logic_error("unhandled family");
}

NormingConstants norming_constants(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const DomainOfAttraction doa = mda_classify(d);
  const double nn = static_cast<double>(n);
  const double th = d.theta();
  switch (d.family()) {
    case Family::exponential:
      return {1.0 / th, std::log(nn) / th, doa.domain, doa.xi};
    case Family::uniform:
      return {th / nn, th, doa.domain, doa.xi};
    case Family::pareto:
      return {th * std::pow(nn, 1.0 / d.nu()), 0.0, doa.domain, doa.xi};
    case Family::power_function: {
      // 1/theta - F^{-1}(1 - 1/n) = (1 - (1 - 1/n)^{1/nu}) / theta
      const double a = -std::expm1(std::log1p(-1.0 / nn) / d.nu()) / th;
      return {a, 1.0 / th, doa.domain, doa.xi};
    }
    case Family::logistic:
      return norming_constants_recipe(d, n);
    case Family::gev: {
      if (d.is_gumbel()) {
        return {1.0, std::log(nn), doa.domain, doa.xi};
      }
      const double xi = d.xi();
      return {std::pow(nn, xi) / std::abs(xi), -1.0 / xi, doa.domain, doa.xi};
    }
  }
  throw std::logic_error("unhandled family");
}

NormingConstants norming_constants_recipe(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const DomainOfAttraction doa = mda_classify(d);
  const double u = dist::tail_quantile(d, 1.0 / static_cast<double>(n));
  switch (doa.domain) {
    case MaxDomain::frechet:
      return {u, 0.0, doa.domain, doa.xi};
    case MaxDomain::reversed_weibull: {
      const double x_star = d.support().upper;
      return {x_star - u, x_star, doa.domain, doa.xi};
    }
    case MaxDomain::gumbel: {
      const double log_h = std::log(dist::survival(d, u)) - dist::log_pdf(d, u);
      return {std::exp(log_h), u, doa.domain, doa.xi};
    }
  }
  throw std::logic_error("unhandled domain");
}

ExtendedReal norming_scale_limit(const dist::DistributionSpec& d) {
  switch (d.family()) {
    case Family::exponential:
    case Family::logistic:
      return ExtendedReal::finite(1.0 / d.theta());
    case Family::uniform:
    case Family::power_function:
      return ExtendedReal::finite(0.0);
    case Family::pareto:
      return ExtendedReal::pos_infinity();
    case Family::gev:
      if (d.is_gumbel()) {
        return ExtendedReal::finite(1.0);
      }
      return d.xi() > 0.0 ? ExtendedReal::pos_infinity() : ExtendedReal::finite(0.0);
  }
  throw std::logic_error("unhandled family");
}

double limit_cdf(const DomainOfAttraction& doa, double x) {
  switch (doa.domain) {
    case MaxDomain::gumbel:
      return std::exp(-std::exp(-x));
    case MaxDomain::frechet:
      return x <= 0.0 ? 0.0 : std::exp(-std::pow(x, -1.0 / doa.xi));
    case MaxDomain::reversed_weibull:
      return x >= 0.0 ? 1.0 : std::exp(-std::pow(-x, -1.0 / doa.xi));
  }
  throw std::logic_error("unhandled domain");
}

Targets gumbel_targets() { return {1.0 + special::euler_gamma(), ExtendedReal::finite(-0.125), false}; }

Targets limit_targets(const DomainOfAttraction& doa) {
  if (doa.domain == MaxDomain::gumbel) {
    return gumbel_targets();
  }
  const double xi = doa.xi;
  const double g = special::euler_gamma();
  const double h = 1.0 + g + xi * g + std::log(std::abs(xi));
  if (!(xi > -2.0)) {
    return {h, ExtendedReal::neg_infinity(), true};
  }
  const double j = -std::exp(special::log_gamma(xi + 2.0) - (xi + 3.0) * std::log(2.0)) / std::abs(xi);
  return {h, ExtendedReal::finite(j), true};
}

}  // namespace extremal::evt
