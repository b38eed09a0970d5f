#include "extremal/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace extremal::special {

namespace {

void require_positive(long n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": n must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

double harmonic(long n) {
  require_positive(n, "harmonic");
  if (n > kHarmonicExactLimit) {
    return digamma(static_cast<double>(n) + 1.0) + euler_gamma();
  }
  // Smallest terms first.
  double sum = 0.0;
  for (long k = n; k >= 1; --k) {
    sum += 1.0 / static_cast<double>(k);
  }
  return sum;
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("digamma: argument must be a positive finite real");
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k)
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12.0 -
              inv2 * (1.0 / 120.0 -
                      inv2 * (1.0 / 252.0 -
                              inv2 * (1.0 / 240.0 -
                                      inv2 * (1.0 / 132.0 -
                                              inv2 * (691.0 / 32760.0 - inv2 / 12.0))))));
  return shift + std::log(x) - 0.5 * inv - series;
}

double half_geometric_sum(long n) {
  if (n < 0) {
    throw std::invalid_argument("half_geometric_sum: n must be >= 0");
  }
  // Terms fall below the smallest subnormal long before k = 1100.
  const long last = n < 1100 ? n : 1100;
  double sum = 0.0;
  for (long k = last; k >= 1; --k) {
    sum += std::ldexp(1.0 / static_cast<double>(k), static_cast<int>(-k));
  }
  return sum;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::invalid_argument("log_gamma: argument must be a positive finite real");
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double beta_function(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("beta_function: arguments must be positive");
  }
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double beta_n1_log_moment(long n) {
  require_positive(n, "beta_n1_log_moment");
  return -harmonic(n);
}

double lower_half_log(long n) {
  require_positive(n, "lower_half_log");
  return -std::ldexp(std::numbers::ln2 + 1.0 / static_cast<double>(n), static_cast<int>(-n));
}

double power_log(long n) {
  require_positive(n, "power_log");
  const double nn = static_cast<double>(n);
  return -1.0 / (nn * nn);
}

double power_loglog(long n) {
  require_positive(n, "power_loglog");
  const double nn = static_cast<double>(n);
  return -(euler_gamma() + std::log(nn)) / nn;
}

double power_logpow(double nu, double mu) {
  if (!(nu > 0.0) || !(mu > 0.0)) {
    throw std::invalid_argument("power_logpow: nu and mu must be positive");
  }
  return std::exp(log_gamma(mu) - mu * std::log(nu));
}

double appendix_integral(AppendixKind kind, const AppendixParams& params) {
  switch (kind) {
    case AppendixKind::lower_half_log:
      return lower_half_log(params.n);
    case AppendixKind::power_log:
      return power_log(params.n);
    case AppendixKind::power_loglog:
      return power_loglog(params.n);
    case AppendixKind::power_logpow:
      return power_logpow(params.nu, params.mu);
  }
  throw std::invalid_argument("appendix_integral: unknown kind");
}

}  // namespace extremal::special
