#pragma once

// Special functions and closed-form integrals behind the entropy/extropy formulas
// of the largest order statistic. All functions are pure and reentrant.

namespace extremal::special {

/// Euler-Mascheroni constant, lim (H_n - ln n).
constexpr double euler_gamma() { return 0.57721566490153286060651209008240243; }

/// Largest n summed term by term in harmonic(); above it H_n = digamma(n+1) + gamma.
inline constexpr int kHarmonicExactLimit = 10000;

/// n-th harmonic number. Throws std::invalid_argument for n < 1.
double harmonic(long n);

/// Digamma function for x > 0 (upward recurrence to x >= 10, then the asymptotic series).
double digamma(double x);

/// Partial sum sum_{k=1}^{n} 1/(k 2^k); increases to ln 2. n >= 0.
double half_geometric_sum(long n);

/// ln Gamma(x) for x > 0 without touching the global signgam.
double log_gamma(double x);

/// Beta function through log-gamma so that B(2n-1, c) stays finite for large n.
double beta_function(double a, double b);

/// E[ln(1-Y)] for Y ~ Beta(n, 1); equals -H_n.
double beta_n1_log_moment(long n);

enum class AppendixKind { lower_half_log, power_log, power_loglog, power_logpow };

struct AppendixParams {
  long n = 1;       // lower_half_log, power_log, power_loglog
  double nu = 1.0;  // power_logpow
  double mu = 1.0;  // power_logpow
};

// int_0^{1/2} n y^{n-1} ln y dy = -2^{-n} (ln 2 + 1/n)
double lower_half_log(long n);
// int_0^1 y^{n-1} ln y dy = -1/n^2
double power_log(long n);
// int_0^1 y^{n-1} ln(-ln y) dy = -(gamma + ln n)/n
double power_loglog(long n);
// int_0^1 x^{nu-1} (ln 1/x)^{mu-1} dx = Gamma(mu)/nu^mu
double power_logpow(double nu, double mu);

/// Dispatches on kind; throws std::invalid_argument for out-of-domain parameters.
double appendix_integral(AppendixKind kind, const AppendixParams& params);

}  // namespace extremal::special
