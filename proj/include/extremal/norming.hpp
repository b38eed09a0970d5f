#pragma once

#include <string_view>

#include "extremal/distribution.hpp"
#include "extremal/extended_real.hpp"

namespace extremal::evt {

enum class MaxDomain { frechet, gumbel, reversed_weibull };

std::string_view to_string(MaxDomain domain);

struct DomainOfAttraction {
  MaxDomain domain;
  double xi;
};

/// Max-domain of attraction and extreme value index of the parent.
///
/// The power function has a positive density at its right endpoint, so it sits
/// in the reversed Weibull domain with xi = -1 for every nu, like the uniform.
DomainOfAttraction mda_classify(const dist::DistributionSpec& d);

struct NormingConstants {
  double a_n;
  double b_n;
  MaxDomain domain;
  double xi;
};

/// Norming constants in the type forms of the three limit laws.
///
/// Exponential: a = 1/theta, b = ln(n)/theta. Uniform(0, theta): a = theta/n,
/// b = theta. Pareto: a = theta n^{1/nu}, b = 0. Power function: a = 1/theta -
/// U(n), b = 1/theta. Logistic: the generic recipe below. GEV parents use the
/// exact max-stable constants a = n^xi/|xi|, b = -1/xi (a = 1, b = ln n at
/// xi = 0), so the normalized maximum is distributed exactly as the limit.
/// Requires n >= 2.
NormingConstants norming_constants(const dist::DistributionSpec& d, long n);

/// The generic recipe through U(n) = F^{-1}(1 - 1/n): Frechet a = U(n), b = 0;
/// reversed Weibull a = x* - U(n), b = x*; Gumbel a = h(U(n)), b = U(n) with
/// h = (1 - F)/f evaluated in log space.
NormingConstants norming_constants_recipe(const dist::DistributionSpec& d, long n);

/// lim a_n as n -> infinity (0, a positive number, or +inf).
ExtendedReal norming_scale_limit(const dist::DistributionSpec& d);

/// Limit law in type form: Frechet exp(-x^{-1/xi}) for x > 0, reversed Weibull
/// exp(-(-x)^{-1/xi}) for x < 0, Gumbel exp(-e^{-x}).
double limit_cdf(const DomainOfAttraction& doa, double x);

struct Targets {
  double h;
  ExtendedReal j;
  bool extension;  // true outside the Gumbel domain
};

/// (1 + gamma, -1/8).
Targets gumbel_targets();

/// Entropy and extropy of the type-form limit law: for xi != 0 these are
/// 1 + gamma + xi gamma + ln|xi| and -Gamma(xi + 2) / (2^{xi+3} |xi|), the
/// latter -inf for xi <= -2.
Targets limit_targets(const DomainOfAttraction& doa);

}  // namespace extremal::evt
