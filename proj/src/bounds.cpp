#include "extremal/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "extremal/norming.hpp"
#include "extremal/special.hpp"

namespace extremal::bounds {

namespace {

double half_point(const dist::DistributionSpec& d) { return dist::density_quantile(d, 0.5); }

void require_n(long n) {
  if (n < 1) {
    throw std::invalid_argument("n must be a positive integer");
  }
}

bool le_with_slack(const ExtendedReal& a, const ExtendedReal& b) {
  if (a.is_indeterminate() || b.is_indeterminate()) {
    return false;
  }
  if (a <= b) {
    return true;
  }
  if (a.is_finite() && b.is_finite()) {
    const double scale = std::max({1.0, std::abs(a.value()), std::abs(b.value())});
    return a.value() - b.value() <= kRoundingSlack * scale;
  }
  return false;
}

void finish(BoundsReport& r) {
  r.lower_holds = le_with_slack(r.lower, r.value);
  r.upper_holds = le_with_slack(r.value, r.upper);
  if (r.value.is_indeterminate()) {
    r.lower_applicable = r.upper_applicable = false;
    r.gate_note = "value is indeterminate";
  }
  r.applicable = r.lower_applicable && r.upper_applicable;
}

std::string concavity_note(const dist::DistributionSpec& d) {
  return d.describe() + " is not log-concave";
}

}  // namespace

double shannon_upper_bound(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  return 1.0 - std::log(2.0 * half_point(d)) - std::log(nn) - 1.0 / nn + std::log(2.0) +
         special::harmonic(n) - special::half_geometric_sum(n - 1);
}

double extropy_upper_bound(const dist::DistributionSpec& d, long n) {
  require_n(n);
  const double nn = static_cast<double>(n);
  const double m = 2.0 * nn - 1.0;
  // n^2 (1/(2n-1) - 1/(2n)) = n / (2(2n-1)); the 2^{-2n} terms vanish in double above n = 2048.
  const int k = static_cast<int>(std::min(n, 2048L));
  const double bracket = nn / (2.0 * m) - std::ldexp(nn * nn / m, 1 - 2 * k) + std::ldexp(nn, -2 * k);
  return -half_point(d) * bracket;
}

BoundsReport shannon_bounds(const dist::DistributionSpec& d, long n, measures::Method method,
                            const measures::MeasureOptions& opts) {
  require_n(n);
  const double nn = static_cast<double>(n);
  BoundsReport r;
  r.lower = ExtendedReal::finite(1.0 - std::log(nn) - 1.0 / nn);
  r.upper = ExtendedReal::finite(shannon_upper_bound(d, n));
  r.value = measures::shannon_max(d, n, method, opts).value;

  const bool concave = dist::is_log_concave(d);
  const double sup = dist::sup_density(d);
  r.upper_applicable = concave;
  r.lower_applicable = concave && sup <= 1.0;
  if (!concave) {
    r.gate_note = concavity_note(d);
  } else if (!r.lower_applicable) {
    r.gate_note = "lower bound gated: sup density " + format_number(sup) + " exceeds 1";
  }
  finish(r);
  return r;
}

BoundsReport extropy_bounds(const dist::DistributionSpec& d, long n, measures::Method method,
                            const measures::MeasureOptions& opts) {
  require_n(n);
  const double nn = static_cast<double>(n);
  BoundsReport r;
  r.lower = ExtendedReal::finite(-nn / 2.0 * half_point(d));
  r.upper = ExtendedReal::finite(extropy_upper_bound(d, n));
  r.value = measures::extropy_max(d, n, method, opts).value;

  const bool concave = dist::is_log_concave(d);
  r.lower_applicable = r.upper_applicable = concave;
  if (!concave) {
    r.gate_note = concavity_note(d);
  }
  finish(r);
  return r;
}

double shannon_limit_upper(const dist::DistributionSpec& d) {
  return 1.0 - std::log(2.0 * half_point(d)) + special::euler_gamma();
}

double extropy_limit_upper(const dist::DistributionSpec& d) { return -half_point(d) / 4.0; }

std::pair<BoundsReport, BoundsReport> normalized_bounds(const dist::DistributionSpec& d, long n) {
  const evt::NormingConstants c = evt::norming_constants(d, n);
  const ExtendedReal shift = ExtendedReal::finite(-std::log(c.a_n));
  auto scale = [&](const ExtendedReal& x) {
    return x.is_finite() ? ExtendedReal::finite(c.a_n * x.value()) : x;
  };

  BoundsReport h = shannon_bounds(d, n);
  h.lower = h.lower + shift;
  h.value = h.value + shift;
  h.upper = h.upper + shift;
  finish(h);

  BoundsReport j = extropy_bounds(d, n);
  j.lower = scale(j.lower);
  j.value = scale(j.value);
  j.upper = scale(j.upper);
  finish(j);
  return {h, j};
}

std::pair<ExtendedReal, ExtendedReal> normalized_limit_upper(const dist::DistributionSpec& d) {
  const ExtendedReal a = evt::norming_scale_limit(d);
  const double ubh = shannon_limit_upper(d);
  const double ubj = extropy_limit_upper(d);
  if (a.is_finite() && a.value() > 0.0) {
    return {ExtendedReal::finite(ubh - std::log(a.value())), ExtendedReal::finite(ubj * a.value())};
  }
  if (a.is_finite()) {
    return {ExtendedReal::pos_infinity(), ExtendedReal::finite(0.0)};
  }
  return {ExtendedReal::neg_infinity(), ExtendedReal::neg_infinity()};
}

EnvelopeReport envelope_check(const dist::DistributionSpec& d, const std::vector<double>& grid) {
  const double i_half = half_point(d);
  const bool concave = dist::is_log_concave(d);
  const bool normalized = dist::sup_density(d) <= 1.0;

  EnvelopeReport rep;
  auto init = [](EnvelopeCheck& c) {
    c.worst_violation = -std::numeric_limits<double>::infinity();
  };
  init(rep.bobkov);
  init(rep.unit_lower);
  init(rep.unit_upper);

  auto record = [](EnvelopeCheck& c, double t, double lhs, double rhs) {
    const double excess = lhs - rhs;
    if (excess > c.worst_violation) {
      c.worst_violation = excess;
      c.worst_t = t;
    }
    if (excess > kRoundingSlack * std::max(1.0, std::abs(rhs))) {
      c.holds = false;
    }
  };

  for (double t : grid) {
    if (!(t > 0.0 && t < 1.0)) {
      throw std::domain_error("envelope grid must lie in (0,1)");
    }
    const double it = dist::density_quantile(d, t);
    const double m = std::min(t, 1.0 - t);
    record(rep.bobkov, t, 2.0 * i_half * m, it);
    record(rep.unit_lower, t, m, it);
    record(rep.unit_upper, t, it, 1.0);
  }

  if (!concave) {
    rep.bobkov.gated = rep.unit_lower.gated = rep.unit_upper.gated = true;
    rep.bobkov.note = rep.unit_lower.note = rep.unit_upper.note = concavity_note(d);
  } else if (!normalized) {
    rep.unit_lower.gated = rep.unit_upper.gated = true;
    rep.unit_lower.note = rep.unit_upper.note = "gated: sup density exceeds 1";
  }
  return rep;
}

GapStudy exponential_gap(const dist::DistributionSpec& d, const std::vector<long>& n_grid) {
  if (n_grid.empty()) {
    throw std::invalid_argument("n grid must not be empty");
  }
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (n_grid[i] <= n_grid[i - 1]) {
      throw std::invalid_argument("n grid must be increasing");
    }
  }
  const double ubh = shannon_limit_upper(d);
  const double ubj = extropy_limit_upper(d);
  GapStudy s;
  s.rows.reserve(n_grid.size());
  for (long n : n_grid) {
    s.rows.push_back({n, ubh - measures::shannon_closed(d, n), ubj - measures::extropy_closed(d, n)});
  }
  const GapRow& last = s.rows.back();
  s.attaining = std::max(std::abs(last.h_gap), std::abs(last.j_gap)) < kAttainTol;
  return s;
}

}  // namespace extremal::bounds
