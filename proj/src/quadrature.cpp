#include "extremal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace extremal::numerics {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the nodes kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// |u| <= 6.1 keeps min(t, 1-t) above ~1e-304.
constexpr double kSplitUMax = 6.1;
// Upper limit for single-argument integrands: 1 - t >= ~1e-15.
constexpr double kSingleUMax = 3.09;
constexpr std::size_t kInitialPieces = 12;
constexpr std::size_t kMaxIntervals = 50000;

struct Piece {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
  bool roundoff_limited;
};

struct ByError {
  bool operator()(const Piece& a, const Piece& b) const { return a.error < b.error; }
};

// Integrand in the u variable, including the Jacobian of the tanh-sinh map.
class MappedIntegrand {
 public:
  explicit MappedIntegrand(const SplitUnitIntegrand& f) : f_(f) {}

  double operator()(double u) {
    const double x = std::numbers::pi / 2.0 * std::sinh(u);
    const double e = std::exp(-2.0 * std::fabs(x));
    const double small = e / (1.0 + e);
    const double large = 1.0 / (1.0 + e);
    const double t = x >= 0.0 ? large : small;
    const double tc = x >= 0.0 ? small : large;
    if (t <= 0.0 || tc <= 0.0) {
      return 0.0;
    }
    const double weight = std::numbers::pi * std::cosh(u) * t * tc;
    ++evaluations;
    const double fx = f_(t, tc);
    if (!std::isfinite(fx)) {
      non_finite = true;
      return 0.0;
    }
    return fx * weight;
  }

  std::size_t evaluations = 0;
  bool non_finite = false;

 private:
  const SplitUnitIntegrand& f_;
};

Piece gauss_kronrod(MappedIntegrand& g, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = g(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(kronrod);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = g(center - dx);
    const double f2 = g(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * (f1 + f2);
    }
  }
  Piece p{lo, hi, kronrod * half, std::fabs((kronrod - gauss) * half), depth, false};
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * half;
  if (p.error <= roundoff) {
    p.error = roundoff;
    p.roundoff_limited = true;
  }
  return p;
}

QuadratureResult adaptive(const SplitUnitIntegrand& f, double u_lo, double u_hi, double abs_tol) {
  if (!(abs_tol > 0.0)) {
    throw std::invalid_argument("integrate_unit: abs_tol must be positive");
  }
  MappedIntegrand g(f);
  std::priority_queue<Piece, std::vector<Piece>, ByError> open;
  std::vector<Piece> settled;
  const double step = (u_hi - u_lo) / static_cast<double>(kInitialPieces);
  for (std::size_t i = 0; i < kInitialPieces; ++i) {
    const double lo = u_lo + step * static_cast<double>(i);
    const double hi = i + 1 == kInitialPieces ? u_hi : lo + step;
    open.push(gauss_kronrod(g, lo, hi, 0));
  }

  auto totals = [&] {
    QuadratureResult r;
    // Sum in a fixed order so results do not depend on heap layout.
    std::vector<Piece> all = settled;
    auto copy = open;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (const Piece& p : all) {
      r.value += p.value;
      r.error_estimate += p.error;
    }
    r.evaluations = g.evaluations;
    return r;
  };

  double error_sum = 0.0;
  {
    auto copy = open;
    while (!copy.empty()) {
      error_sum += copy.top().error;
      copy.pop();
    }
  }

  while (error_sum > abs_tol && !open.empty()) {
    Piece worst = open.top();
    open.pop();
    if (worst.roundoff_limited) {
      settled.push_back(worst);
      continue;
    }
    if (worst.depth >= kMaxBisectionDepth || open.size() + settled.size() + 2 > kMaxIntervals) {
      open.push(worst);
      throw QuadratureFailure("integrate_unit: no convergence within the subdivision budget",
                              totals());
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Piece left = gauss_kronrod(g, worst.lo, mid, worst.depth + 1);
    const Piece right = gauss_kronrod(g, mid, worst.hi, worst.depth + 1);
    error_sum += left.error + right.error - worst.error;
    open.push(left);
    open.push(right);
    if (g.non_finite) {
      throw QuadratureFailure("integrate_unit: integrand returned a non-finite value", totals());
    }
    // Re-sum periodically to keep cancellation in the running total from drifting.
    if ((open.size() & 63U) == 0) {
      error_sum = totals().error_estimate;
    }
  }
  if (g.non_finite) {
    throw QuadratureFailure("integrate_unit: integrand returned a non-finite value", totals());
  }
  return totals();
}

}  // namespace

QuadratureResult integrate_unit(const SplitUnitIntegrand& f, double abs_tol) {
  return adaptive(f, -kSplitUMax, kSplitUMax, abs_tol);
}

QuadratureResult integrate_unit(const UnitIntegrand& f, double abs_tol) {
  const SplitUnitIntegrand wrapped = [&f](double t, double) { return f(t); };
  return adaptive(wrapped, -kSplitUMax, kSingleUMax, abs_tol);
}

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol) {
  if (!(a < b)) {
    throw std::invalid_argument("integrate_interval: require a < b");
  }
  const bool lo_inf = std::isinf(a);
  const bool hi_inf = std::isinf(b);
  // Divide rather than multiply by the Jacobian: 1/t^2 overflows near the ends of (0,1).
  SplitUnitIntegrand mapped;
  if (!lo_inf && !hi_inf) {
    const double width = b - a;
    mapped = [&f, a, b, width](double t, double tc) {
      const double x = t <= 0.5 ? a + width * t : b - width * tc;
      return f(x) * width;
    };
  } else if (!lo_inf) {
    mapped = [&f, a](double t, double tc) { return f(a + t / tc) / tc / tc; };
  } else if (!hi_inf) {
    mapped = [&f, b](double t, double tc) { return f(b - tc / t) / t / t; };
  } else {
    mapped = [&f](double t, double tc) {
      const double fx = f(1.0 / tc - 1.0 / t);
      return fx / tc / tc + fx / t / t;
    };
  }
  return integrate_unit(mapped, abs_tol);
}

}  // namespace extremal::numerics
