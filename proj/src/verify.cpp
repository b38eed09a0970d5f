#include "extremal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "extremal/bounds.hpp"
#include "extremal/catalog.hpp"
#include "extremal/concavity.hpp"
#include "extremal/convergence.hpp"
#include "extremal/measures.hpp"
#include "extremal/monte_carlo.hpp"
#include "extremal/norming.hpp"
#include "extremal/quadrature.hpp"
#include "extremal/special.hpp"

namespace extremal {

namespace {

using dist::DistributionSpec;
using dist::Family;

constexpr std::size_t kMaxMessages = 8;

class Recorder {
 public:
  explicit Recorder(std::string name) { g_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++g_.checks;
    if (!ok) {
      ++g_.failures;
      if (g_.messages.size() < kMaxMessages) {
        g_.messages.push_back(what);
      }
    }
  }

  void near(double got, double want, double tol, const std::string& what) {
    const bool ok = std::abs(got - want) <= tol;
    if (ok) {
      check(true, what);
      return;
    }
    std::ostringstream os;
    os << what << ": got " << format_number(got) << ", want " << format_number(want) << " (tol "
       << tol << ")";
    check(false, os.str());
  }

  template <class F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, what + ": " + e.what());
    }
  }

  InvariantGroup take() { return std::move(g_); }

 private:
  InvariantGroup g_;
};

std::string label(const DistributionSpec& d, long n) {
  return d.describe() + " n=" + std::to_string(n);
}

InvariantGroup special_group() {
  Recorder r("special");
  double prev = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= 2000; ++n) {
    const double v = special::harmonic(n) - std::log(static_cast<double>(n));
    r.check(v < prev && v > special::euler_gamma(), "harmonic(n) - ln n decreasing to gamma at n=" + std::to_string(n));
    prev = v;
  }
  r.near(special::harmonic(special::kHarmonicExactLimit + 1) - special::harmonic(special::kHarmonicExactLimit),
         1.0 / static_cast<double>(special::kHarmonicExactLimit + 1), 1e-12, "harmonic switchover");
  for (long n = 0; n <= 60; ++n) {
    const double gap = std::log(2.0) - special::half_geometric_sum(n);
    r.check(gap >= 0.0 && gap <= std::ldexp(1.0, -static_cast<int>(n)) + 1e-16,
            "half_geometric_sum gap at n=" + std::to_string(n));
  }
  for (long n = 1; n <= 50; ++n) {
    r.check(special::beta_n1_log_moment(n) + special::harmonic(n) == 0.0, "beta log moment n=" + std::to_string(n));
    const double x = static_cast<double>(n) + 0.37;
    r.near(special::digamma(x + 1.0) - special::digamma(x), 1.0 / x, 1e-12, "digamma recurrence");
  }
  return r.take();
}

InvariantGroup appendix_group(double tol) {
  Recorder r("appendix_quadrature");
  using special::AppendixKind;
  for (long n = 1; n <= 20; ++n) {
    const double nn = static_cast<double>(n);
    r.guarded("appendix n=" + std::to_string(n), [&] {
      auto lower = numerics::integrate_interval(
          [&](double y) { return nn * std::pow(y, nn - 1.0) * std::log(y); }, 0.0, 0.5, tol * 0.1);
      r.near(lower.value, special::lower_half_log(n), 1e-10, "lower_half_log n=" + std::to_string(n));
      auto plog = numerics::integrate_unit(
          numerics::UnitIntegrand([&](double y) { return std::pow(y, nn - 1.0) * std::log(y); }), tol * 0.1);
      r.near(plog.value, special::power_log(n), 1e-10, "power_log n=" + std::to_string(n));
      auto ploglog = numerics::integrate_unit(
          numerics::SplitUnitIntegrand([&](double y, double yc) {
            const double l = y < 0.5 ? -std::log(y) : -std::log1p(-yc);
            return std::pow(y, nn - 1.0) * std::log(l);
          }),
          tol * 0.1);
      r.near(ploglog.value, special::power_loglog(n), 1e-10, "power_loglog n=" + std::to_string(n));
    });
  }
  for (double nu : {0.5, 1.0, 2.0, 3.5}) {
    for (double mu : {0.5, 1.0, 2.0, 3.5}) {
      r.guarded("power_logpow", [&] {
        auto q = numerics::integrate_unit(numerics::SplitUnitIntegrand([&](double x, double xc) {
                                            const double l = x < 0.5 ? -std::log(x) : -std::log1p(-xc);
                                            return std::pow(x, nu - 1.0) * std::pow(l, mu - 1.0);
                                          }),
                                          tol * 0.1);
        r.near(q.value, special::power_logpow(nu, mu), 1e-10, "power_logpow");
      });
    }
  }
  return r.take();
}

std::vector<double> support_grid(const DistributionSpec& d, std::size_t count) {
  // Quantiles of an even probability grid keep every point inside the support.
  std::vector<double> grid;
  for (double t : numerics::interior_grid(0.0, 1.0, count)) {
    grid.push_back(dist::quantile(d, t));
  }
  return grid;
}

InvariantGroup distributions_group(const Catalog& cat) {
  Recorder r("distributions");
  for (const auto& d : cat.members) {
    r.guarded(d.describe(), [&] {
      for (double t : numerics::interior_grid(0.0, 1.0, 101)) {
        const double x = dist::quantile(d, t);
        r.near(dist::cdf(d, x), t, 1e-10, d.describe() + " cdf(quantile)");
        r.near(dist::density_quantile(d, t), dist::pdf(d, x), 1e-10 * std::max(1.0, dist::pdf(d, x)),
               d.describe() + " I(F(x)) = f(x)");
      }
      if (dist::is_log_concave(d)) {
        const auto tgrid = numerics::interior_grid(0.0, 1.0, 999);
        const double ih = dist::density_quantile(d, 0.5);
        for (double t : tgrid) {
          r.check(dist::density_quantile(d, t) >= 2.0 * ih * std::min(t, 1.0 - t) * (1.0 - 1e-12),
                  d.describe() + " Bobkov envelope");
        }
        const double h = 1.0 / 1000.0;
        auto ci = numerics::grid_concavity_check([&](double t) { return dist::density_quantile(d, t); },
                                                  tgrid, 1e-9 * h * h);
        r.check(ci.concave, d.describe() + " I concave");
        const auto xgrid = support_grid(d, 201);
        auto cf = numerics::grid_concavity_check([&](double x) { return dist::log_pdf(d, x); }, xgrid, 1e-9);
        r.check(cf.concave, d.describe() + " ln f concave");
      }
    });
  }
  const auto u = DistributionSpec::uniform(1.0);
  const auto p = DistributionSpec::power_function(1.0, 1.0);
  for (double t : numerics::interior_grid(0.0, 1.0, 99)) {
    r.near(dist::pdf(p, t), dist::pdf(u, t), 1e-12, "power(1,1) pdf");
    r.near(dist::cdf(p, t), dist::cdf(u, t), 1e-12, "power(1,1) cdf");
    r.near(dist::density_quantile(p, t), dist::density_quantile(u, t), 1e-12, "power(1,1) I");
  }
  return r.take();
}

InvariantGroup closed_vs_quadrature_group(const Catalog& cat, double tol) {
  Recorder r("closed_vs_quadrature");
  std::vector<DistributionSpec> members = cat.members;
  members.push_back(DistributionSpec::gev(1.0));
  for (const auto& d : members) {
    for (long n : cat.table_n) {
      r.guarded(label(d, n), [&] {
        const auto h = measures::cross_check_shannon(d, n, tol);
        r.near(h.quadrature, h.closed, 1e-8, "H " + label(d, n));
        const auto j = measures::cross_check_extropy(d, n, tol);
        r.near(j.quadrature, j.closed, 1e-8, "J " + label(d, n));
      });
    }
  }
  for (long n = 1; n <= 20; ++n) {
    for (double th : {0.5, 2.0, 3.0}) {
      const auto e1 = DistributionSpec::exponential(1.0);
      const auto et = DistributionSpec::exponential(th);
      r.near(measures::shannon_closed(et, n), measures::shannon_closed(e1, n) - std::log(th), 1e-12,
             "exponential entropy scale law");
      r.near(measures::extropy_closed(et, n), th * measures::extropy_closed(e1, n), 1e-12,
             "exponential extropy scale law");
    }
  }
  return r.take();
}

InvariantGroup bounds_group(const Catalog& cat) {
  Recorder r("bounds_ordering");
  for (const auto& d : cat.members) {
    if (!dist::is_log_concave(d)) {
      continue;
    }
    for (long n = 1; n <= 200; ++n) {
      const auto h = bounds::shannon_bounds(d, n);
      if (h.lower_applicable) {
        r.check(h.lower_holds, "H lower " + label(d, n));
      }
      r.check(h.upper_holds, "H upper " + label(d, n));
      const auto j = bounds::extropy_bounds(d, n);
      r.check(j.lower_holds && j.upper_holds, "J bounds " + label(d, n));
    }
  }
  for (const auto& d : cat.members) {
    if (d.family() != Family::pareto) {
      continue;
    }
    for (long n = 100; n <= 200; ++n) {
      r.check(measures::shannon_closed(d, n) > bounds::shannon_limit_upper(d),
              "Pareto exceeds the limiting ceiling " + label(d, n));
    }
  }
  return r.take();
}

InvariantGroup bound_limits_group(const Catalog& cat) {
  Recorder r("bound_limits");
  constexpr long n = 100000;
  for (const auto& d : cat.members) {
    r.near(bounds::shannon_upper_bound(d, n), bounds::shannon_limit_upper(d), 1e-6,
           "entropy upper bound limit " + d.describe());
    r.near(bounds::extropy_upper_bound(d, n), bounds::extropy_limit_upper(d), 1e-6,
           "extropy upper bound limit " + d.describe());
  }
  return r.take();
}

InvariantGroup characterization_group(const Catalog& cat) {
  Recorder r("characterization");
  for (const auto& d : cat.members) {
    const auto s = bounds::exponential_gap(d, {1000, 1000000});
    r.check(s.attaining == (d.family() == Family::exponential), "attainment flag " + d.describe());
  }
  return r.take();
}

InvariantGroup evt_group(const Catalog& cat) {
  Recorder r("evt");
  for (double th : {0.5, 1.0, 2.0}) {
    const auto d = DistributionSpec::exponential(th);
    const auto t = evt::gumbel_targets();
    r.near(measures::shannon_normalized(d, 1000000).value.value(), t.h, 1e-5, "Gumbel H " + d.describe());
    r.near(measures::extropy_normalized(d, 1000000).value.value(), t.j.value(), 1e-5, "Gumbel J " + d.describe());
  }
  for (const auto& d : cat.members) {
    const auto doa = evt::mda_classify(d);
    const auto c = evt::norming_constants(d, 10000);
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      double x = 0.0;
      switch (doa.domain) {
        case evt::MaxDomain::gumbel:
          x = -2.0 + 0.3 * i;
          break;
        case evt::MaxDomain::frechet:
          x = 0.2 + 0.2 * i;
          break;
        case evt::MaxDomain::reversed_weibull:
          x = -4.0 + 0.19 * i;
          break;
      }
      const double fn = std::exp(1e4 * dist::log_cdf(d, c.a_n * x + c.b_n));
      worst = std::max(worst, std::abs(fn - evt::limit_cdf(doa, x)));
    }
    r.check(worst < 0.01, "F^n(a x + b) -> G " + d.describe());

    const auto shifted = evt::NormingConstants{c.a_n, c.b_n + 17.0, c.domain, c.xi};
    r.check(measures::shannon_normalized(d, 10000, c).value == measures::shannon_normalized(d, 10000, shifted).value,
            "b_n irrelevance " + d.describe());
  }
  for (double xi : {-0.5, 0.0, 0.5}) {
    const auto d = DistributionSpec::gev(xi);
    const auto t = evt::limit_targets(evt::mda_classify(d));
    for (long n : {2L, 10L, 1000L, 1000000L}) {
      r.near(measures::shannon_normalized(d, n).value.value(), t.h, 1e-12, "max-stable H " + label(d, n));
      r.near(measures::extropy_normalized(d, n).value.value(), t.j.value(), 1e-12, "max-stable J " + label(d, n));
    }
  }
  return r.take();
}

InvariantGroup monte_carlo_group(const Catalog& cat, const VerifyOptions& opts) {
  Recorder r("monte_carlo");
  constexpr int kSeeds = 20;
  for (const auto& d : cat.mc_members) {
    for (long n : cat.mc_n) {
      int h_pass = 0;
      int j_pass = 0;
      const double h = measures::shannon_closed(d, n);
      const double j = measures::extropy_closed(d, n);
      for (int s = 0; s < kSeeds; ++s) {
        const auto seed = opts.seed + static_cast<std::uint64_t>(s);
        const auto eh = numerics::mc_entropy_max(d, n, opts.mc_samples, seed);
        const auto ej = numerics::mc_extropy_max(d, n, opts.mc_samples, seed);
        h_pass += numerics::within_standard_errors(eh, h);
        j_pass += numerics::within_standard_errors(ej, j);
      }
      r.check(h_pass >= kSeeds - 1, "MC entropy " + label(d, n) + " passed " + std::to_string(h_pass) + "/20");
      r.check(j_pass >= kSeeds - 1, "MC extropy " + label(d, n) + " passed " + std::to_string(j_pass) + "/20");
    }
  }
  return r.take();
}

}  // namespace

std::vector<InvariantGroup> run_verification(const VerifyOptions& opts) {
  const Catalog& cat = canonical_catalog();
  std::vector<InvariantGroup> groups;
  groups.push_back(special_group());
  groups.push_back(appendix_group(opts.quad_tol));
  groups.push_back(distributions_group(cat));
  groups.push_back(closed_vs_quadrature_group(cat, opts.quad_tol));
  groups.push_back(bounds_group(cat));
  groups.push_back(bound_limits_group(cat));
  groups.push_back(characterization_group(cat));
  groups.push_back(evt_group(cat));
  groups.push_back(monte_carlo_group(cat, opts));
  return groups;
}

}  // namespace extremal
