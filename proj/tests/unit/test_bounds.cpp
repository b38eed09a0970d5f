#include <cmath>

#include "doctest.h"
#include "extremal/bounds.hpp"
#include "extremal/catalog.hpp"
#include "extremal/concavity.hpp"
#include "extremal/measures.hpp"
#include "extremal/special.hpp"
#include "oracles.hpp"

using namespace extremal;
using dist::DistributionSpec;

namespace {

constexpr double kGamma = 0.57721566490153286;

// the finite-n bounds written out with direct sums
double shannon_upper_oracle(double i_half, long n) {
  const double nn = static_cast<double>(n);
  return 1 - std::log(2 * i_half) - std::log(nn) - 1 / nn + std::log(2.0) + oracle::harmonic_sum(n) -
         oracle::half_geometric(n - 1);
}

double extropy_upper_oracle(double i_half, long n) {
  const double nn = static_cast<double>(n);
  return -nn * nn * i_half *
         (1 / (2 * nn - 1) - 1 / (2 * nn) - 1 / ((2 * nn - 1) * std::pow(2.0, 2 * nn - 1)) +
          2 / (2 * nn * std::pow(2.0, 2 * nn)));
}

}  // namespace

TEST_CASE("bound formulas") {
  for (const auto& d : canonical_catalog().members) {
    const double ih = dist::density_quantile(d, 0.5);
    for (long n : {1L, 2L, 7L, 50L, 200L}) {
      CHECK(bounds::shannon_upper_bound(d, n) == doctest::Approx(shannon_upper_oracle(ih, n)).epsilon(1e-12));
      CHECK(bounds::extropy_upper_bound(d, n) == doctest::Approx(extropy_upper_oracle(ih, n)).epsilon(1e-10));
    }
  }
}

TEST_CASE("shannon bounds examples") {
  const auto r = bounds::shannon_bounds(DistributionSpec::exponential(1), 1);
  CHECK(r.lower.value() == 0.0);
  CHECK(r.value.value() == doctest::Approx(1.0));
  CHECK(r.upper.value() == doctest::Approx(1 + std::log(2.0)).epsilon(1e-15));
  CHECK(r.lower_holds);
  CHECK(r.upper_holds);
  CHECK(r.applicable);

  const auto u = bounds::shannon_bounds(DistributionSpec::uniform(1), 5);
  CHECK(u.value.value() == doctest::Approx(1 - std::log(5.0) - 0.2).epsilon(1e-14));
  CHECK(u.lower_holds);
  CHECK(u.upper_holds);

  const auto p = bounds::shannon_bounds(DistributionSpec::pareto(1, 2), 150);
  CHECK_FALSE(p.applicable);
  CHECK_FALSE(p.gate_note.empty());
  CHECK(p.value.value() > bounds::shannon_limit_upper(DistributionSpec::pareto(1, 2)));

  const auto e3 = bounds::shannon_bounds(DistributionSpec::exponential(3), 1);
  CHECK_FALSE(e3.lower_applicable);
  CHECK(e3.upper_applicable);
  CHECK_FALSE(e3.lower_holds);  // H = 1 - ln 3 < 0
  CHECK(e3.gate_note.find("sup density") != std::string::npos);
}

TEST_CASE("extropy bounds examples") {
  const auto r = bounds::extropy_bounds(DistributionSpec::exponential(1), 1);
  CHECK(r.lower.value() == doctest::Approx(-0.25));
  CHECK(r.value.value() == doctest::Approx(-0.25));
  CHECK(r.upper.value() == doctest::Approx(-0.125));
  CHECK(r.lower_holds);
  const auto e3 = bounds::extropy_bounds(DistributionSpec::exponential(3), 1);
  CHECK(e3.lower.value() == doctest::Approx(-0.75));
  CHECK(e3.value.value() == doctest::Approx(-0.75));
  CHECK(e3.applicable);
  const auto l = bounds::extropy_bounds(DistributionSpec::logistic(1), 10);
  CHECK(l.lower_holds);
  CHECK(l.upper_holds);
}

TEST_CASE("orderings over the log-concave catalog") {
  for (const auto& d : canonical_catalog().members) {
    if (!dist::is_log_concave(d)) {
      continue;
    }
    CAPTURE(d.describe());
    for (long n = 1; n <= 200; ++n) {
      const auto h = bounds::shannon_bounds(d, n);
      if (h.lower_applicable) {
        CHECK(h.lower_holds);
      }
      CHECK(h.upper_holds);
      const auto j = bounds::extropy_bounds(d, n);
      CHECK(j.lower_holds);
      CHECK(j.upper_holds);
    }
  }
}

TEST_CASE("limiting upper bounds") {
  for (double th : {0.5, 1.0, 2.0}) {
    CHECK(bounds::shannon_limit_upper(DistributionSpec::exponential(th)) ==
          doctest::Approx(1 - std::log(th) + kGamma).epsilon(1e-15));
    CHECK(bounds::shannon_limit_upper(DistributionSpec::logistic(th)) ==
          doctest::Approx(1 + std::log(2.0) - std::log(th) + kGamma).epsilon(1e-15));
    CHECK(bounds::extropy_limit_upper(DistributionSpec::exponential(th)) == doctest::Approx(-th / 8));
    CHECK(bounds::extropy_limit_upper(DistributionSpec::uniform(th)) == doctest::Approx(-1 / (4 * th)));
  }
  for (double xi : {-0.5, 0.0}) {
    const auto g = DistributionSpec::gev(xi);
    CHECK(bounds::shannon_limit_upper(g) ==
          doctest::Approx(1 + kGamma - (xi + 1) * std::log(std::log(2.0))).epsilon(1e-14));
    CHECK(bounds::extropy_limit_upper(g) == doctest::Approx(-std::pow(std::log(2.0), xi + 1) / 8).epsilon(1e-14));
  }
  // the finite-n upper bounds tend to these as n grows
  for (const auto& d : canonical_catalog().members) {
    const long n = 10000000;
    CHECK(std::abs(bounds::shannon_upper_bound(d, n) - bounds::shannon_limit_upper(d)) < 1e-6);
    CHECK(std::abs(bounds::extropy_upper_bound(d, n) - bounds::extropy_limit_upper(d)) < 1e-6);
  }
}

TEST_CASE("normalized bounds") {
  const auto e1 = DistributionSpec::exponential(1);
  const auto [h1, j1] = bounds::normalized_bounds(e1, 5);
  const auto h = bounds::shannon_bounds(e1, 5);
  CHECK(h1.lower.value() == doctest::Approx(h.lower.value()));
  CHECK(h1.upper.value() == doctest::Approx(h.upper.value()));

  const auto e2 = DistributionSpec::exponential(2);
  const auto [h2, j2] = bounds::normalized_bounds(e2, 5);
  const auto hb = bounds::shannon_bounds(e2, 5);
  const auto jb = bounds::extropy_bounds(e2, 5);
  CHECK(h2.lower.value() == doctest::Approx(hb.lower.value() + std::log(2.0)));
  CHECK(h2.upper.value() == doctest::Approx(hb.upper.value() + std::log(2.0)));
  CHECK(j2.lower.value() == doctest::Approx(jb.lower.value() / 2));
  CHECK(j2.upper.value() == doctest::Approx(jb.upper.value() / 2));
  CHECK(h2.upper_holds);
  CHECK(j2.lower_holds);
  CHECK(j2.upper_holds);

  for (double th : {0.5, 1.0, 2.0}) {
    const auto [uh, uj] = bounds::normalized_limit_upper(DistributionSpec::exponential(th));
    CHECK(uh.value() == doctest::Approx(1 + kGamma).epsilon(1e-14));
    CHECK(uj.value() == doctest::Approx(-0.125).epsilon(1e-14));
  }
}

TEST_CASE("envelopes") {
  const auto grid = numerics::interior_grid(0.0, 1.0, 999);
  const auto e1 = bounds::envelope_check(DistributionSpec::exponential(1), grid);
  CHECK(e1.bobkov.holds);
  CHECK(e1.unit_lower.holds);
  CHECK(e1.unit_upper.holds);
  CHECK_FALSE(e1.unit_upper.gated);

  const auto e3 = bounds::envelope_check(DistributionSpec::exponential(3), grid);
  CHECK(e3.bobkov.holds);
  CHECK_FALSE(e3.unit_upper.holds);
  CHECK(e3.unit_upper.gated);
  CHECK(e3.unit_upper.worst_t < 0.01);

  // I(1/2) = 1/4 for the standard logistic, below min{t, 1-t} = 1/2 there
  const auto lg = bounds::envelope_check(DistributionSpec::logistic(1), grid);
  CHECK(lg.bobkov.holds);
  CHECK(lg.unit_upper.holds);
  CHECK_FALSE(lg.unit_lower.holds);
  CHECK(lg.unit_lower.worst_t == doctest::Approx(0.5));

  const auto p = bounds::envelope_check(DistributionSpec::pareto(1, 2), grid);
  CHECK(p.bobkov.gated);
}

TEST_CASE("exponential characterization") {
  const std::vector<long> grid = {10, 1000, 1000000};
  for (const auto& d : canonical_catalog().members) {
    const auto s = bounds::exponential_gap(d, grid);
    CAPTURE(d.describe());
    CHECK(s.attaining == (d.family() == dist::Family::exponential));
  }
  const auto e = bounds::exponential_gap(DistributionSpec::exponential(1), grid);
  CHECK(std::abs(e.rows.back().h_gap) < 1e-5);
  CHECK(std::abs(e.rows.back().j_gap) < 1e-5);
  const auto l = bounds::exponential_gap(DistributionSpec::logistic(1), grid);
  CHECK(l.rows.back().h_gap == doctest::Approx(std::log(2.0)).epsilon(1e-5));
  CHECK(l.rows.back().j_gap == doctest::Approx(1.0 / 16).epsilon(1e-5));
  CHECK(bounds::exponential_gap(DistributionSpec::uniform(1), grid).rows.back().h_gap > 10);
  CHECK_THROWS(bounds::exponential_gap(DistributionSpec::uniform(1), {5, 3}));
}
