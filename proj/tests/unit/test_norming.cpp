#include <cmath>

#include "doctest.h"
#include "extremal/catalog.hpp"
#include "extremal/convergence.hpp"
#include "extremal/measures.hpp"
#include "extremal/norming.hpp"

using namespace extremal;
using dist::DistributionSpec;
using evt::MaxDomain;

namespace {

constexpr double kGamma = 0.57721566490153286;

std::vector<double> x_grid(MaxDomain dom) {
  std::vector<double> xs;
  for (int i = 0; i <= 20; ++i) {
    switch (dom) {
      case MaxDomain::gumbel:
        xs.push_back(-2.0 + 0.3 * i);
        break;
      case MaxDomain::frechet:
        xs.push_back(0.2 + 0.2 * i);
        break;
      case MaxDomain::reversed_weibull:
        xs.push_back(-4.0 + 0.19 * i);
        break;
    }
  }
  return xs;
}

}  // namespace

TEST_CASE("domain classification") {
  auto check = [](const DistributionSpec& d, MaxDomain dom, double xi) {
    const auto r = evt::mda_classify(d);
    CHECK(r.domain == dom);
    CHECK(r.xi == doctest::Approx(xi));
  };
  check(DistributionSpec::exponential(3), MaxDomain::gumbel, 0);
  check(DistributionSpec::logistic(1), MaxDomain::gumbel, 0);
  check(DistributionSpec::uniform(1), MaxDomain::reversed_weibull, -1);
  check(DistributionSpec::pareto(1, 2), MaxDomain::frechet, 0.5);
  check(DistributionSpec::power_function(1, 3), MaxDomain::reversed_weibull, -1);
  check(DistributionSpec::gev(0.3), MaxDomain::frechet, 0.3);
  check(DistributionSpec::gev(-0.3), MaxDomain::reversed_weibull, -0.3);
  check(DistributionSpec::gev(0), MaxDomain::gumbel, 0);
}

TEST_CASE("norming constant values") {
  CHECK(evt::norming_constants(DistributionSpec::exponential(2), 7).a_n == 0.5);
  CHECK(evt::norming_constants(DistributionSpec::exponential(2), 1000).a_n == 0.5);
  const auto u = evt::norming_constants(DistributionSpec::uniform(1), 10);
  CHECK(u.a_n == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(u.b_n == 1.0);
  const auto p = evt::norming_constants(DistributionSpec::pareto(1, 2), 16);
  CHECK(p.a_n == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(p.b_n == 0.0);
  const auto l = evt::norming_constants(DistributionSpec::logistic(2), 100);
  CHECK(l.a_n == doctest::Approx(100.0 / (2.0 * 99)).epsilon(1e-12));
  CHECK(l.b_n == doctest::Approx(std::log(99.0) / 2).epsilon(1e-12));
  CHECK_THROWS_AS(evt::norming_constants(DistributionSpec::exponential(1), 1), std::invalid_argument);
}

TEST_CASE("closed constants agree with the generic recipe") {
  for (const auto& d : canonical_catalog().members) {
    if (d.family() == dist::Family::gev) {
      continue;
    }
    for (long n : {2L, 10L, 1000L}) {
      CAPTURE(d.describe());
      CAPTURE(n);
      const auto a = evt::norming_constants(d, n);
      const auto b = evt::norming_constants_recipe(d, n);
      if (d.family() == dist::Family::exponential) {
        // h(U(n)) = 1/theta for the exponential
        CHECK(b.a_n == doctest::Approx(a.a_n).epsilon(1e-12));
      } else {
        CHECK(b.a_n == doctest::Approx(a.a_n).epsilon(1e-9));
      }
      CHECK(b.b_n == doctest::Approx(a.b_n).epsilon(1e-12));
    }
  }
}

TEST_CASE("F^n(a x + b) approaches the limit law") {
  auto members = canonical_catalog().members;
  for (const auto& d : members) {
    const auto doa = evt::mda_classify(d);
    const auto c = evt::norming_constants(d, 10000);
    double worst = 0.0;
    for (double x : x_grid(doa.domain)) {
      const double fn = std::pow(dist::cdf(d, c.a_n * x + c.b_n), 10000.0);
      worst = std::max(worst, std::abs(fn - evt::limit_cdf(doa, x)));
    }
    CAPTURE(d.describe());
    CHECK(worst < 0.01);
  }
  // exact at every n for GEV parents
  for (double xi : {-0.5, 0.0, 0.5}) {
    const auto d = DistributionSpec::gev(xi);
    const auto doa = evt::mda_classify(d);
    for (long n : {2L, 17L}) {
      const auto c = evt::norming_constants(d, n);
      for (double x : x_grid(doa.domain)) {
        CHECK(std::pow(dist::cdf(d, c.a_n * x + c.b_n), static_cast<double>(n)) ==
              doctest::Approx(evt::limit_cdf(doa, x)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("targets") {
  const auto g = evt::gumbel_targets();
  CHECK(g.h == doctest::Approx(1 + kGamma).epsilon(1e-15));
  CHECK(g.j.value() == -0.125);
  CHECK(g.h == measures::shannon_closed(DistributionSpec::gev(0), 1));
  const auto rw = evt::limit_targets({MaxDomain::reversed_weibull, -1.0});
  CHECK(rw.h == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rw.j.value() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(rw.extension);
  const auto fr = evt::limit_targets({MaxDomain::frechet, 0.5});
  CHECK(fr.h == doctest::Approx(1 + 1.5 * kGamma + std::log(0.5)).epsilon(1e-15));
  CHECK(evt::limit_targets({MaxDomain::reversed_weibull, -2.5}).j.kind() == ExtendedReal::Kind::neg_inf);
}

TEST_CASE("max-stable parents are normalized exactly") {
  for (double xi : {-0.5, 0.0, 0.5, 1.0}) {
    const auto d = DistributionSpec::gev(xi);
    const auto t = evt::limit_targets(evt::mda_classify(d));
    for (long n : {2L, 5L, 100L, 1000000L}) {
      CHECK(measures::shannon_normalized(d, n).value.value() == doctest::Approx(t.h).epsilon(1e-13));
      CHECK(measures::extropy_normalized(d, n).value.value() == doctest::Approx(t.j.value()).epsilon(1e-13));
    }
  }
}

TEST_CASE("convergence studies") {
  const std::vector<long> decades = {10, 100, 1000, 10000, 100000, 1000000};
  const auto e = evt::convergence_study(DistributionSpec::exponential(1), decades);
  CHECK_FALSE(e.extension);
  CHECK(e.records.back().h_gap < 1e-5);
  CHECK(e.records.back().j_gap < 1e-5);
  CHECK(e.burn_in == 0);

  const auto l = evt::convergence_study(DistributionSpec::logistic(1), decades);
  CHECK(std::abs(l.records.back().h_normalized - (1 + kGamma)) < 1e-4);

  const auto u = evt::convergence_study(DistributionSpec::uniform(1), decades);
  CHECK(u.extension);
  CHECK(u.records.back().h_target == doctest::Approx(1.0));
  CHECK(u.records.back().j_target == doctest::Approx(-0.25));
  CHECK(u.records.back().h_gap < 1e-4);
  CHECK(u.records.back().j_gap < 1e-4);

  for (const auto& d : canonical_catalog().members) {
    const auto s = evt::convergence_study(d, decades);
    CAPTURE(d.describe());
    for (std::size_t i = s.burn_in + 1; i < s.records.size(); ++i) {
      CHECK(s.records[i].h_gap <= s.records[i - 1].h_gap + 1e-12);
      CHECK(s.records[i].j_gap <= s.records[i - 1].j_gap + 1e-12);
    }
    CHECK(s.records.back().h_gap < 1e-4);
    CHECK(s.records.back().j_gap < 1e-4);
  }

  const auto serial = evt::convergence_study(DistributionSpec::pareto(1, 3), decades, numerics::Execution::serial);
  const auto parallel = evt::convergence_study(DistributionSpec::pareto(1, 3), decades);
  for (std::size_t i = 0; i < decades.size(); ++i) {
    CHECK(serial.records[i].h_normalized == parallel.records[i].h_normalized);
  }
  CHECK_THROWS(evt::convergence_study(DistributionSpec::exponential(1), {}));
  CHECK_THROWS(evt::convergence_study(DistributionSpec::exponential(1), {10, 5}));
  CHECK_THROWS(evt::convergence_study(DistributionSpec::exponential(1), {1, 5}));
}
