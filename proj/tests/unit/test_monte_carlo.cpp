#include <cmath>

#include "doctest.h"
#include "extremal/catalog.hpp"
#include "extremal/measures.hpp"
#include "extremal/monte_carlo.hpp"
#include "oracles.hpp"

using namespace extremal;
using dist::DistributionSpec;
using numerics::Execution;

TEST_CASE("maximum from a uniform variate") {
  CHECK(numerics::maximum_from_uniform(DistributionSpec::uniform(1), 1, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(numerics::maximum_from_uniform(DistributionSpec::uniform(1), 2, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
  // huge n pushes v^{1/n} to within 1e-13 of one; the tail stays resolved
  const double x = numerics::maximum_from_uniform(DistributionSpec::exponential(1), 1000000000000L, 0.5);
  CHECK(x == doctest::Approx(std::log(1e12) - std::log(std::log(2.0))).epsilon(1e-10));
}

TEST_CASE("uniform stream is open and reproducible") {
  numerics::Rng a(42);
  numerics::Rng b(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = a.uniform();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
  }
  const auto s1 = numerics::sample_maxima(DistributionSpec::exponential(1), 4, 10000, 7);
  const auto s2 = numerics::sample_maxima(DistributionSpec::exponential(1), 4, 10000, 7);
  const auto s3 = numerics::sample_maxima(DistributionSpec::exponential(1), 4, 10000, 8);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  CHECK(numerics::splitmix64(0) == 0xE220A8397B1DCDAFULL);
}

TEST_CASE("sampled maxima follow F^n") {
  const auto d = DistributionSpec::exponential(1);
  const auto xs = numerics::sample_maxima(d, 4, 100000, 0);
  const double ks = oracle::ks_distance(xs, [](double x) { return std::pow(1 - std::exp(-x), 4); });
  CHECK(ks < 0.01);
  const auto g = DistributionSpec::gev(0.5);
  const auto ys = numerics::sample_maxima(g, 3, 50000, 1);
  CHECK(oracle::ks_distance(ys, [&](double x) { return std::pow(dist::cdf(g, x), 3); }) < 0.01);
}

TEST_CASE("estimators near the closed forms") {
  auto within = [](const numerics::McEstimate& e, double want) { return numerics::within_standard_errors(e, want); };
  CHECK(within(numerics::mc_entropy_max(DistributionSpec::uniform(1), 1, 100000, 0), 0.0));
  CHECK(within(numerics::mc_entropy_max(DistributionSpec::exponential(1), 1, 100000, 0), 1.0));
  CHECK(within(numerics::mc_entropy_max(DistributionSpec::exponential(1), 10, 100000, 0),
               1 - std::log(10.0) - 0.1 + oracle::harmonic_sum(10)));
  CHECK(within(numerics::mc_extropy_max(DistributionSpec::uniform(1), 1, 100000, 0), -0.5));
  CHECK(within(numerics::mc_extropy_max(DistributionSpec::exponential(1), 1, 100000, 0), -0.25));
  CHECK(within(numerics::mc_extropy_max(DistributionSpec::gev(0), 3, 100000, 0), -0.125));
}

TEST_CASE("thread count does not change results") {
  for (const auto& d : canonical_catalog().mc_members) {
    const auto a = numerics::mc_entropy_max(d, 5, 50000, 3, Execution::serial);
    const auto b = numerics::mc_entropy_max(d, 5, 50000, 3, Execution::parallel);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    const auto c = numerics::mc_extropy_max(d, 5, 50000, 3, Execution::serial);
    const auto e = numerics::mc_extropy_max(d, 5, 50000, 3, Execution::parallel);
    CHECK(c.estimate == e.estimate);
  }
  const auto r = numerics::mc_entropy_max(DistributionSpec::logistic(1), 2, 12345, 9);
  CHECK(r.samples == 12345);
  CHECK(r.seed == 9);
  CHECK(r.std_error > 0.0);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(numerics::mc_entropy_max(DistributionSpec::uniform(1), 1, 99, 0), std::invalid_argument);
  CHECK_THROWS_AS(numerics::mc_extropy_max(DistributionSpec::uniform(1), 0, 1000, 0), std::invalid_argument);
}

// Every (member, n, measure) cell over 100 seeds: within 3 standard errors in at least 99.
TEST_CASE("replicated agreement over 100 seeds") {
  const auto& cat = canonical_catalog();
  int cells = 0;
  int failed_cells = 0;
  for (const auto& d : cat.mc_members) {
    for (long n : cat.mc_n) {
      const double h = measures::shannon_closed(d, n);
      const double j = measures::extropy_closed(d, n);
      int h_ok = 0;
      int j_ok = 0;
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto eh = numerics::mc_entropy_max(d, n, 100000, seed);
        const auto ej = numerics::mc_extropy_max(d, n, 100000, seed);
        h_ok += numerics::within_standard_errors(eh, h);
        j_ok += numerics::within_standard_errors(ej, j);
      }
      CAPTURE(d.describe());
      CAPTURE(n);
      CHECK(h_ok >= 99);
      CHECK(j_ok >= 99);
      cells += 2;
      failed_cells += (h_ok < 99) + (j_ok < 99);
    }
  }
  MESSAGE(failed_cells << " of " << cells << " cells below 99/100");
}
