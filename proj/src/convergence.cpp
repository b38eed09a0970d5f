#include "extremal/convergence.hpp"

#include <cmath>
#include <stdexcept>

#include "extremal/measures.hpp"

namespace extremal::evt {

namespace {

constexpr double kMonotoneSlack = 1e-12;

ConvergenceRecord row(const dist::DistributionSpec& d, long n, const Targets& t) {
  const NormingConstants c = norming_constants(d, n);
  const double h = measures::shannon_normalized(d, n, c).value.value();
  const double j = measures::extropy_normalized(d, n, c).value.value();
  const double jt = t.j.value();
  return {n, h, j, t.h, jt, std::abs(h - t.h), std::abs(j - jt)};
}

}  // namespace

ConvergenceStudy convergence_study(const dist::DistributionSpec& d, const std::vector<long>& n_grid,
                                   numerics::Execution exec) {
  if (n_grid.empty()) {
    throw std::invalid_argument("n grid must not be empty");
  }
  for (std::size_t i = 0; i < n_grid.size(); ++i) {
    if (n_grid[i] < 2 || (i > 0 && n_grid[i] <= n_grid[i - 1])) {
      throw std::invalid_argument("n grid must be increasing with n >= 2");
    }
  }

  ConvergenceStudy study;
  study.domain = mda_classify(d);
  const Targets targets = limit_targets(study.domain);
  study.extension = targets.extension;
  study.records.resize(n_grid.size());

  const long long count = static_cast<long long>(n_grid.size());
  if (exec == numerics::Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      study.records[static_cast<std::size_t>(i)] = row(d, n_grid[static_cast<std::size_t>(i)], targets);
    }
  } else {
    for (long long i = 0; i < count; ++i) {
      study.records[static_cast<std::size_t>(i)] = row(d, n_grid[static_cast<std::size_t>(i)], targets);
    }
  }

  std::size_t burn = study.records.size() - 1;
  while (burn > 0) {
    const auto& prev = study.records[burn - 1];
    const auto& cur = study.records[burn];
    if (cur.h_gap > prev.h_gap + kMonotoneSlack || cur.j_gap > prev.j_gap + kMonotoneSlack) {
      break;
    }
    --burn;
  }
  study.burn_in = burn;
  return study;
}

}  // namespace extremal::evt
