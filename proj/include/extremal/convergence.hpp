#pragma once

#include <cstddef>
#include <vector>

#include "extremal/distribution.hpp"
#include "extremal/monte_carlo.hpp"
#include "extremal/norming.hpp"

namespace extremal::evt {

struct ConvergenceRecord {
  long n;
  double h_normalized;
  double j_normalized;
  double h_target;
  double j_target;
  double h_gap;  // |h_normalized - h_target|
  double j_gap;
};

struct ConvergenceStudy {
  DomainOfAttraction domain;
  std::vector<ConvergenceRecord> records;
  /// First index from which both gap sequences are non-increasing (1e-12 slack).
  std::size_t burn_in = 0;
  /// Targets come from the non-Gumbel limit laws.
  bool extension = false;
};

/// Closed-form normalized measures over an increasing grid of n >= 2.
/// Rows are computed independently and stored in grid order.
ConvergenceStudy convergence_study(const dist::DistributionSpec& d, const std::vector<long>& n_grid,
                                   numerics::Execution exec = numerics::Execution::parallel);

}  // namespace extremal::evt
