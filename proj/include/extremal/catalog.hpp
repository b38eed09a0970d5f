#pragma once

#include <vector>

#include "extremal/distribution.hpp"

namespace extremal {

/// The versioned canonical parameter sets in config/canonical_params.json,
/// embedded at build time.
struct Catalog {
  int version = 0;
  std::vector<long> table_n;
  std::vector<dist::DistributionSpec> members;
  std::vector<dist::DistributionSpec> mc_members;
  std::vector<long> mc_n;
  std::vector<double> gev_concavity_xi;
};

const Catalog& canonical_catalog();

}  // namespace extremal
