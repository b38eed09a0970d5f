#pragma once

#include <string>

#include "json.hpp"

#include "extremal/distribution.hpp"

namespace extremal::dist {

/// Builds a spec from {"family": ..., "theta": ..., "nu": ..., "xi": ...}.
///
/// theta defaults to 1 for the families that take it; nu is required for the
/// Pareto and power function, xi for the GEV. Unknown or inapplicable fields
/// throw std::invalid_argument.
DistributionSpec from_json(const nlohmann::json& j);
/// Parses JSON text, then calls from_json.
DistributionSpec parse_distribution(const std::string& text);

nlohmann::json to_json(const DistributionSpec& d);

}  // namespace extremal::dist
