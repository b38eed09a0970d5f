#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

struct InvariantGroup {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  std::size_t mc_samples = 100000;
  std::uint64_t seed = 0;
  double quad_tol = 1e-10;
};

/// Runs every invariant group over the canonical catalog.
std::vector<InvariantGroup> run_verification(const VerifyOptions& opts = {});

}  // namespace extremal
