#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "extremal/distribution.hpp"

namespace extremal::numerics {

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

enum class Execution { serial, parallel };

inline constexpr std::size_t kMinMcSamples = 100;
/// Draws per independently seeded chunk.
inline constexpr std::size_t kMcChunk = 4096;

std::uint64_t splitmix64(std::uint64_t x);

/// Seedable stream of uniform variates on the open interval (0,1).
///
/// The engine is std::mt19937_64. A variate is ((w >> 11) + 0.5) * 2^-53 for a
/// 64-bit word w, so 0 and 1 are never produced.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Stream for chunk k of a run with the given seed: the engine is seeded with
/// splitmix64(seed + k * 0x9E3779B97F4A7C15). Chunk k always covers draws
/// [k * kMcChunk, (k + 1) * kMcChunk), whatever the thread count.
Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk);

/// F^{-1}(v^{1/n}), with 1 - v^{1/n} formed by expm1 so large n keeps precision.
double maximum_from_uniform(const dist::DistributionSpec& d, long n, double v);
/// One draw of the maximum of n iid copies.
double sample_maximum(const dist::DistributionSpec& d, long n, Rng& rng);
/// The first `count` draws of the run with this seed, in chunk order.
std::vector<double> sample_maxima(const dist::DistributionSpec& d, long n, std::size_t count,
                                  std::uint64_t seed);

/// Plug-in estimate of -E[ln f_max(X)], f_max = n F^{n-1} f.
McEstimate mc_entropy_max(const dist::DistributionSpec& d, long n, std::size_t samples,
                          std::uint64_t seed, Execution exec = Execution::parallel);
/// Plug-in estimate of -E[f_max(X)] / 2.
McEstimate mc_extropy_max(const dist::DistributionSpec& d, long n, std::size_t samples,
                          std::uint64_t seed, Execution exec = Execution::parallel);

/// |estimate - want| < k * std_error. A zero-variance estimator (uniform, n = 1)
/// passes when it agrees with `want` to 1e-12 relative.
bool within_standard_errors(const McEstimate& e, double want, double k = 3.0);

}  // namespace extremal::numerics
