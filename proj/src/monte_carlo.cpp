#include "extremal/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace extremal::numerics {

namespace {

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  // Chan et al. pairwise update.
  void merge(const Moments& o) {
    if (o.count == 0) {
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double delta = o.mean - mean;
    const double total = na + nb;
    mean += delta * nb / total;
    m2 += o.m2 + delta * delta * na * nb / total;
    count += o.count;
  }
};

void check_args(long n, std::size_t samples) {
  if (n < 1) {
    throw std::invalid_argument("n must be a positive integer");
  }
  if (samples < kMinMcSamples) {
    throw std::invalid_argument("Monte Carlo needs at least 100 samples");
  }
}

// ln f_max(x) = ln n + (n - 1) ln F(x) + ln f(x)
double log_max_density(const dist::DistributionSpec& d, long n, double x) {
  const double lf = dist::log_pdf(d, x);
  if (n == 1) {
    return lf;
  }
  return std::log(static_cast<double>(n)) + static_cast<double>(n - 1) * dist::log_cdf(d, x) + lf;
}

template <class Score>
McEstimate run(const dist::DistributionSpec& d, long n, std::size_t samples, std::uint64_t seed,
               Execution exec, Score score) {
  check_args(n, samples);
  const std::size_t chunks = (samples + kMcChunk - 1) / kMcChunk;
  std::vector<Moments> parts(chunks);

  auto fill = [&](std::size_t k) {
    Rng rng = chunk_rng(seed, k);
    const std::size_t begin = k * kMcChunk;
    const std::size_t end = std::min(samples, begin + kMcChunk);
    Moments m;
    for (std::size_t i = begin; i < end; ++i) {
      m.push(score(sample_maximum(d, n, rng)));
    }
    parts[k] = m;
  };

  if (exec == Execution::parallel) {
    const long long nchunks = static_cast<long long>(chunks);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < nchunks; ++k) {
      fill(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < chunks; ++k) {
      fill(k);
    }
  }

  Moments total;
  for (const auto& p : parts) {
    total.merge(p);
  }
  const double var = total.m2 / static_cast<double>(total.count - 1);
  return {total.mean, std::sqrt(var / static_cast<double>(total.count)), total.count, seed};
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng chunk_rng(std::uint64_t seed, std::uint64_t chunk) {
  return Rng(splitmix64(seed + chunk * 0x9E3779B97F4A7C15ULL));
}

double maximum_from_uniform(const dist::DistributionSpec& d, long n, double v) {
  if (n < 1) {
    throw std::invalid_argument("n must be a positive integer");
  }
  const double e = std::log(v) / static_cast<double>(n);
  const double t = std::exp(e);
  const double tc = -std::expm1(e);
  return tc < 0.5 ? dist::tail_quantile(d, tc) : dist::quantile(d, t);
}

double sample_maximum(const dist::DistributionSpec& d, long n, Rng& rng) {
  return maximum_from_uniform(d, n, rng.uniform());
}

std::vector<double> sample_maxima(const dist::DistributionSpec& d, long n, std::size_t count,
                                  std::uint64_t seed) {
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = 0; out.size() < count; ++k) {
    Rng rng = chunk_rng(seed, k);
    for (std::size_t i = 0; i < kMcChunk && out.size() < count; ++i) {
      out.push_back(sample_maximum(d, n, rng));
    }
  }
  return out;
}

McEstimate mc_entropy_max(const dist::DistributionSpec& d, long n, std::size_t samples,
                          std::uint64_t seed, Execution exec) {
  return run(d, n, samples, seed, exec, [&](double x) { return -log_max_density(d, n, x); });
}

McEstimate mc_extropy_max(const dist::DistributionSpec& d, long n, std::size_t samples,
                          std::uint64_t seed, Execution exec) {
  return run(d, n, samples, seed, exec,
             [&](double x) { return -0.5 * std::exp(log_max_density(d, n, x)); });
}

bool within_standard_errors(const McEstimate& e, double want, double k) {
  const double dev = std::abs(e.estimate - want);
  return dev < k * e.std_error || dev <= 1e-12 * std::max(1.0, std::abs(want));
}

}  // namespace extremal::numerics
