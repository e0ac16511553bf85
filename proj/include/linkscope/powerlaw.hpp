#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace linkscope {

struct PowerLawFit {
  double alpha = 0.0;          // estimated exponent, > 1
  std::uint32_t xmin = 1;      // lower cutoff (caller-supplied, not optimized)
  std::uint64_t n_tail = 0;    // samples with x >= xmin
  double ks_distance = 0.0;    // max |empirical - fitted| tail CDF deviation
};

// Maximum-likelihood exponent for the tail x >= xmin, fitted to the integer
// family produced by rounding a shifted continuous Pareto:
//   P(X = k) ∝ (k - 0.5)^(1-alpha) - (k + 0.5)^(1-alpha),  k >= xmin.
// This is the exact distribution of synth_power_law_sample, so recovery is
// unbiased without zeta-function machinery. Solved by bisection on the
// log-likelihood derivative. Throws PowerLawError when fewer than 2 samples
// reach xmin or when all tail samples equal xmin (alpha diverges).
PowerLawFit fit_power_law(std::span<const std::uint32_t> samples, std::uint32_t xmin = 1);

// Inverse-transform sampling of the continuous Pareto with rounding:
//   x = floor((xmin - 0.5) * (1 - u)^(-1/(alpha-1)) + 0.5)
// with u drawn from a seeded mt19937_64 as (rng() >> 11) * 2^-53. Values
// beyond the uint32 range saturate. Identical (alpha, xmin, n, seed) give
// identical sequences. Throws PowerLawError unless alpha > 1, xmin >= 1,
// n >= 1.
std::vector<std::uint32_t> synth_power_law_sample(double alpha, std::uint32_t xmin,
                                                  std::size_t n, std::uint64_t seed);

// Max deviation between the empirical tail CDF of samples (restricted to
// x >= xmin) and the fitted CDF
//   F(k) = 1 - ((k + 0.5)/(xmin - 0.5))^(1-alpha),
// evaluated over the integer support. Throws PowerLawError on an empty tail.
double ks_distance(std::span<const std::uint32_t> samples, double alpha, std::uint32_t xmin);

}  // namespace linkscope
