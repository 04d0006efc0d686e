#pragma once

#include <cstdint>
#include <vector>

// Counter-based deterministic random sampling: every draw is a pure function
// of (seed, counter), so experiments are reproducible regardless of
// evaluation order and streams can be split per task.

namespace rsl::rng {

// splitmix64 finalizer over seed and counter.
inline uint64_t mix(uint64_t seed, uint64_t counter) {
    uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// uniform in (0, 1)
inline double uniform01(uint64_t seed, uint64_t counter) {
    return (static_cast<double>(mix(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

// standard normal via Box-Muller on counters (2k, 2k+1)
double gaussian(uint64_t seed, uint64_t counter);

// uniform point on S^{dim-1} (dim components), Gaussian normalization;
// consumes counters [counter*2*dim, (counter+1)*2*dim)
std::vector<double> unit_vector(int dim, uint64_t seed, uint64_t counter);

}  // namespace rsl::rng
