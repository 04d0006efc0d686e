#include "rsl/rng.hpp"

#include <cmath>

namespace rsl::rng {

double gaussian(uint64_t seed, uint64_t counter) {
    double u1 = uniform01(seed, 2 * counter);
    double u2 = uniform01(seed, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::vector<double> unit_vector(int dim, uint64_t seed, uint64_t counter) {
    std::vector<double> v(dim);
    uint64_t base = counter * static_cast<uint64_t>(dim);
    double norm2 = 0;
    // rejection-free: a zero vector has probability 0; re-mix if it happens
    for (uint64_t salt = 0;; ++salt) {
        norm2 = 0;
        for (int i = 0; i < dim; ++i) {
            v[i] = gaussian(seed + salt, base + i);
            norm2 += v[i] * v[i];
        }
        if (norm2 > 1e-30) break;
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (double& c : v) c *= inv;
    return v;
}

}  // namespace rsl::rng
