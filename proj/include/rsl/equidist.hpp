#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rsl/lattice_points.hpp"
#include "rsl/poly.hpp"
#include "rsl/sphere_harmonics.hpp"

// Cap/annulus statistics, Weyl sums, variance Monte Carlo, covering radii
// and exponents, and the minimal-|z| solver for x^2 + y^2 + z^2 = n.

namespace rsl::eq {

struct CapCountResult {
    int64_t count = 0;
    double expected = 0;  // |points| * mu(C_R)
    double ratio = 0;     // count / expected when expected > 0
};

// Exact open-cap count: float comparison with a 1e-12 guard band, exact
// rational re-check inside the band (caps are open; exact ties excluded).
CapCountResult cap_count(const lat::PointSet& points, const sh::CapSpec& cap);

// Count of points with r_inner < |x - alpha| < r_outer (same hybrid test).
int64_t annulus_count(const lat::PointSet& points, const sh::AnnulusSpec& annulus);

// sum_{x in Omega_n} P(x) = n^{-nu} sum_{delta|n} mu(delta) delta^nu
// r_P((n/delta)^2), exact.
mpq_class weyl_sum_exact(int64_t n, const poly::Poly3& P);
double weyl_sum(int64_t n, const poly::Poly3& P);

struct VarianceEstimate {
    int64_t n = 0;
    double R = 0;
    int num_samples = 0;
    uint64_t seed = 0;
    double mean_ratio = 0;
    double variance = 0;   // MC estimate of Var(n, R)
    double std_error = 0;  // standard error of the estimate
    double bound = 0;      // d(n) / (|Omega_n| mu(C_R))
};

VarianceEstimate variance_mc(int64_t n, double R, int num_samples, uint64_t seed);

struct CoveringReport {
    std::string label;
    int64_t set_size = 0;
    double covering_radius = 0;         // grid lower bound on the true radius
    int grid_size = 0;                  // K (Fibonacci grid)
    double resolution_error_bound = 0;  // max nearest-grid-neighbor spacing
};

// Fibonacci grid of K points on S^2.
std::vector<std::array<double, 3>> fibonacci_grid(int K);

// Grid-estimated covering radius of a point set on S^2 (d = 2 only, K >= 1000).
CoveringReport covering_radius(const lat::PointSet& points, int K);

struct ExponentFit {
    double exponent = 0;
    double residual = 0;  // RMS residual of the least-squares fit
};

// Least-squares slope of log|X_N| against -log mu(C_{R_N}) on S^d.
ExponentFit covering_exponent_estimate(const std::vector<std::pair<int64_t, double>>& size_radius,
                                       int d);

// Least R (bisection to 1e-4) with grid-estimated uncovered fraction <= eps.
double generic_covering_radius(const lat::PointSet& points, double epsilon, int K);

struct LinnikSolution {
    int64_t z_min = 0;
    std::array<int64_t, 3> witness{0, 0, 0};  // (x, y, z), primitive
    bool exists = false;
};

// Minimal |z| over primitive solutions of x^2 + y^2 + z^2 = n.
LinnikSolution linnik_min_z(int64_t n);

struct LinnikRecord {
    int64_t l = 0;
    int64_t n = 0;  // l^2
    int64_t z_min = 0;
    double exponent = 0;  // log z_min / log n, 0 when z_min <= 1
    bool trivial = false;  // l has no prime factor = 3 (mod 4), so z_min = 0
};

// Records for odd l in [3, l_max], l_max <= 2001.
std::vector<LinnikRecord> linnik_exponent_scan(int64_t l_max);

}  // namespace rsl::eq
