#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rsl/poly.hpp"

// Gegenbauer polynomials, zonal harmonics, spherical-cap geometry, and
// explicit orthogonal bases of the harmonic spaces H_nu on S^2.

namespace rsl::sh {

struct CapSpec {
    std::vector<double> center;  // unit vector in R^{d+1}, |center| = 1 within 1e-12
    double radius;               // Euclidean, in (0, 2]
};

struct AnnulusSpec {
    std::vector<double> center;
    double r_inner, r_outer;  // 0 <= r_inner < r_outer <= 2
};

// C_nu^lambda(t) by the three-term recurrence. t in [-1,1] (1e-9 slack).
double gegenbauer(int nu, double lambda, double t);

// dim H_nu(S^d) = binom(d+nu, nu) - binom(d+nu-2, nu-2).
int64_t dim_H(int nu, int d);

// Z_nu(x, y) = c_nu C_nu^{(d-1)/2}(<x,y>), c_nu = (nu+lambda)/lambda.
double zonal(int nu, int d, const std::vector<double>& x, const std::vector<double>& y);

// omega_{d-1}/omega_d = Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2)).
double sphere_area_ratio(int d);

// Normalized surface area of a cap of Euclidean radius R on S^d.
// Closed form R^2/4 for d = 2; Gauss-Legendre quadrature to 1e-12 otherwise.
double cap_measure(double R, int d);

// Gegenbauer coefficient of the normalized cap indicator 1_{C_R}/mu(C_R);
// coefficient 0 is exactly 1. Throws if the quadrature fails to converge.
double cap_gegenbauer_coeff(int nu, double R, int d);

// Exact-rational orthogonal basis of H_nu(S^2): pairwise orthogonal harmonic
// polynomials with exact squared L^2 norms. The orthonormal basis is
// polys[i] / sqrt(norm2[i]).
struct OrthoBasis {
    int nu = 0;
    std::vector<poly::Poly3> polys;
    std::vector<mpq_class> norm2;

    double eval_orthonormal(size_t i, double x, double y, double z) const;
};

// Memoized; safe for concurrent use. Rejects nu > 12.
const OrthoBasis& harmonic_basis(int nu);

// Gauss-Legendre nodes and weights on [-1, 1] (memoized).
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

}  // namespace rsl::sh
