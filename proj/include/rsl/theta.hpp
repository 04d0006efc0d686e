#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "rsl/poly.hpp"

// Theta-series coefficients for Z^3 and the trace-zero same-parity lattice
// Lambda, Kohnen lift coefficients, Hecke-eigenvalue extraction, and the
// exact Eichler commutation / p-neighbor checks. Every identity here is
// verified in exact rational arithmetic.

namespace rsl::theta {

using LambdaVec = std::array<int64_t, 3>;

// v in Lambda iff all coordinates share the same parity.
bool in_lambda(const LambdaVec& v);

// R(k, Lambda): all v in Lambda with |v|^2 = k.
std::vector<LambdaVec> lambda_vectors(int64_t k);

// r_P(n) = sum of P over integer vectors of squared length n.
mpq_class r_P(const poly::Poly3& P, int64_t n);

// r_{Lambda,P}(n) = sum of P over Lambda vectors of squared length n.
mpq_class r_lambda_P(const poly::Poly3& P, int64_t n);

// r_{Lambda,P}(k) for all k in [0, k_max], one box sweep.
std::vector<mpq_class> r_lambda_series(const poly::Poly3& P, int64_t k_max);

// Kohnen lift A(n) = 2^nu sum_{d|n} chi4(d) d^nu r_P(n^2/d^2), n odd.
mpq_class kohnen_lift_A(const poly::Poly3& P, int64_t n);

// Thrown when an eigenfunction has A(1) = 0; callers report, never divide.
struct VanishingFirstCoefficient : std::runtime_error {
    VanishingFirstCoefficient() : std::runtime_error("kohnen lift has A(1) = 0") {}
};

// Normalized Hecke eigenvalue lambda(n) = A(n)/A(1) n^{-1/2-nu}, n odd.
double hecke_lambda(const poly::Poly3& P, int64_t n);

// Relative residual of r_P(n^2) = r_P(1) n^nu sum_{delta|n} mu(n/delta)
// chi4(n/delta) delta^{1/2} lambda(delta), n odd.
double mobius_inversion_residual(const poly::Poly3& P, int64_t n);

struct EichlerFailure {
    int64_t n;
    std::string lhs, rhs;  // exact rationals as strings
};

struct EichlerReport {
    int64_t p = 0;
    int nu = 0;
    int64_t n_max = 0;
    std::vector<EichlerFailure> failures;
    bool ok() const { return failures.empty(); }
    std::string to_json() const;
};

// Exact check of p^nu r_{Lambda, Tp~ P}(n) = r_{Lambda,P}(p^2 n)
//   + p^nu (-n/p) r_{Lambda,P}(n) + p^{1+2nu} r_{Lambda,P}(n/p^2)
// for all n <= n_max, where (-n/p) = 0 when p | n and the last term drops
// unless p^2 | n. The p^nu on the left is the homogeneity factor between the
// unit-sphere action of Tp~ and its polynomial extension to norm-n vectors.
EichlerReport eichler_verify(int64_t p, const poly::Poly3& P, int64_t n_max);

// Number of norm-p classes gamma (one per unit orbit) with
// conj(gamma) v gamma in p^2 Lambda, i.e. neighbors containing v under the
// norm-rescaled convention. Meaningful when p^2 | nr(v); equals 1 if
// v not in p Lambda, 1 + (-n/p) if v in p Lambda \ p^2 Lambda with
// nr(v) = p^2 n, and p+1 if v in p^2 Lambda.
int neighbor_count(const LambdaVec& v, int64_t p);

// CSV export of an exact coefficient series: n, numerator, denominator.
void write_series_csv(const std::vector<mpq_class>& values, std::ostream& os);

}  // namespace rsl::theta
