#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "rsl/poly.hpp"

// Exact Hurwitz-quaternion arithmetic, norm-p representative enumeration,
// and the averaging Hecke operators on harmonic polynomials over S^2.

namespace rsl::quat {

// (A + Bi + Cj + Dk) / 2 with A = B = C = D (mod 2).
struct HurwitzQuaternion {
    int64_t A = 0, B = 0, C = 0, D = 0;  // twice-coordinates

    bool valid() const;
    auto operator<=>(const HurwitzQuaternion&) const = default;
};

HurwitzQuaternion quat_mul(const HurwitzQuaternion& x, const HurwitzQuaternion& y);
HurwitzQuaternion quat_conj(const HurwitzQuaternion& x);
int64_t quat_nr(const HurwitzQuaternion& x);  // reduced norm, integer

// The 24 units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2.
const std::vector<HurwitzQuaternion>& units();

struct NormPReps {
    int64_t p = 0;
    std::vector<HurwitzQuaternion> reps;  // all 24(p+1) of norm p
};

// All Hurwitz quaternions of reduced norm p (odd prime, p <= 200); memoized.
const NormPReps& norm_reps(int64_t p);

// One representative per right unit orbit (p+1 classes), the
// lexicographically smallest translate by the twice-coordinate tuple.
std::vector<HurwitzQuaternion> norm_rep_classes(int64_t p);

// Integer matrix M of the pure-quaternion map v -> Z v conj(Z) in the basis
// (i, j, k), where Z = (A, B, C, D) are the twice-coordinates of z.
// The rotation x -> z x conj(z) / nr(z) is then M / (4 nr(z)).
std::array<std::array<int64_t, 3>, 3> conjugation_matrix(const HurwitzQuaternion& z);

// Exact rotation of a pure quaternion with rational coordinates.
std::array<mpq_class, 3> rotate(const HurwitzQuaternion& z, const std::array<mpq_class, 3>& v);

// (T_p~ P)(x) = (1/24) sum_{nr(z)=p} P(z x conj(z) / p); exact, preserves
// degree and harmonicity. P must be homogeneous in 3 variables.
poly::Poly3 hecke_apply(int64_t p, const poly::Poly3& P);

// Matrix of hecke_apply(p, .) in the exact orthogonal basis of H_nu;
// entries exact rationals, column-major action: (T P_j) = sum_i M[i][j] P_i.
std::vector<std::vector<mpq_class>> hecke_matrix(int64_t p, int nu);

struct EigenFunction {
    poly::Poly3 poly;                        // dyadic-rational (float-derived) coefficients
    std::vector<double> coords;              // in the orthonormal basis of H_nu
    std::map<int64_t, double> eigenvalue;    // per prime
    int block = 0;                           // functions sharing a block share eigenvalues
};

struct EigenBasis {
    int nu = 0;
    uint64_t seed = 0;
    std::vector<EigenFunction> functions;    // 2 nu + 1 of them
    std::vector<int> block_dims;             // observed eigenspace dimensions
};

// Joint diagonalization of the commuting symmetric Hecke matrices via a
// seeded random linear combination; per-prime eigenvalues are Rayleigh
// quotients. Residual ||T_p P - lambda_p P||_2 <= tol per prime, with up to
// 3 re-draws before reporting failure.
EigenBasis hecke_eigenbasis(int nu, const std::vector<int64_t>& primes,
                            uint64_t seed = 0x5eed5eedULL, double tol = 1e-8);

}  // namespace rsl::quat
