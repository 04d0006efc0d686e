#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

// Enumeration of integer representations by sums of squares and of the
// rational-point sets Omega_n (height exactly n) and Omega_T (height <= T)
// on the unit sphere S^d.

namespace rsl::lat {

using Vec = std::vector<int64_t>;

struct RationalSpherePoint {
    Vec m;       // integer vector, sum of squares = n^2
    int64_t n;   // positive height, gcd(m, n) = 1
};

enum class SetKind { FixedHeight, HeightUpTo };

struct PointSet {
    int d = 2;  // sphere dimension; points live in R^{d+1}
    SetKind kind = SetKind::FixedHeight;
    int64_t param = 1;  // n or T
    std::vector<RationalSpherePoint> points;
};

// All ordered integer vectors of squared length k in `dim` coordinates
// (dim in [3, 6]), each exactly once, in deterministic lexicographic order
// comparing the last coordinate first.
std::vector<Vec> representations(int64_t k, int dim);

// |representations(k, dim)| without materializing the list.
int64_t r_count(int64_t k, int dim);

// The set Omega_n of rational points of height exactly n on S^d.
PointSet omega_n(int64_t n, int d);

// Closed-form |Omega_n| for d = 2: 6n prod_{p|n} (1 - chi4(p)/p), 0 for even n.
int64_t omega_n_count_exact(int64_t n);

// Union of omega_n(n, d) over n <= T.
PointSet omega_T(int64_t T, int d);

bool is_square(int64_t k, int64_t* root = nullptr);

// CSV with columns m1..m_{dim}, n; one row per point.
void write_csv(const PointSet& ps, std::ostream& os);

// Compact binary cache, keyed by (d, n) or (d, T).
void write_cache(const PointSet& ps, const std::string& path);
bool read_cache(PointSet& ps, const std::string& path);

}  // namespace rsl::lat
