#include "rsl/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "rsl/number_theory.hpp"
#include "rsl/rng.hpp"

namespace rsl::eq {

namespace {

constexpr double kGuard = 1e-12;

// exact squared distance |m/n - alpha|^2 with alpha's doubles taken as exact
mpq_class dist2_exact(const lat::Vec& m, int64_t n, const std::vector<double>& alpha) {
    mpq_class dot = 0;
    for (size_t i = 0; i < m.size(); ++i) dot += mpq_class(alpha[i]) * m[i];
    return 2 - 2 * dot / n;
}

// three-way comparison of |m/n - alpha| against R, hybrid float/exact:
// -1 below, 0 exact tie, +1 above
int dist_cmp(const lat::Vec& m, int64_t n, const std::vector<double>& alpha, double R) {
    double dot = 0;
    for (size_t i = 0; i < m.size(); ++i) dot += alpha[i] * static_cast<double>(m[i]);
    double d2 = 2.0 - 2.0 * dot / static_cast<double>(n);
    double diff = d2 - R * R;
    if (std::abs(diff) > kGuard) return diff < 0 ? -1 : 1;
    int c = cmp(dist2_exact(m, n, alpha), mpq_class(R) * mpq_class(R));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

void check_center(const std::vector<double>& c, int d) {
    if (c.size() != static_cast<size_t>(d + 1))
        throw std::invalid_argument("cap center dimension mismatch");
    double s = 0;
    for (double x : c) s += x * x;
    if (std::abs(s - 1.0) > 1e-9) throw std::invalid_argument("cap center must be a unit vector");
}

}  // namespace

CapCountResult cap_count(const lat::PointSet& points, const sh::CapSpec& cap) {
    check_center(cap.center, points.d);
    if (cap.radius <= 0 || cap.radius > 2)
        throw std::invalid_argument("cap_count: radius must be in (0, 2]");
    CapCountResult r;
    for (const auto& pt : points.points)
        if (dist_cmp(pt.m, pt.n, cap.center, cap.radius) < 0) ++r.count;
    r.expected = static_cast<double>(points.points.size()) * sh::cap_measure(cap.radius, points.d);
    r.ratio = r.expected > 0 ? static_cast<double>(r.count) / r.expected : 0.0;
    return r;
}

int64_t annulus_count(const lat::PointSet& points, const sh::AnnulusSpec& annulus) {
    check_center(annulus.center, points.d);
    if (annulus.r_inner < 0 || annulus.r_inner > annulus.r_outer || annulus.r_outer > 2)
        throw std::invalid_argument("annulus_count: need 0 <= r_inner <= r_outer <= 2");
    int64_t count = 0;
    for (const auto& pt : points.points)
        if (dist_cmp(pt.m, pt.n, annulus.center, annulus.r_outer) < 0 &&
            dist_cmp(pt.m, pt.n, annulus.center, annulus.r_inner) > 0)
            ++count;
    return count;
}

namespace {
mpz_class zpow(int64_t b, int e) {
    mpz_class r = 1, base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

mpq_class r_P_sum(const poly::Poly3& P, int64_t k) {
    mpq_class s = 0;
    for (auto& m : lat::representations(k, 3))
        s += P.eval(mpq_class(m[0]), mpq_class(m[1]), mpq_class(m[2]));
    return s;
}
}  // namespace

mpq_class weyl_sum_exact(int64_t n, const poly::Poly3& P) {
    if (n < 1) throw std::invalid_argument("weyl_sum: n must be positive");
    int nu = std::max(P.degree(), 0);
    mpq_class s = 0;
    for (uint64_t delta : nt::divisors(static_cast<uint64_t>(n))) {
        int mu = nt::mobius(delta);
        if (mu == 0) continue;
        int64_t q = n / static_cast<int64_t>(delta);
        s += mu * mpq_class(zpow(static_cast<int64_t>(delta), nu)) * r_P_sum(P, q * q);
    }
    s /= mpq_class(zpow(n, nu));
    return s;
}

double weyl_sum(int64_t n, const poly::Poly3& P) { return weyl_sum_exact(n, P).get_d(); }

VarianceEstimate variance_mc(int64_t n, double R, int num_samples, uint64_t seed) {
    if (n % 2 == 0) throw std::invalid_argument("variance_mc: n must be odd");
    if (num_samples < 100) throw std::invalid_argument("variance_mc: need >= 100 samples");
    lat::PointSet ps = lat::omega_n(n, 2);
    if (ps.points.empty()) throw std::invalid_argument("variance_mc: Omega_n is empty");
    double mu = sh::cap_measure(R, 2);
    double denom = static_cast<double>(ps.points.size()) * mu;

    VarianceEstimate est;
    est.n = n;
    est.R = R;
    est.num_samples = num_samples;
    est.seed = seed;
    est.bound = static_cast<double>(nt::divisor_count(static_cast<uint64_t>(n))) / denom;

    double sum_sq = 0, sum_sq2 = 0, sum_ratio = 0;
    for (int s = 0; s < num_samples; ++s) {
        sh::CapSpec cap{rng::unit_vector(3, seed, static_cast<uint64_t>(s)), R};
        double ratio = static_cast<double>(cap_count(ps, cap).count) / denom;
        double dev2 = (ratio - 1.0) * (ratio - 1.0);
        sum_ratio += ratio;
        sum_sq += dev2;
        sum_sq2 += dev2 * dev2;
    }
    est.mean_ratio = sum_ratio / num_samples;
    est.variance = sum_sq / num_samples;
    double var_of_dev2 = std::max(0.0, sum_sq2 / num_samples - est.variance * est.variance);
    est.std_error = std::sqrt(var_of_dev2 / num_samples);
    return est;
}

std::vector<std::array<double, 3>> fibonacci_grid(int K) {
    std::vector<std::array<double, 3>> g(K);
    const double ga = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < K; ++i) {
        double z = 1.0 - (2.0 * i + 1.0) / K;
        double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = ga * i;
        g[i] = {rho * std::cos(phi), rho * std::sin(phi), z};
    }
    return g;
}

namespace {

// latitude-band nearest-neighbor index on S^2
class BandIndex {
  public:
    explicit BandIndex(const std::vector<std::array<double, 3>>& pts) {
        B_ = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(pts.size()))));
        bands_.resize(B_);
        for (auto& p : pts) bands_[band_of(p[2])].push_back(p);
    }

    // squared distance to the nearest stored point, ignoring matches closer
    // than `exclude2` (used to skip the query point itself)
    double nearest2(const std::array<double, 3>& x, double exclude2 = -1.0) const {
        double best = 4.0 + 1e-9;
        int b0 = band_of(x[2]);
        for (int k = 0; k <= B_; ++k) {
            bool any = false;
            int cands[2] = {b0 - k, b0 + k};
            int ncand = (k == 0) ? 1 : 2;
            for (int ci = 0; ci < ncand; ++ci) {
                int bb = cands[ci];
                if (bb < 0 || bb >= B_) continue;
                double zgap = band_zgap(x[2], bb);
                if (zgap * zgap >= best) continue;
                any = true;
                for (auto& p : bands_[bb]) {
                    double dx = x[0] - p[0], dy = x[1] - p[1], dz = x[2] - p[2];
                    double d2 = dx * dx + dy * dy + dz * dz;
                    if (d2 > exclude2 && d2 < best) best = d2;
                }
            }
            if (!any && k > 0) break;
        }
        return best;
    }

  private:
    int band_of(double z) const {
        int b = static_cast<int>((z + 1.0) / 2.0 * B_);
        return std::clamp(b, 0, B_ - 1);
    }
    double band_zgap(double z, int bb) const {
        double lo = -1.0 + 2.0 * bb / B_, hi = -1.0 + 2.0 * (bb + 1) / B_;
        if (z < lo) return lo - z;
        if (z > hi) return z - hi;
        return 0.0;
    }

    int B_;
    std::vector<std::vector<std::array<double, 3>>> bands_;
};

double grid_mesh_bound(int K) {
    static std::map<int, double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(K);
    if (it != cache.end()) return it->second;
    auto g = fibonacci_grid(K);
    BandIndex idx(g);
    double mesh2 = 0;
    for (auto& p : g) mesh2 = std::max(mesh2, idx.nearest2(p, 1e-18));
    double mesh = std::sqrt(mesh2);
    cache.emplace(K, mesh);
    return mesh;
}

std::vector<std::array<double, 3>> to_unit(const lat::PointSet& ps) {
    std::vector<std::array<double, 3>> pts;
    pts.reserve(ps.points.size());
    for (auto& pt : ps.points)
        pts.push_back({static_cast<double>(pt.m[0]) / pt.n, static_cast<double>(pt.m[1]) / pt.n,
                       static_cast<double>(pt.m[2]) / pt.n});
    return pts;
}

std::string set_label(const lat::PointSet& ps) {
    return (ps.kind == lat::SetKind::FixedHeight ? "Omega_n(" : "Omega_T(") +
           std::to_string(ps.param) + ")";
}

std::vector<double> grid_distances(const lat::PointSet& points, int K) {
    if (points.d != 2)
        throw std::invalid_argument("covering radius is implemented for S^2 only");
    if (points.points.empty()) throw std::invalid_argument("covering radius: empty point set");
    if (K < 1000) throw std::invalid_argument("covering radius: grid size K must be >= 1000");
    BandIndex idx(to_unit(points));
    std::vector<double> dist;
    dist.reserve(K);
    for (auto& g : fibonacci_grid(K)) dist.push_back(std::sqrt(idx.nearest2(g)));
    return dist;
}

}  // namespace

CoveringReport covering_radius(const lat::PointSet& points, int K) {
    auto dist = grid_distances(points, K);
    CoveringReport rep;
    rep.label = set_label(points);
    rep.set_size = static_cast<int64_t>(points.points.size());
    rep.grid_size = K;
    rep.covering_radius = *std::max_element(dist.begin(), dist.end());
    rep.resolution_error_bound = grid_mesh_bound(K);
    return rep;
}

ExponentFit covering_exponent_estimate(const std::vector<std::pair<int64_t, double>>& size_radius,
                                       int d) {
    if (size_radius.size() < 3)
        throw std::invalid_argument("covering_exponent_estimate: need >= 3 entries");
    std::vector<double> xs, ys;
    for (auto& [sz, R] : size_radius) {
        xs.push_back(-std::log(sh::cap_measure(R, d)));
        ys.push_back(std::log(static_cast<double>(sz)));
    }
    double n = static_cast<double>(xs.size());
    double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx < 1e-12)
        throw std::invalid_argument("covering_exponent_estimate: degenerate regression");
    ExponentFit fit;
    fit.exponent = sxy / sxx;
    double ss = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        double e = ys[i] - my - fit.exponent * (xs[i] - mx);
        ss += e * e;
    }
    fit.residual = std::sqrt(ss / n);
    return fit;
}

double generic_covering_radius(const lat::PointSet& points, double epsilon, int K) {
    if (epsilon <= 0 || epsilon >= 1)
        throw std::invalid_argument("generic_covering_radius: epsilon must be in (0, 1)");
    auto dist = grid_distances(points, K);
    auto uncovered = [&](double R) {
        int64_t cnt = 0;
        for (double di : dist)
            if (di >= R) ++cnt;
        return static_cast<double>(cnt) / static_cast<double>(dist.size());
    };
    double lo = 0.0, hi = 2.0;
    while (hi - lo > 1e-4) {
        double mid = (lo + hi) / 2;
        if (uncovered(mid) <= epsilon)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

LinnikSolution linnik_min_z(int64_t n) {
    if (n < 1) throw std::invalid_argument("linnik_min_z: n must be positive");
    LinnikSolution sol;
    for (int64_t z = 0; z * z <= n; ++z) {
        int64_t k = n - z * z;
        for (int64_t a = 0; a * a * 2 <= k; ++a) {
            int64_t b;
            if (!lat::is_square(k - a * a, &b)) continue;
            if (std::gcd(std::gcd(a, b), z) == 1) {
                sol.z_min = z;
                sol.witness = {a, b, z};
                sol.exists = true;
                return sol;
            }
        }
    }
    return sol;
}

std::vector<LinnikRecord> linnik_exponent_scan(int64_t l_max) {
    if (l_max < 3 || l_max > 2001)
        throw std::invalid_argument("linnik_exponent_scan: l_max must be in [3, 2001]");
    std::vector<LinnikRecord> out;
    for (int64_t l = 3; l <= l_max; l += 2) {
        LinnikRecord rec;
        rec.l = l;
        rec.n = l * l;
        rec.trivial = true;
        for (auto& [p, e] : nt::factorize(static_cast<uint64_t>(l)).factors)
            if (p % 4 == 3) rec.trivial = false;
        LinnikSolution sol = linnik_min_z(rec.n);
        if (!sol.exists) throw std::logic_error("linnik_exponent_scan: no primitive solution");
        rec.z_min = sol.z_min;
        rec.exponent = rec.z_min > 1 ? std::log(static_cast<double>(rec.z_min)) /
                                           std::log(static_cast<double>(rec.n))
                                     : 0.0;
        out.push_back(rec);
    }
    return out;
}

}  // namespace rsl::eq
