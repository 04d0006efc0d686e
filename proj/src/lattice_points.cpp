#include "rsl/lattice_points.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "rsl/number_theory.hpp"

namespace rsl::lat {

bool is_square(int64_t k, int64_t* root) {
    if (k < 0) return false;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(k)));
    while (r > 0 && r * r > k) --r;
    while ((r + 1) * (r + 1) <= k) ++r;
    if (r * r != k) return false;
    if (root) *root = r;
    return true;
}

static int64_t isqrt(int64_t k) {
    if (k < 0) return -1;
    int64_t r = static_cast<int64_t>(std::sqrt(static_cast<double>(k)));
    while (r > 0 && r * r > k) --r;
    while ((r + 1) * (r + 1) <= k) ++r;
    return r;
}

// Appends all vectors (m_1..m_dim) of squared length k, ordered by
// (m_dim, m_{dim-1}, ..., m_1) ascending, with `tail` already fixed behind.
static void enumerate_rec(int64_t k, int dim, Vec& partial, std::vector<Vec>& out) {
    if (dim == 1) {
        int64_t r;
        if (!is_square(k, &r)) return;
        Vec v(partial.size() + 1);
        std::copy(partial.rbegin(), partial.rend(), v.begin() + 1);
        if (r > 0) {
            v[0] = -r;
            out.push_back(v);
            v[0] = r;
            out.push_back(v);
        } else {
            v[0] = 0;
            out.push_back(v);
        }
        return;
    }
    int64_t s = isqrt(k);
    for (int64_t m = -s; m <= s; ++m) {
        partial.push_back(m);
        enumerate_rec(k - m * m, dim - 1, partial, out);
        partial.pop_back();
    }
}

std::vector<Vec> representations(int64_t k, int dim) {
    if (dim < 3 || dim > 6) throw std::invalid_argument("representations: dim must be in [3,6]");
    if (k < 0) throw std::invalid_argument("representations: k must be nonnegative");
    std::vector<Vec> out;
    Vec partial;
    enumerate_rec(k, dim, partial, out);
    return out;
}

static int64_t count_rec(int64_t k, int dim) {
    if (dim == 1) {
        int64_t r;
        if (!is_square(k, &r)) return 0;
        return r > 0 ? 2 : 1;
    }
    if (dim == 2) {
        // two-squares scan, O(sqrt(k))
        int64_t c = 0, s = isqrt(k);
        for (int64_t a = 0; a <= s; ++a) {
            int64_t r;
            if (is_square(k - a * a, &r))
                c += (a > 0 ? 2 : 1) * (r > 0 ? 2 : 1);
        }
        return c;
    }
    int64_t c = 0, s = isqrt(k);
    for (int64_t m = -s; m <= s; ++m) c += count_rec(k - m * m, dim - 1);
    return c;
}

int64_t r_count(int64_t k, int dim) {
    if (dim < 3 || dim > 6) throw std::invalid_argument("r_count: dim must be in [3,6]");
    if (k < 0) throw std::invalid_argument("r_count: k must be nonnegative");
    return count_rec(k, dim);
}

PointSet omega_n(int64_t n, int d) {
    if (n < 1) throw std::invalid_argument("omega_n: n must be positive");
    PointSet ps;
    ps.d = d;
    ps.kind = SetKind::FixedHeight;
    ps.param = n;
    for (Vec& v : representations(n * n, d + 1)) {
        int64_t g = n;
        for (int64_t c : v) g = std::gcd(g, std::llabs(c));
        if (g == 1) ps.points.push_back({std::move(v), n});
    }
    return ps;
}

int64_t omega_n_count_exact(int64_t n) {
    if (n < 1) throw std::invalid_argument("omega_n_count_exact: n must be positive");
    if (n % 2 == 0) return 0;
    // 6n prod_{p|n} (1 - chi4(p)/p), an integer for odd n
    int64_t num = 6 * n, den = 1;
    for (auto& [p, e] : nt::factorize(static_cast<uint64_t>(n)).factors) {
        int64_t sp = static_cast<int64_t>(p);
        num *= sp - nt::chi4(p);
        den *= sp;
    }
    if (num % den != 0) throw std::logic_error("omega_n_count_exact: non-integral result");
    return num / den;
}

PointSet omega_T(int64_t T, int d) {
    if (T < 1) throw std::invalid_argument("omega_T: T must be positive");
    PointSet ps;
    ps.d = d;
    ps.kind = SetKind::HeightUpTo;
    ps.param = T;
    for (int64_t n = 1; n <= T; ++n) {
        PointSet on = omega_n(n, d);
        ps.points.insert(ps.points.end(), std::make_move_iterator(on.points.begin()),
                         std::make_move_iterator(on.points.end()));
    }
    return ps;
}

void write_csv(const PointSet& ps, std::ostream& os) {
    for (int i = 0; i < ps.d + 1; ++i) os << 'm' << (i + 1) << ',';
    os << "n\n";
    for (const auto& pt : ps.points) {
        for (int64_t c : pt.m) os << c << ',';
        os << pt.n << '\n';
    }
}

namespace {
constexpr uint32_t kCacheMagic = 0x52534c31;  // "RSL1"
}

void write_cache(const PointSet& ps, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_cache: cannot open " + path);
    auto put = [&](const void* p, size_t sz) { f.write(static_cast<const char*>(p), sz); };
    uint32_t magic = kCacheMagic, d = ps.d, kind = static_cast<uint32_t>(ps.kind);
    int64_t param = ps.param, count = static_cast<int64_t>(ps.points.size());
    put(&magic, 4);
    put(&d, 4);
    put(&kind, 4);
    put(&param, 8);
    put(&count, 8);
    for (const auto& pt : ps.points) {
        put(pt.m.data(), pt.m.size() * 8);
        put(&pt.n, 8);
    }
}

bool read_cache(PointSet& ps, const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return false;
    auto get = [&](void* p, size_t sz) { f.read(static_cast<char*>(p), sz); };
    uint32_t magic = 0, d = 0, kind = 0;
    int64_t param = 0, count = 0;
    get(&magic, 4);
    if (magic != kCacheMagic) return false;
    get(&d, 4);
    get(&kind, 4);
    get(&param, 8);
    get(&count, 8);
    ps.d = static_cast<int>(d);
    ps.kind = static_cast<SetKind>(kind);
    ps.param = param;
    ps.points.assign(static_cast<size_t>(count), {});
    for (auto& pt : ps.points) {
        pt.m.resize(d + 1);
        get(pt.m.data(), pt.m.size() * 8);
        get(&pt.n, 8);
    }
    return static_cast<bool>(f);
}

}  // namespace rsl::lat
