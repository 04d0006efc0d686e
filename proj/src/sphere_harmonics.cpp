#include "rsl/sphere_harmonics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rsl::sh {

double gegenbauer(int nu, double lambda, double t) {
    if (nu < 0) throw std::invalid_argument("gegenbauer: nu must be >= 0");
    if (lambda <= 0) throw std::invalid_argument("gegenbauer: lambda must be positive");
    if (t < -1.0 - 1e-9 || t > 1.0 + 1e-9)
        throw std::invalid_argument("gegenbauer: t outside [-1,1]");
    if (nu == 0) return 1.0;
    double cm1 = 1.0, c0 = 2.0 * lambda * t;
    for (int k = 2; k <= nu; ++k) {
        double c1 = (2.0 * (k + lambda - 1.0) * t * c0 - (k + 2.0 * lambda - 2.0) * cm1) / k;
        cm1 = c0;
        c0 = c1;
    }
    return c0;
}

namespace {
int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}
}  // namespace

int64_t dim_H(int nu, int d) {
    if (nu < 0 || d < 2) throw std::invalid_argument("dim_H: need nu >= 0, d >= 2");
    return binom(d + nu, nu) - binom(d + nu - 2, nu - 2);
}

double zonal(int nu, int d, const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != static_cast<size_t>(d + 1) || y.size() != x.size())
        throw std::invalid_argument("zonal: vectors must live in R^{d+1}");
    if (std::abs(dot(x, x) - 1.0) > 1e-9 || std::abs(dot(y, y) - 1.0) > 1e-9)
        throw std::invalid_argument("zonal: inputs must be unit vectors");
    double lambda = (d - 1) / 2.0;
    double c_nu = (nu + lambda) / lambda;
    double t = std::clamp(dot(x, y), -1.0, 1.0);
    return c_nu * gegenbauer(nu, lambda, t);
}

double sphere_area_ratio(int d) {
    return std::tgamma((d + 1) / 2.0) / (std::sqrt(M_PI) * std::tgamma(d / 2.0));
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n / 2 + n % 2; ++i) {
        // Newton from the Chebyshev-like initial guess
        double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        x[i] = -t;
        x[n - 1 - i] = t;
        w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {
// Integrate f over [a, b] with n-node Gauss-Legendre.
template <typename F>
double gl_integrate(F f, double a, double b, int n) {
    auto& [xs, ws] = gauss_legendre(n);
    double mid = (a + b) / 2, half = (b - a) / 2, s = 0;
    for (int i = 0; i < n; ++i) s += ws[i] * f(mid + half * xs[i]);
    return half * s;
}

// Node doubling until relative 1e-12; used for sin^{d-1} cap integrals.
template <typename F>
double gl_adaptive(F f, double a, double b, int n0, double tol, int max_doublings) {
    double prev = gl_integrate(f, a, b, n0);
    int n = n0;
    for (int k = 0; k < max_doublings; ++k) {
        n *= 2;
        double cur = gl_integrate(f, a, b, n);
        if (std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}
}  // namespace

double cap_measure(double R, int d) {
    if (R <= 0 || R > 2) throw std::invalid_argument("cap_measure: R must be in (0, 2]");
    if (d == 2) return R * R / 4.0;
    double r = 2.0 * std::asin(R / 2.0);
    double integral =
        gl_adaptive([d](double th) { return std::pow(std::sin(th), d - 1); }, 0.0, r, 16, 1e-12, 8);
    return sphere_area_ratio(d) * integral;
}

double cap_gegenbauer_coeff(int nu, double R, int d) {
    if (nu < 0) throw std::invalid_argument("cap_gegenbauer_coeff: nu must be >= 0");
    if (R <= 0 || R >= 2) throw std::invalid_argument("cap_gegenbauer_coeff: R must be in (0, 2)");
    if (nu == 0) return 1.0;
    double lambda = (d - 1) / 2.0;
    double c_nu = (nu + lambda) / lambda;
    double t0 = 1.0 - R * R / 2.0;
    auto f = [&](double t) { return gegenbauer(nu, lambda, t) * std::pow(1.0 - t * t, d / 2.0 - 1.0); };
    // integrand is polynomial on (t0, 1] for even d; nu/2+8 nodes are already
    // exact there, the doubling is the convergence check
    int n0 = nu / 2 + 8;
    double cur = gl_integrate(f, t0, 1.0, 2 * n0);
    double cur2 = gl_integrate(f, t0, 1.0, 4 * n0);
    // near a zero of the oscillatory integral the two estimates agree only in
    // absolute terms; scale by the interval so cancellation is not flagged
    double scale = std::max({1.0 - t0, std::abs(cur2), std::abs(cur)});
    if (std::abs(cur2 - cur) > 1e-10 * scale)
        throw std::runtime_error("cap_gegenbauer_coeff: quadrature failed to converge");
    double mu = cap_measure(R, d);
    return sphere_area_ratio(d) * (c_nu / static_cast<double>(dim_H(nu, d))) * cur2 / mu;
}

double OrthoBasis::eval_orthonormal(size_t i, double x, double y, double z) const {
    return polys[i].eval(x, y, z) / std::sqrt(norm2[i].get_d());
}

namespace {
// Exact rational nullspace of the Laplacian on homogeneous degree-nu
// polynomials, followed by exact Gram-Schmidt (normalization deferred).
OrthoBasis build_basis(int nu) {
    using poly::Poly3;
    OrthoBasis basis;
    basis.nu = nu;

    // monomials of degree nu
    std::vector<poly::Exponents> mons;
    for (int a = nu; a >= 0; --a)
        for (int b = nu - a; b >= 0; --b) mons.push_back({a, b, nu - a - b});
    size_t m = mons.size();

    // monomials of degree nu-2 (Laplacian target)
    std::map<poly::Exponents, size_t> tgt;
    if (nu >= 2)
        for (int a = nu - 2; a >= 0; --a)
            for (int b = nu - 2 - a; b >= 0; --b)
                tgt.emplace(poly::Exponents{a, b, nu - 2 - a - b}, tgt.size());
    size_t rows = tgt.size();

    // Laplacian matrix L (rows x m), exact
    std::vector<std::vector<mpq_class>> L(rows, std::vector<mpq_class>(m, 0));
    for (size_t j = 0; j < m; ++j) {
        auto e = mons[j];
        for (int i = 0; i < 3; ++i)
            if (e[i] >= 2) {
                auto e2 = e;
                e2[i] -= 2;
                L[tgt.at(e2)][j] += e[i] * (e[i] - 1);
            }
    }

    // Gaussian elimination to find pivot columns; free columns span the kernel
    std::vector<int> pivot_col(rows, -1);
    size_t r = 0;
    for (size_t c = 0; c < m && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && L[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(L[piv], L[r]);
        mpq_class inv = L[r][c];
        for (size_t cc = c; cc < m; ++cc) L[r][cc] /= inv;
        for (size_t rr = 0; rr < rows; ++rr)
            if (rr != r && L[rr][c] != 0) {
                mpq_class f = L[rr][c];
                for (size_t cc = c; cc < m; ++cc) L[rr][cc] -= f * L[r][cc];
            }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    std::vector<bool> is_pivot(m, false);
    for (size_t i = 0; i < r; ++i) is_pivot[pivot_col[i]] = true;

    std::vector<Poly3> kernel;
    for (size_t c = 0; c < m; ++c) {
        if (is_pivot[c]) continue;
        Poly3 p;
        p.set(mons[c][0], mons[c][1], mons[c][2], 1);
        for (size_t i = 0; i < r; ++i) {
            if (L[i][c] != 0) {
                auto e = mons[pivot_col[i]];
                p.set(e[0], e[1], e[2], -L[i][c]);
            }
        }
        kernel.push_back(std::move(p));
    }
    if (kernel.size() != static_cast<size_t>(2 * nu + 1))
        throw std::logic_error("harmonic_basis: unexpected kernel dimension");

    // exact Gram-Schmidt; squared norms kept for deferred normalization
    for (auto& v : kernel) {
        Poly3 f = v;
        for (size_t j = 0; j < basis.polys.size(); ++j) {
            mpq_class c = inner_product(f, basis.polys[j]) / basis.norm2[j];
            if (c != 0) f -= basis.polys[j] * c;
        }
        if (f.is_zero()) throw std::logic_error("harmonic_basis: dependent kernel vector");
        basis.norm2.push_back(inner_product(f, f));
        basis.polys.push_back(std::move(f));
    }
    return basis;
}
}  // namespace

const OrthoBasis& harmonic_basis(int nu) {
    if (nu < 0 || nu > 12)
        throw std::invalid_argument("harmonic_basis: nu must be in [0, 12]");
    static std::map<int, OrthoBasis> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(nu);
    if (it == cache.end()) it = cache.emplace(nu, build_basis(nu)).first;
    return it->second;
}

}  // namespace rsl::sh
