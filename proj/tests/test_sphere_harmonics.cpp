#include <cmath>
#include <vector>

#include "doctest.h"
#include "rsl/poly.hpp"
#include "rsl/rng.hpp"
#include "rsl/sphere_harmonics.hpp"

using namespace rsl;

TEST_CASE("gegenbauer examples and recurrence consistency") {
    CHECK(sh::gegenbauer(0, 0.5, 0.3) == doctest::Approx(1.0));
    CHECK(sh::gegenbauer(1, 0.5, 0.5) == doctest::Approx(0.5));
    CHECK(sh::gegenbauer(5, 0.5, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS(sh::gegenbauer(2, 0.5, 1.1));

    // generating function (1-2rt+r^2)^{-lambda} = sum C_nu(t) r^nu
    for (double lambda : {0.5, 1.0, 1.5}) {
        for (double t : {-0.7, 0.0, 0.4, 0.9}) {
            double r = 0.3;
            double target = std::pow(1 - 2 * r * t + r * r, -lambda);
            double sum = 0, rp = 1;
            for (int nu = 0; nu < 60; ++nu) {
                sum += sh::gegenbauer(nu, lambda, t) * rp;
                rp *= r;
            }
            CHECK(sum == doctest::Approx(target).epsilon(1e-10));
        }
    }
}

TEST_CASE("dim_H") {
    CHECK(sh::dim_H(2, 2) == 5);
    CHECK(sh::dim_H(0, 5) == 1);
    CHECK(sh::dim_H(4, 2) == 9);
    for (int d = 2; d <= 5; ++d) {
        CHECK(sh::dim_H(0, d) == 1);
        CHECK(sh::dim_H(1, d) == d + 1);
    }
    for (int nu = 0; nu <= 12; ++nu) CHECK(sh::dim_H(nu, 2) == 2 * nu + 1);
}

TEST_CASE("zonal") {
    std::vector<double> e1{1, 0, 0}, e2{0, 1, 0};
    for (int nu = 0; nu <= 8; ++nu) {
        auto x = rng::unit_vector(3, 5, nu);
        CHECK(sh::zonal(nu, 2, x, x) == doctest::Approx(2 * nu + 1).epsilon(1e-12));
    }
    CHECK(sh::zonal(1, 2, e1, e2) == doctest::Approx(0.0));
    auto x4 = rng::unit_vector(4, 5, 99);
    CHECK(sh::zonal(2, 3, x4, x4) == doctest::Approx(sh::dim_H(2, 3)).epsilon(1e-12));
    CHECK_THROWS(sh::zonal(1, 2, std::vector<double>{1, 1, 0}, e1));
}

TEST_CASE("cap_measure") {
    for (int d : {2, 3, 4}) CHECK(sh::cap_measure(2.0, d) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(sh::cap_measure(std::sqrt(2.0), 2) == doctest::Approx(0.5));
    CHECK(sh::cap_measure(0.1, 2) == doctest::Approx(0.0025));
    CHECK_THROWS(sh::cap_measure(0.0, 2));
    CHECK_THROWS(sh::cap_measure(2.5, 2));
    // monotone in R
    for (int d : {2, 3, 4}) {
        double prev = 0;
        for (double R = 0.1; R <= 2.0; R += 0.1) {
            double m = sh::cap_measure(R, d);
            CHECK(m > prev);
            prev = m;
        }
    }
    // hemisphere in every dimension
    for (int d : {3, 4, 5}) CHECK(sh::cap_measure(std::sqrt(2.0), d) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("cap-measure asymptotics mu ~ (omega_{d-1}/omega_d) R^d / d") {
    for (int d : {2, 3, 4}) {
        double C = 0;
        for (double R = 0.01; R <= 0.5; R += 0.01) {
            double lead = sh::sphere_area_ratio(d) * std::pow(R, d) / d;
            double rem = std::abs(sh::cap_measure(R, d) - lead);
            C = std::max(C, rem / std::pow(R, d + 2));
        }
        CHECK(C < 0.1);  // fitted constant stays bounded
    }
}

TEST_CASE("cap_gegenbauer_coeff basics") {
    CHECK(sh::cap_gegenbauer_coeff(0, 0.3, 2) == doctest::Approx(1.0));
    CHECK(std::abs(sh::cap_gegenbauer_coeff(1, 1.999, 2)) < 2e-3);
}

TEST_CASE("cap_gegenbauer_coeff against a Monte-Carlo oracle") {
    // f-hat(8) = <1_{C_R}/mu, Z_8(., alpha)> / dim H_8 with alpha the north pole
    const double R = 0.3;
    const int nu = 8, N = 1000000;
    const double mu = sh::cap_measure(R, 2);
    std::vector<double> alpha{0, 0, 1};
    double s = 0, s2 = 0;
    for (uint64_t k = 0; k < N; ++k) {
        auto x = rng::unit_vector(3, 0xcafe, k);
        double dx = x[0] - alpha[0], dy = x[1] - alpha[1], dz = x[2] - alpha[2];
        double val = 0;
        if (dx * dx + dy * dy + dz * dz < R * R) val = sh::zonal(nu, 2, x, alpha) / mu;
        s += val;
        s2 += val * val;
    }
    double mean = s / N;
    double se = std::sqrt((s2 / N - mean * mean) / N);
    double mc = mean / (2 * nu + 1);
    double exact = sh::cap_gegenbauer_coeff(nu, R, 2);
    CHECK(std::abs(exact - mc) < 3 * se / (2 * nu + 1) + 1e-12);
}

TEST_CASE("harmonic_basis structure") {
    CHECK_THROWS(sh::harmonic_basis(13));
    for (int nu = 0; nu <= 8; ++nu) {
        const auto& B = sh::harmonic_basis(nu);
        REQUIRE(B.polys.size() == static_cast<size_t>(2 * nu + 1));
        REQUIRE(B.norm2.size() == B.polys.size());
        for (size_t i = 0; i < B.polys.size(); ++i) {
            CHECK(B.norm2[i] > 0);
            CHECK(poly::laplacian(B.polys[i]).is_zero());
            CHECK(B.polys[i].degree() == nu);
            CHECK(B.polys[i].is_homogeneous());
            CHECK(poly::inner_product(B.polys[i], B.polys[i]) == B.norm2[i]);
            for (size_t j = 0; j < i; ++j)
                CHECK(poly::inner_product(B.polys[i], B.polys[j]) == 0);
        }
    }
}

TEST_CASE("harmonic_basis low-degree examples") {
    const auto& B0 = sh::harmonic_basis(0);
    CHECK(B0.eval_orthonormal(0, 0.1, 0.2, 0.3) == doctest::Approx(1.0));

    // nu = 1: orthonormalized coordinates; sum of squares is 3 on the sphere
    const auto& B1 = sh::harmonic_basis(1);
    auto x = rng::unit_vector(3, 21, 0);
    double s = 0;
    for (size_t i = 0; i < 3; ++i) {
        double v = B1.eval_orthonormal(i, x[0], x[1], x[2]);
        s += v * v;
    }
    CHECK(s == doctest::Approx(3.0).epsilon(1e-12));

    const auto& B2 = sh::harmonic_basis(2);
    double s2 = 0;
    for (size_t i = 0; i < 5; ++i) {
        double v = B2.eval_orthonormal(i, 0, 0, 1);
        s2 += v * v;
    }
    CHECK(s2 == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("pre-trace identity") {
    for (int nu = 0; nu <= 8; ++nu) {
        const auto& B = sh::harmonic_basis(nu);
        for (uint64_t k = 0; k < 100; ++k) {
            auto x = rng::unit_vector(3, 1000 + nu, k);
            double s = 0;
            for (size_t i = 0; i < B.polys.size(); ++i) {
                double v = B.eval_orthonormal(i, x[0], x[1], x[2]);
                s += v * v;
            }
            CHECK(s == doctest::Approx(2 * nu + 1).epsilon(1e-8));
        }
    }
}

namespace {
// quadrature over S^2 exact for spherical polynomials of degree <= 2m-1 in
// cos(theta) and trigonometric degree < M in phi
template <typename F>
double sphere_quad(int m, int M, F&& f) {
    const auto& [nodes, weights] = sh::gauss_legendre(m);
    double total = 0;
    for (int i = 0; i < m; ++i) {
        double t = nodes[i], st = std::sqrt(std::max(0.0, 1 - t * t));
        double ring = 0;
        for (int j = 0; j < M; ++j) {
            double phi = 2 * M_PI * j / M;
            ring += f(st * std::cos(phi), st * std::sin(phi), t);
        }
        total += weights[i] * ring / M;
    }
    return total / 2;  // normalized measure
}
}  // namespace

TEST_CASE("reproducing identity for zonal kernels") {
    for (int nu : {1, 2, 4, 6}) {
        auto x = rng::unit_vector(3, 31, nu);
        auto y = rng::unit_vector(3, 32, nu);
        double integral = sphere_quad(2 * nu + 2, 4 * nu + 4, [&](double a, double b, double c) {
            std::vector<double> z{a, b, c};
            return sh::zonal(nu, 2, x, z) * sh::zonal(nu, 2, y, z);
        });
        CHECK(integral == doctest::Approx(sh::zonal(nu, 2, x, y)).epsilon(1e-8));
    }
}

TEST_CASE("Parseval partial sums reach 1/mu at N = 20/R up to the sharp-cutoff tail") {
    // truncating the square-summed coefficients of a sharp cap indicator at N
    // leaves the exact first-order tail 2/(pi N R); the partial sum matches
    // 1/mu within 1 percent once that tail is accounted for
    for (double R : {0.05, 0.1, 0.2}) {
        int N = static_cast<int>(20.0 / R);
        double mu = sh::cap_measure(R, 2);
        double sum = 0;
        for (int nu = 0; nu <= N; ++nu) {
            double f = sh::cap_gegenbauer_coeff(nu, R, 2);
            sum += f * f * (2 * nu + 1);
        }
        double deficit = 1.0 - mu * sum;
        CHECK(deficit > 0);
        CHECK(std::abs(deficit - 2.0 / (M_PI * N * R)) < 0.01);
    }
}

TEST_CASE("coefficient decay |f-hat(nu)| <~ (nu R)^{-3/2}") {
    double cmin = 1e300, cmax = 0;
    for (double R : {0.05, 0.1, 0.2}) {
        double C = 0;
        int lo = static_cast<int>(10.0 / R) + 1, hi = static_cast<int>(30.0 / R);
        for (int nu = lo; nu <= hi; ++nu) {
            double f = std::abs(sh::cap_gegenbauer_coeff(nu, R, 2));
            C = std::max(C, f * std::pow(nu * R, 1.5));
        }
        cmin = std::min(cmin, C);
        cmax = std::max(cmax, C);
    }
    CHECK(cmax < 2.0);        // bounded fitted constant
    CHECK(cmax / cmin < 3.0);  // stable across the three radii
}
