#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "rsl/poly.hpp"
#include "rsl/quaternion.hpp"
#include "rsl/rng.hpp"
#include "rsl/sphere_harmonics.hpp"

using namespace rsl;
using quat::HurwitzQuaternion;

namespace {
const HurwitzQuaternion kOne{2, 0, 0, 0};
const HurwitzQuaternion kI{0, 2, 0, 0};
const HurwitzQuaternion kJ{0, 0, 2, 0};
const HurwitzQuaternion kK{0, 0, 0, 2};
}  // namespace

TEST_CASE("multiplication, conjugation, norm") {
    CHECK(quat::quat_nr(kOne) == 1);
    CHECK(quat::quat_nr(HurwitzQuaternion{1, 1, 1, 1}) == 1);
    CHECK(quat::quat_mul(kI, kJ) == kK);
    CHECK(quat::quat_mul(kJ, kI) == HurwitzQuaternion{0, 0, 0, -2});
    CHECK(quat::quat_mul(kI, kI) == HurwitzQuaternion{-2, 0, 0, 0});
    HurwitzQuaternion w{1, 3, -1, 5};
    CHECK(quat::quat_nr(w) == (1 + 9 + 1 + 25) / 4);
    CHECK(quat::quat_mul(w, quat::quat_conj(w)) ==
          HurwitzQuaternion{2 * quat::quat_nr(w), 0, 0, 0});
    CHECK_FALSE(HurwitzQuaternion{1, 0, 0, 0}.valid());
}

TEST_CASE("unit group") {
    const auto& U = quat::units();
    REQUIRE(U.size() == 24);
    std::set<HurwitzQuaternion> set(U.begin(), U.end());
    CHECK(set.size() == 24);
    int lipschitz = 0, half = 0;
    for (auto& u : U) {
        CHECK(quat::quat_nr(u) == 1);
        (u.A % 2 == 0 ? lipschitz : half)++;
        for (auto& v : U) CHECK(set.count(quat::quat_mul(u, v)) == 1);
    }
    CHECK(lipschitz == 8);
    CHECK(half == 16);
}

TEST_CASE("norm_reps counts 24(p+1) for odd primes up to 100") {
    for (int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                      61, 67, 71, 73, 79, 83, 89, 97}) {
        const auto& nr = quat::norm_reps(p);
        CHECK(static_cast<int64_t>(nr.reps.size()) == 24 * (p + 1));
        for (auto& z : nr.reps) CHECK(quat::quat_nr(z) == p);
    }
    CHECK_THROWS(quat::norm_reps(2));
    CHECK_THROWS(quat::norm_reps(9));
}

TEST_CASE("norm_rep_classes partition the representatives into unit orbits") {
    for (int64_t p : {3, 5, 13}) {
        auto classes = quat::norm_rep_classes(p);
        REQUIRE(static_cast<int64_t>(classes.size()) == p + 1);
        std::set<HurwitzQuaternion> covered;
        for (auto& c : classes)
            for (auto& u : quat::units()) covered.insert(quat::quat_mul(c, u));
        const auto& nr = quat::norm_reps(p);
        CHECK(covered.size() == nr.reps.size());
        for (auto& z : nr.reps) CHECK(covered.count(z) == 1);
    }
}

TEST_CASE("rotate") {
    std::array<mpq_class, 3> v{mpq_class(1, 2), mpq_class(-3), mpq_class(7, 5)};
    CHECK(quat::rotate(kOne, v) == v);
    std::array<mpq_class, 3> j{0, 1, 0};
    std::array<mpq_class, 3> mj{0, -1, 0};
    CHECK(quat::rotate(kI, j) == mj);
    // isometry on 100 random cases
    const auto& reps = quat::norm_reps(11).reps;
    for (uint64_t k = 0; k < 100; ++k) {
        std::array<mpq_class, 3> w{
            mpq_class(static_cast<long>(rng::mix(1, 3 * k) % 41) - 20) / 7,
            mpq_class(static_cast<long>(rng::mix(1, 3 * k + 1) % 41) - 20) / 3,
            mpq_class(static_cast<long>(rng::mix(1, 3 * k + 2) % 41) - 20)};
        auto& z = reps[rng::mix(2, k) % reps.size()];
        auto r = quat::rotate(z, w);
        mpq_class n_in = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
        mpq_class n_out = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
        CHECK(n_in == n_out);
    }
}

TEST_CASE("hecke_apply on constants and harmonicity") {
    for (int64_t p : {3, 5, 7}) {
        auto c = quat::hecke_apply(p, poly::Poly3::constant(1));
        REQUIRE(c.terms.size() == 1);
        CHECK(c.eval(mpq_class(0), mpq_class(0), mpq_class(0)) == p + 1);
    }
    poly::Poly3 P;
    P.set(4, 0, 0, 1);
    P.set(2, 2, 0, -6);
    P.set(0, 4, 0, 1);
    auto Q = quat::hecke_apply(3, P);
    CHECK(Q.degree() == 4);
    CHECK(Q.is_homogeneous());
    CHECK(poly::laplacian(Q).is_zero());

    // linearity
    poly::Poly3 R = poly::Poly3::monomial(2, 2, 0) - poly::Poly3::monomial(0, 2, 2);
    auto lhs = quat::hecke_apply(3, P + R * mpq_class(5));
    auto rhs = quat::hecke_apply(3, P) + quat::hecke_apply(3, R) * mpq_class(5);
    CHECK((lhs - rhs).is_zero());
}

TEST_CASE("hecke_matrix basics") {
    for (int64_t p : {3, 5}) {
        auto M = quat::hecke_matrix(p, 0);
        REQUIRE(M.size() == 1);
        CHECK(M[0][0] == p + 1);
    }
    // trace times p^nu is an integer (eigenvalues of T_{p^2} are integers)
    for (int64_t p : {3, 5}) {
        mpz_class p_nu = 1;
        for (int nu = 0; nu <= 6; ++nu) {
            auto M = quat::hecke_matrix(p, nu);
            mpq_class tr = 0;
            for (size_t i = 0; i < M.size(); ++i) tr += M[i][i];
            mpq_class scaled = tr * mpq_class(p_nu);
            CHECK(scaled.get_den() == 1);
            p_nu *= p;
        }
    }
}

TEST_CASE("hecke_matrix is self-adjoint in the orthonormal normalization") {
    for (int nu : {2, 4, 6}) {
        const auto& B = sh::harmonic_basis(nu);
        auto M = quat::hecke_matrix(3, nu);
        size_t m = M.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                double sij = M[i][j].get_d() *
                             std::sqrt(B.norm2[i].get_d() / B.norm2[j].get_d());
                double sji = M[j][i].get_d() *
                             std::sqrt(B.norm2[j].get_d() / B.norm2[i].get_d());
                CHECK(std::abs(sij - sji) < 1e-9);
            }
    }
}

TEST_CASE("hecke matrices commute exactly") {
    const std::pair<int64_t, int64_t> pairs[] = {{3, 5}, {3, 7}, {5, 7}};
    for (int nu = 0; nu <= 6; ++nu) {
        for (auto [p, q] : pairs) {
            auto A = quat::hecke_matrix(p, nu);
            auto B = quat::hecke_matrix(q, nu);
            size_t m = A.size();
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) {
                    mpq_class ab = 0, ba = 0;
                    for (size_t k = 0; k < m; ++k) {
                        ab += A[i][k] * B[k][j];
                        ba += B[i][k] * A[k][j];
                    }
                    CHECK(ab == ba);
                }
        }
    }
}

TEST_CASE("hecke_eigenbasis") {
    auto b0 = quat::hecke_eigenbasis(0, {3, 5});
    REQUIRE(b0.functions.size() == 1);
    CHECK(b0.functions[0].eigenvalue.at(3) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(b0.functions[0].eigenvalue.at(5) == doctest::Approx(6.0).epsilon(1e-12));

    auto b4 = quat::hecke_eigenbasis(4, {3, 5});
    REQUIRE(b4.functions.size() == 9);
    int total = 0;
    for (int dim : b4.block_dims) total += dim;
    CHECK(total == 9);

    // residual check against the matrices, per prime
    const auto& B = sh::harmonic_basis(4);
    for (int64_t p : {3, 5}) {
        auto M = quat::hecke_matrix(p, 4);
        for (auto& f : b4.functions) {
            double lam = f.eigenvalue.at(p);
            double res2 = 0;
            for (size_t i = 0; i < 9; ++i) {
                double sv = 0;
                for (size_t j = 0; j < 9; ++j)
                    sv += M[i][j].get_d() *
                          std::sqrt(B.norm2[i].get_d() / B.norm2[j].get_d()) * f.coords[j];
                res2 += (sv - lam * f.coords[i]) * (sv - lam * f.coords[i]);
            }
            CHECK(std::sqrt(res2) < 1e-8);
        }
    }

    // the dyadic-rational polynomials are exactly harmonic
    for (auto& f : b4.functions) {
        CHECK(poly::laplacian(f.poly).is_zero());
        CHECK(f.poly.degree() == 4);
    }

    // determinism for a fixed seed
    auto again = quat::hecke_eigenbasis(4, {3, 5});
    for (size_t i = 0; i < 9; ++i)
        CHECK(again.functions[i].coords == b4.functions[i].coords);
}
