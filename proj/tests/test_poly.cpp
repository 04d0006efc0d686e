#include "doctest.h"
#include "rsl/poly.hpp"

using namespace rsl::poly;

TEST_CASE("arithmetic and evaluation") {
    Poly3 p = Poly3::monomial(2, 0, 0) + Poly3::monomial(0, 2, 0) * mpq_class(-1);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.eval(mpq_class(3), mpq_class(2), mpq_class(7)) == 5);
    CHECK(p.eval(3.0, 2.0, 7.0) == doctest::Approx(5.0));

    Poly3 q = p * p;
    CHECK(q.degree() == 4);
    CHECK(q.eval(mpq_class(3), mpq_class(2), mpq_class(0)) == 25);

    Poly3 z = p - p;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
}

TEST_CASE("zero coefficients are never stored") {
    Poly3 p;
    p.set(1, 0, 0, mpq_class(1, 2));
    p.set(1, 0, 0, 0);
    CHECK(p.terms.empty());
    Poly3 q = Poly3::monomial(3, 1, 0) - Poly3::monomial(3, 1, 0);
    CHECK(q.terms.empty());
}

TEST_CASE("laplacian") {
    // harmonic: x^2 - y^2
    Poly3 h = Poly3::monomial(2, 0, 0) - Poly3::monomial(0, 2, 0);
    CHECK(laplacian(h).is_zero());
    // not harmonic: x^2
    CHECK(laplacian(Poly3::monomial(2, 0, 0)).eval(mpq_class(0), mpq_class(0), mpq_class(0)) == 2);
    // classic degree-4 harmonic
    Poly3 P;
    P.set(4, 0, 0, 1);
    P.set(2, 2, 0, -6);
    P.set(0, 4, 0, 1);
    CHECK(laplacian(P).is_zero());
}

TEST_CASE("sphere moments") {
    CHECK(sphere_moment(0, 0, 0) == 1);
    CHECK(sphere_moment(2, 0, 0) == mpq_class(1, 3));
    CHECK(sphere_moment(1, 0, 0) == 0);
    CHECK(sphere_moment(2, 2, 0) == mpq_class(1, 15));
    CHECK(sphere_moment(4, 0, 0) == mpq_class(1, 5));
    CHECK(sphere_moment(2, 2, 2) == mpq_class(1, 105));
    // x^2 + y^2 + z^2 integrates to 1
    CHECK(sphere_moment(2, 0, 0) + sphere_moment(0, 2, 0) + sphere_moment(0, 0, 2) == 1);
}

TEST_CASE("inner product") {
    Poly3 x = Poly3::monomial(1, 0, 0), y = Poly3::monomial(0, 1, 0);
    CHECK(inner_product(x, y) == 0);
    CHECK(inner_product(x, x) == mpq_class(1, 3));
    Poly3 h = Poly3::monomial(2, 0, 0) - Poly3::monomial(0, 2, 0);
    CHECK(inner_product(h, Poly3::constant(1)) == 0);
}

TEST_CASE("common denominator") {
    Poly3 p;
    p.set(1, 0, 0, mpq_class(1, 6));
    p.set(0, 1, 0, mpq_class(3, 4));
    CHECK(common_denominator(p) == 12);
    CHECK(common_denominator(Poly3::constant(5)) == 1);
}

TEST_CASE("json round trip") {
    Poly3 p;
    p.set(4, 0, 0, mpq_class(22, 7));
    p.set(2, 2, 0, mpq_class(-6));
    p.set(0, 0, 4, mpq_class(1, 3));
    Poly3 q = from_json(to_json(p));
    CHECK(q.terms == p.terms);
    CHECK(from_json(to_json(Poly3{})).is_zero());
}
