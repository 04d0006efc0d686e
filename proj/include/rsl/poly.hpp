#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>

// Exact-rational polynomials in three variables (x, y, z), the coefficient
// ring for harmonic polynomials on S^2 and all Hecke/theta identities.

namespace rsl::poly {

using Exponents = std::array<int, 3>;

struct Poly3 {
    // exponent multi-index -> coefficient; zero coefficients are never stored
    std::map<Exponents, mpq_class> terms;

    bool is_zero() const { return terms.empty(); }
    int degree() const;          // max total degree, -1 for the zero polynomial
    bool is_homogeneous() const;

    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    Poly3& operator*=(const mpq_class& c);
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(Poly3 a, const mpq_class& c) { return a *= c; }
    Poly3 operator*(const Poly3& o) const;

    mpq_class eval(const mpq_class& x, const mpq_class& y, const mpq_class& z) const;
    double eval(double x, double y, double z) const;

    void set(int a, int b, int c, const mpq_class& coef);
    static Poly3 monomial(int a, int b, int c, const mpq_class& coef = 1);
    static Poly3 constant(const mpq_class& c) { return monomial(0, 0, 0, c); }

    std::string str() const;
};

// Exact Laplacian; zero polynomial iff harmonic.
Poly3 laplacian(const Poly3& p);

// Exact moment of a monomial against the normalized surface measure on S^2:
// zero if any exponent is odd, else (a-1)!!(b-1)!!(c-1)!!/(a+b+c+1)!!.
mpq_class sphere_moment(int a, int b, int c);

// Exact L^2(S^2) inner product via monomial moments.
mpq_class inner_product(const Poly3& p, const Poly3& q);

// Least common multiple of all coefficient denominators.
mpz_class common_denominator(const Poly3& p);

// JSON round-trip: {"degree": d, "terms": [{"exponents": [a,b,c],
// "numerator": "...", "denominator": "..."}]}
std::string to_json(const Poly3& p);
Poly3 from_json(const std::string& s);

}  // namespace rsl::poly
