#include "rsl/poly.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace rsl::poly {

int Poly3::degree() const {
    int d = -1;
    for (auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool Poly3::is_homogeneous() const {
    if (terms.empty()) return true;
    int d = degree();
    for (auto& [e, c] : terms)
        if (e[0] + e[1] + e[2] != d) return false;
    return true;
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (auto& [e, c] : o.terms) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (auto& [e, c] : o.terms) {
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms.erase(it);
        }
    }
    return *this;
}

Poly3& Poly3::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms.clear();
        return *this;
    }
    for (auto& [e, v] : terms) v *= c;
    return *this;
}

Poly3 Poly3::operator*(const Poly3& o) const {
    Poly3 r;
    for (auto& [e1, c1] : terms)
        for (auto& [e2, c2] : o.terms) {
            Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                mpq_class c = c1 * c2;
                if (c != 0) r.terms.emplace(e, std::move(c));
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

namespace {
mpq_class qpow(const mpq_class& b, int e) {
    mpq_class r = 1, base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}
}  // namespace

mpq_class Poly3::eval(const mpq_class& x, const mpq_class& y, const mpq_class& z) const {
    mpq_class r = 0;
    for (auto& [e, c] : terms) r += c * qpow(x, e[0]) * qpow(y, e[1]) * qpow(z, e[2]);
    return r;
}

double Poly3::eval(double x, double y, double z) const {
    double r = 0;
    for (auto& [e, c] : terms)
        r += c.get_d() * std::pow(x, e[0]) * std::pow(y, e[1]) * std::pow(z, e[2]);
    return r;
}

void Poly3::set(int a, int b, int c, const mpq_class& coef) {
    Exponents e{a, b, c};
    if (coef == 0)
        terms.erase(e);
    else
        terms[e] = coef;
}

Poly3 Poly3::monomial(int a, int b, int c, const mpq_class& coef) {
    Poly3 p;
    p.set(a, b, c, coef);
    return p;
}

std::string Poly3::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.get_str() << ')';
        const char* names[3] = {"x", "y", "z"};
        for (int i = 0; i < 3; ++i)
            if (e[i] > 0) {
                os << '*' << names[i];
                if (e[i] > 1) os << '^' << e[i];
            }
    }
    return os.str();
}

Poly3 laplacian(const Poly3& p) {
    Poly3 r;
    for (auto& [e, c] : p.terms)
        for (int i = 0; i < 3; ++i)
            if (e[i] >= 2) {
                Exponents e2 = e;
                e2[i] -= 2;
                mpq_class add = c * e[i] * (e[i] - 1);
                auto it = r.terms.find(e2);
                if (it == r.terms.end()) {
                    r.terms.emplace(e2, std::move(add));
                } else {
                    it->second += add;
                    if (it->second == 0) r.terms.erase(it);
                }
            }
    return r;
}

namespace {
mpz_class double_factorial(int n) {
    // (-1)!! = 1
    mpz_class r = 1;
    for (int k = n; k > 1; k -= 2) r *= k;
    return r;
}
}  // namespace

mpq_class sphere_moment(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("sphere_moment: negative exponent");
    if (a % 2 || b % 2 || c % 2) return 0;
    mpq_class r(double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1),
                double_factorial(a + b + c + 1));
    r.canonicalize();
    return r;
}

mpq_class inner_product(const Poly3& p, const Poly3& q) {
    mpq_class r = 0;
    for (auto& [e1, c1] : p.terms)
        for (auto& [e2, c2] : q.terms)
            r += c1 * c2 * sphere_moment(e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]);
    return r;
}

mpz_class common_denominator(const Poly3& p) {
    mpz_class l = 1;
    for (auto& [e, c] : p.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    return l;
}

std::string to_json(const Poly3& p) {
    nlohmann::json j;
    j["degree"] = p.degree();
    j["terms"] = nlohmann::json::array();
    for (auto& [e, c] : p.terms) {
        j["terms"].push_back({{"exponents", {e[0], e[1], e[2]}},
                              {"numerator", c.get_num().get_str()},
                              {"denominator", c.get_den().get_str()}});
    }
    return j.dump();
}

Poly3 from_json(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    Poly3 p;
    for (auto& t : j.at("terms")) {
        auto& e = t.at("exponents");
        mpq_class c(mpz_class(t.at("numerator").get<std::string>()),
                    mpz_class(t.at("denominator").get<std::string>()));
        c.canonicalize();
        p.set(e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), c);
    }
    return p;
}

}  // namespace rsl::poly
