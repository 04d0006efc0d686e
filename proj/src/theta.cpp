#include "rsl/theta.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "rsl/lattice_points.hpp"
#include "rsl/number_theory.hpp"
#include "rsl/quaternion.hpp"

namespace rsl::theta {

bool in_lambda(const LambdaVec& v) {
    int64_t par = v[0] & 1;
    return (v[1] & 1) == par && (v[2] & 1) == par;
}

std::vector<LambdaVec> lambda_vectors(int64_t k) {
    std::vector<LambdaVec> out;
    for (auto& m : lat::representations(k, 3))
        if (in_lambda({m[0], m[1], m[2]})) out.push_back({m[0], m[1], m[2]});
    return out;
}

mpq_class r_P(const poly::Poly3& P, int64_t n) {
    mpq_class s = 0;
    for (auto& m : lat::representations(n, 3))
        s += P.eval(mpq_class(m[0]), mpq_class(m[1]), mpq_class(m[2]));
    return s;
}

mpq_class r_lambda_P(const poly::Poly3& P, int64_t n) {
    mpq_class s = 0;
    for (auto& v : lambda_vectors(n))
        s += P.eval(mpq_class(v[0]), mpq_class(v[1]), mpq_class(v[2]));
    return s;
}

std::vector<mpq_class> r_lambda_series(const poly::Poly3& P, int64_t k_max) {
    int nu = std::max(P.degree(), 0);
    mpz_class D = common_denominator(P);
    // integer-scaled terms
    struct Term {
        int e0, e1, e2;
        mpz_class c;
    };
    std::vector<Term> terms;
    for (auto& [e, c] : P.terms) {
        mpq_class scaled = c * D;
        terms.push_back({e[0], e[1], e[2], scaled.get_num()});
    }

    auto M = static_cast<int64_t>(std::sqrt(static_cast<double>(k_max)));
    while (M * M > k_max) --M;
    while ((M + 1) * (M + 1) <= k_max) ++M;

    // power table pw[t + M][e] = t^e
    std::vector<std::vector<mpz_class>> pw(2 * M + 1, std::vector<mpz_class>(nu + 1));
    for (int64_t t = -M; t <= M; ++t) {
        pw[t + M][0] = 1;
        for (int e = 1; e <= nu; ++e) pw[t + M][e] = pw[t + M][e - 1] * t;
    }

    std::vector<mpz_class> acc(k_max + 1, mpz_class(0));
    std::vector<mpz_class> zcoef(nu + 1);
    for (int par = 0; par <= 1; ++par) {
        for (int64_t b = -M + ((M + par) & 1); b <= M; b += 2) {
            int64_t kb = k_max - b * b;
            if (kb < 0) continue;
            for (int64_t c = -M + ((M + par) & 1); c <= M; c += 2) {
                int64_t kbc = kb - c * c;
                if (kbc < 0) continue;
                // collapse P(b, c, .) to a univariate polynomial in the last slot
                for (auto& z : zcoef) z = 0;
                for (auto& t : terms) zcoef[t.e2] += t.c * pw[b + M][t.e0] * pw[c + M][t.e1];
                auto dmax = static_cast<int64_t>(std::sqrt(static_cast<double>(kbc)));
                while (dmax * dmax > kbc) --dmax;
                while ((dmax + 1) * (dmax + 1) <= kbc) ++dmax;
                for (int64_t d = -dmax + ((dmax + par) & 1); d <= dmax; d += 2) {
                    int64_t k = b * b + c * c + d * d;
                    mpz_class val = 0;
                    for (int e = 0; e <= nu; ++e)
                        if (zcoef[e] != 0) val += zcoef[e] * pw[d + M][e];
                    acc[k] += val;
                }
            }
        }
    }

    std::vector<mpq_class> out(k_max + 1);
    for (int64_t k = 0; k <= k_max; ++k) {
        out[k] = mpq_class(acc[k], D);
        out[k].canonicalize();
    }
    return out;
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
}  // namespace

mpq_class kohnen_lift_A(const poly::Poly3& P, int64_t n) {
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("kohnen_lift_A: n must be odd, >= 1");
    int nu = std::max(P.degree(), 0);
    mpq_class s = 0;
    for (uint64_t d : nt::divisors(static_cast<uint64_t>(n))) {
        int chi = nt::chi4(d);
        if (chi == 0) continue;
        int64_t q = n / static_cast<int64_t>(d);
        s += chi * mpq_class(zpow(static_cast<int64_t>(d), nu)) * r_P(P, q * q);
    }
    return mpq_class(zpow(2, nu)) * s;
}

double hecke_lambda(const poly::Poly3& P, int64_t n) {
    mpq_class A1 = kohnen_lift_A(P, 1);
    if (A1 == 0) throw VanishingFirstCoefficient();
    int nu = std::max(P.degree(), 0);
    mpq_class ratio = kohnen_lift_A(P, n) / A1;
    return ratio.get_d() * std::pow(static_cast<double>(n), -0.5 - nu);
}

double mobius_inversion_residual(const poly::Poly3& P, int64_t n) {
    if (n < 1 || n % 2 == 0)
        throw std::invalid_argument("mobius_inversion_residual: n must be odd, >= 1");
    int nu = std::max(P.degree(), 0);
    double lhs = r_P(P, n * n).get_d();
    double rp1 = r_P(P, 1).get_d();
    double rhs = 0;
    for (uint64_t delta : nt::divisors(static_cast<uint64_t>(n))) {
        auto nd = static_cast<uint64_t>(n) / delta;
        int mu = nt::mobius(nd);
        if (mu == 0) continue;
        int chi = nt::chi4(nd);
        if (chi == 0) continue;
        rhs += mu * chi * std::sqrt(static_cast<double>(delta)) *
               hecke_lambda(P, static_cast<int64_t>(delta));
    }
    rhs *= rp1 * std::pow(static_cast<double>(n), nu);
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

std::string EichlerReport::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["nu"] = nu;
    j["n_max"] = n_max;
    j["failures"] = nlohmann::json::array();
    for (auto& f : failures)
        j["failures"].push_back({{"n", f.n}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    return j.dump();
}

EichlerReport eichler_verify(int64_t p, const poly::Poly3& P, int64_t n_max) {
    if (p == 2 || p > 20 || !nt::is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("eichler_verify: p must be an odd prime <= 20");
    if (n_max < 1 || n_max > 500)
        throw std::invalid_argument("eichler_verify: n_max must be in [1, 500]");
    int nu = std::max(P.degree(), 0);
    if (nu > 6) throw std::invalid_argument("eichler_verify: deg P must be <= 6");

    EichlerReport rep;
    rep.p = p;
    rep.nu = nu;
    rep.n_max = n_max;

    poly::Poly3 Q = quat::hecke_apply(p, P);
    std::vector<mpq_class> a = r_lambda_series(P, p * p * n_max);
    std::vector<mpq_class> b = r_lambda_series(Q, n_max);

    mpz_class p_nu = zpow(p, nu), p_12nu = zpow(p, 1 + 2 * nu);
    for (int64_t n = 1; n <= n_max; ++n) {
        mpq_class rhs = a[p * p * n];
        int leg = (n % p == 0) ? 0 : nt::legendre_symbol(-n, static_cast<uint64_t>(p));
        if (leg != 0) rhs += leg * mpq_class(p_nu) * a[n];
        if (n % (p * p) == 0) rhs += mpq_class(p_12nu) * a[n / (p * p)];
        // Q describes the action on unit vectors; on a norm-n lattice vector the
        // degree-nu homogeneous extension picks up p^nu.
        mpq_class lhs = mpq_class(p_nu) * b[n];
        if (lhs != rhs)
            rep.failures.push_back({n, lhs.get_str(), rhs.get_str()});
    }
    return rep;
}

int neighbor_count(const LambdaVec& v, int64_t p) {
    if (p == 2 || p > 20 || !nt::is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("neighbor_count: p must be an odd prime <= 20");
    if (!in_lambda(v)) throw std::invalid_argument("neighbor_count: v must lie in Lambda");
    int count = 0;
    for (const auto& g : quat::norm_rep_classes(p)) {
        // membership in the neighbor attached to gamma: conj(gamma) v gamma in
        // p^2 Lambda; on twice-coordinates conj(G) V G = M v with an extra 4
        auto M = quat::conjugation_matrix(quat::quat_conj(g));
        int64_t w[3];
        bool integral = true;
        for (int r = 0; r < 3 && integral; ++r) {
            int64_t s = M[r][0] * v[0] + M[r][1] * v[1] + M[r][2] * v[2];
            if (s % (4 * p * p) != 0) integral = false;
            else w[r] = s / (4 * p * p);
        }
        if (integral && in_lambda({w[0], w[1], w[2]})) ++count;
    }
    return count;
}

void write_series_csv(const std::vector<mpq_class>& values, std::ostream& os) {
    os << "n,numerator,denominator\n";
    for (size_t n = 1; n < values.size(); ++n)
        os << n << ',' << values[n].get_num().get_str() << ','
           << values[n].get_den().get_str() << '\n';
}

}  // namespace rsl::theta
