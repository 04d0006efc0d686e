#include "rsl/quaternion.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

#include "rsl/number_theory.hpp"
#include "rsl/sphere_harmonics.hpp"

namespace rsl::quat {

bool HurwitzQuaternion::valid() const {
    int64_t par = A & 1;
    return (B & 1) == par && (C & 1) == par && (D & 1) == par;
}

namespace {
using Quad = std::array<int64_t, 4>;

// Hamilton product of plain integer quaternions (a + bi + cj + dk).
Quad hamilton(const Quad& x, const Quad& y) {
    return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
            x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
            x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}
}  // namespace

HurwitzQuaternion quat_mul(const HurwitzQuaternion& x, const HurwitzQuaternion& y) {
    Quad z = hamilton({x.A, x.B, x.C, x.D}, {y.A, y.B, y.C, y.D});
    for (int64_t c : z)
        if (c & 1) throw std::logic_error("quat_mul: non-Hurwitz product");
    return {z[0] / 2, z[1] / 2, z[2] / 2, z[3] / 2};
}

HurwitzQuaternion quat_conj(const HurwitzQuaternion& x) { return {x.A, -x.B, -x.C, -x.D}; }

int64_t quat_nr(const HurwitzQuaternion& x) {
    int64_t s = x.A * x.A + x.B * x.B + x.C * x.C + x.D * x.D;
    if (s % 4 != 0) throw std::logic_error("quat_nr: invalid Hurwitz quaternion");
    return s / 4;
}

const std::vector<HurwitzQuaternion>& units() {
    static const std::vector<HurwitzQuaternion> us = [] {
        std::vector<HurwitzQuaternion> v;
        for (int i = 0; i < 4; ++i)
            for (int s : {2, -2}) {
                Quad q{0, 0, 0, 0};
                q[i] = s;
                v.push_back({q[0], q[1], q[2], q[3]});
            }
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int c : {1, -1})
                    for (int d : {1, -1}) v.push_back({a, b, c, d});
        return v;
    }();
    return us;
}

const NormPReps& norm_reps(int64_t p) {
    if (p == 2 || p > 200 || !nt::is_prime(static_cast<uint64_t>(p)))
        throw std::invalid_argument("norm_reps: p must be an odd prime <= 200");
    static std::map<int64_t, NormPReps> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    NormPReps r;
    r.p = p;
    int64_t target = 4 * p;
    auto bound = static_cast<int64_t>(std::sqrt(static_cast<double>(target)));
    for (int64_t A = -bound; A <= bound; ++A)
        for (int64_t B = -bound; B <= bound; ++B) {
            if (((A ^ B) & 1) != 0) continue;
            int64_t r2 = target - A * A - B * B;
            if (r2 < 0) continue;
            for (int64_t C = -bound; C <= bound; ++C) {
                if (((A ^ C) & 1) != 0) continue;
                int64_t r3 = r2 - C * C;
                if (r3 < 0) continue;
                auto D = static_cast<int64_t>(std::sqrt(static_cast<double>(r3)));
                while (D > 0 && D * D > r3) --D;
                if (D * D != r3) continue;
                if (((A ^ D) & 1) != 0) continue;
                r.reps.push_back({A, B, C, D});
                if (D > 0) r.reps.push_back({A, B, C, -D});
            }
        }
    if (r.reps.size() != static_cast<size_t>(24 * (p + 1)))
        throw std::logic_error("norm_reps: expected 24(p+1) elements");
    return cache.emplace(p, std::move(r)).first->second;
}

std::vector<HurwitzQuaternion> norm_rep_classes(int64_t p) {
    std::set<HurwitzQuaternion> canon;
    for (const auto& z : norm_reps(p).reps) {
        HurwitzQuaternion best = z;
        for (const auto& u : units()) best = std::min(best, quat_mul(z, u));
        canon.insert(best);
    }
    if (canon.size() != static_cast<size_t>(p + 1))
        throw std::logic_error("norm_rep_classes: expected p+1 classes");
    return {canon.begin(), canon.end()};
}

std::array<std::array<int64_t, 3>, 3> conjugation_matrix(const HurwitzQuaternion& z) {
    Quad Z{z.A, z.B, z.C, z.D}, Zc{z.A, -z.B, -z.C, -z.D};
    std::array<std::array<int64_t, 3>, 3> M;
    for (int col = 0; col < 3; ++col) {
        Quad e{0, 0, 0, 0};
        e[col + 1] = 1;
        Quad img = hamilton(hamilton(Z, e), Zc);
        if (img[0] != 0) throw std::logic_error("conjugation_matrix: non-pure image");
        for (int row = 0; row < 3; ++row) M[row][col] = img[row + 1];
    }
    return M;
}

std::array<mpq_class, 3> rotate(const HurwitzQuaternion& z, const std::array<mpq_class, 3>& v) {
    int64_t nr = quat_nr(z);
    if (nr <= 0) throw std::invalid_argument("rotate: nr(z) must be positive");
    auto M = conjugation_matrix(z);
    std::array<mpq_class, 3> out;
    for (int r = 0; r < 3; ++r) {
        mpq_class s = 0;
        for (int c = 0; c < 3; ++c) s += mpq_class(M[r][c]) * v[c];
        out[r] = s / (4 * nr);
    }
    return out;
}

namespace {
using poly::Poly3;

// P composed with the integer linear map x -> M x.
Poly3 substitute(const Poly3& P, const std::array<std::array<int64_t, 3>, 3>& M) {
    int nu = P.degree();
    std::array<Poly3, 3> lin;
    for (int r = 0; r < 3; ++r) {
        lin[r].set(1, 0, 0, M[r][0]);
        lin[r].set(0, 1, 0, M[r][1]);
        lin[r].set(0, 0, 1, M[r][2]);
    }
    // power tables lin[r]^e, e <= nu
    std::array<std::vector<Poly3>, 3> pw;
    for (int r = 0; r < 3; ++r) {
        pw[r].resize(nu + 1);
        pw[r][0] = Poly3::constant(1);
        for (int e = 1; e <= nu; ++e) pw[r][e] = pw[r][e - 1] * lin[r];
    }
    Poly3 out;
    for (auto& [e, c] : P.terms) {
        Poly3 t = pw[0][e[0]] * pw[1][e[1]];
        t = t * pw[2][e[2]];
        out += t * c;
    }
    return out;
}
}  // namespace

poly::Poly3 hecke_apply(int64_t p, const poly::Poly3& P) {
    if (!P.is_homogeneous()) throw std::invalid_argument("hecke_apply: P must be homogeneous");
    int nu = std::max(P.degree(), 0);
    Poly3 acc;
    for (const auto& z : norm_reps(p).reps) acc += substitute(P, conjugation_matrix(z));
    // each substitution computed P(Z x conj(Z)) = (4p)^nu P(z x conj(z)/p)
    mpz_class scale_z = 1;
    for (int i = 0; i < nu; ++i) scale_z *= 4 * p;
    mpq_class scale(1, 24 * scale_z);
    scale.canonicalize();
    return acc * scale;
}

std::vector<std::vector<mpq_class>> hecke_matrix(int64_t p, int nu) {
    if (nu < 0 || nu > 8) throw std::invalid_argument("hecke_matrix: nu must be in [0, 8]");
    const sh::OrthoBasis& basis = sh::harmonic_basis(nu);
    size_t dim = basis.polys.size();
    std::vector<std::vector<mpq_class>> M(dim, std::vector<mpq_class>(dim, 0));
    for (size_t j = 0; j < dim; ++j) {
        Poly3 Tj = hecke_apply(p, basis.polys[j]);
        for (size_t i = 0; i < dim; ++i)
            M[i][j] = inner_product(Tj, basis.polys[i]) / basis.norm2[i];
    }
    return M;
}

EigenBasis hecke_eigenbasis(int nu, const std::vector<int64_t>& primes, uint64_t seed,
                            double tol) {
    if (nu > 8) throw std::invalid_argument("hecke_eigenbasis: nu must be <= 8");
    for (int64_t p : primes)
        if (p == 2 || p > 50) throw std::invalid_argument("hecke_eigenbasis: primes must be odd, <= 50");
    const sh::OrthoBasis& basis = sh::harmonic_basis(nu);
    int dim = static_cast<int>(basis.polys.size());

    // symmetric matrices in the orthonormal basis u_i = f_i / sqrt(norm2_i)
    std::vector<Eigen::MatrixXd> S;
    for (int64_t p : primes) {
        auto M = hecke_matrix(p, nu);
        Eigen::MatrixXd Sp(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                Sp(i, j) = M[i][j].get_d() *
                           std::sqrt(basis.norm2[i].get_d() / basis.norm2[j].get_d());
        S.push_back(std::move(Sp));
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int attempt = 0; attempt < 3; ++attempt) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(dim, dim);
        for (auto& Sp : S) A += unif(rng) * Sp;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
        const Eigen::MatrixXd& V = es.eigenvectors();

        EigenBasis out;
        out.nu = nu;
        out.seed = seed;
        bool ok = true;
        for (int k = 0; k < dim && ok; ++k) {
            Eigen::VectorXd v = V.col(k);
            EigenFunction f;
            f.coords.assign(v.data(), v.data() + dim);
            for (size_t pi = 0; pi < primes.size(); ++pi) {
                double lam = v.dot(S[pi] * v);
                if ((S[pi] * v - lam * v).norm() > tol) {
                    ok = false;
                    break;
                }
                f.eigenvalue[primes[pi]] = lam;
            }
            if (!ok) break;
            for (int i = 0; i < dim; ++i) {
                // one exact dyadic scale per basis polynomial keeps the result
                // an exact rational combination of harmonics
                mpq_class scale(v(i) / std::sqrt(basis.norm2[i].get_d()));
                if (scale == 0) continue;
                for (auto& [e, c] : basis.polys[i].terms) {
                    mpq_class add = c * scale;
                    auto it = f.poly.terms.find(e);
                    if (it == f.poly.terms.end())
                        f.poly.terms.emplace(e, add);
                    else {
                        it->second += add;
                        if (it->second == 0) f.poly.terms.erase(it);
                    }
                }
            }
            out.functions.push_back(std::move(f));
        }
        if (!ok) continue;

        // group by shared eigenvalue tuples: degenerate eigenspaces stay one block
        int block = -1;
        for (size_t k = 0; k < out.functions.size(); ++k) {
            bool same = k > 0;
            if (k > 0)
                for (int64_t p : primes)
                    same = same && std::abs(out.functions[k].eigenvalue[p] -
                                            out.functions[k - 1].eigenvalue[p]) < 1e-6;
            if (!same) {
                ++block;
                out.block_dims.push_back(0);
            }
            out.functions[k].block = block;
            ++out.block_dims.back();
        }
        return out;
    }
    throw std::runtime_error("hecke_eigenbasis: residual tolerance not met after 3 draws");
}

}  // namespace rsl::quat
