#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rsl/equidist.hpp"
#include "rsl/lattice_points.hpp"
#include "rsl/number_theory.hpp"
#include "rsl/poly.hpp"
#include "rsl/quaternion.hpp"
#include "rsl/sphere_harmonics.hpp"
#include "rsl/theta.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

// Radius rules have the shape "c", "n^a" or "c*n^a".
double apply_r_rule(const std::string& rule, int64_t n) {
    const char* s = rule.c_str();
    char* end = nullptr;
    double c = 1.0, a = 0.0;
    bool has_n = false;
    if (*s != 'n') {
        c = std::strtod(s, &end);
        if (end == s) throw CLI::ValidationError("--R-rule", "expected 'c', 'n^a' or 'c*n^a'");
        s = end;
        if (*s == '*') ++s;
    }
    if (*s == 'n') {
        has_n = true;
        ++s;
        if (*s == '^') {
            ++s;
            a = std::strtod(s, &end);
            if (end == s) throw CLI::ValidationError("--R-rule", "bad exponent");
            s = end;
        } else {
            a = 1.0;
        }
    }
    if (*s != '\0') throw CLI::ValidationError("--R-rule", "trailing characters in rule");
    return has_n ? c * std::pow(static_cast<double>(n), a) : c;
}

std::vector<double> parse_center(const std::string& s, int d) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (static_cast<int>(v.size()) != d + 1)
        throw CLI::ValidationError("--center", "expected " + std::to_string(d + 1) + " coordinates");
    double norm = 0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    if (norm < 1e-12) throw CLI::ValidationError("--center", "zero vector");
    for (double& c : v) c /= norm;
    return v;
}

// Re((x+iy)^nu): an integer-coefficient harmonic polynomial of degree nu.
rsl::poly::Poly3 standard_harmonic(int nu) {
    rsl::poly::Poly3 P;
    if (nu == 0) return rsl::poly::Poly3::constant(1);
    mpz_class binom = 1;
    for (int k = 0; 2 * k <= nu; ++k) {
        mpq_class coef = (k % 2 == 0) ? mpq_class(binom) : mpq_class(-binom);
        P.set(nu - 2 * k, 2 * k, 0, coef);
        binom = binom * (nu - 2 * k) * (nu - 2 * k - 1) / ((2 * k + 1) * (2 * k + 2));
    }
    return P;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

std::string cache_path(const std::string& dir, const rsl::lat::PointSet& ps) {
    const char* kind = ps.kind == rsl::lat::SetKind::FixedHeight ? "n" : "T";
    return dir + "/omega_d" + std::to_string(ps.d) + "_" + kind + std::to_string(ps.param) + ".bin";
}

int cmd_enumerate(int64_t n, int64_t T, int d, const std::string& format,
                  const std::string& out, const std::string& cache_dir) {
    rsl::lat::PointSet ps = (n > 0) ? rsl::lat::omega_n(n, d) : rsl::lat::omega_T(T, d);

    json check;
    bool ok = true;
    if (d == 2) {
        int64_t exact = 0, moebius = 0;
        if (n > 0) {
            exact = rsl::lat::omega_n_count_exact(n);
            for (uint64_t delta : rsl::nt::divisors(static_cast<uint64_t>(n)))
                moebius += rsl::nt::mobius(delta) *
                           rsl::lat::r_count(n * n / static_cast<int64_t>(delta * delta), 3);
        } else {
            for (int64_t m = 1; m <= T; ++m) {
                exact += rsl::lat::omega_n_count_exact(m);
                for (uint64_t delta : rsl::nt::divisors(static_cast<uint64_t>(m)))
                    moebius += rsl::nt::mobius(delta) *
                               rsl::lat::r_count(m * m / static_cast<int64_t>(delta * delta), 3);
            }
        }
        ok = exact == static_cast<int64_t>(ps.points.size()) &&
             moebius == static_cast<int64_t>(ps.points.size());
        check = {{"exact_formula", exact}, {"moebius_formula", moebius},
                 {"status", ok ? "ok" : "mismatch"}};
    } else {
        check = {{"status", "skipped (d != 2)"}};
    }

    if (format == "csv") {
        if (out.empty()) {
            rsl::lat::write_csv(ps, std::cerr);
        } else {
            std::ofstream f(out);
            rsl::lat::write_csv(ps, f);
        }
    } else if (!out.empty()) {
        rsl::lat::write_cache(ps, out);
    }
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        rsl::lat::write_cache(ps, cache_path(cache_dir, ps));
    }

    json j{{"command", "enumerate"},
           {"version", kVersion},
           {"config", {{"n", n}, {"T", T}, {"d", d}, {"format", format}}},
           {"count", ps.points.size()},
           {"cross_check", check}};
    emit(j);
    return ok ? 0 : 1;
}

int cmd_capstats(int64_t n, const std::string& r_rule, const std::string& center_str) {
    double R = apply_r_rule(r_rule, n);
    auto ps = rsl::lat::omega_n(n, 2);
    rsl::sh::CapSpec cap{parse_center(center_str, 2), R};
    auto res = rsl::eq::cap_count(ps, cap);
    json j{{"command", "capstats"},
           {"version", kVersion},
           {"config", {{"n", n}, {"R_rule", r_rule}, {"R", R}, {"center", cap.center}}},
           {"count", res.count},
           {"expected", res.expected},
           {"ratio", res.ratio}};
    emit(j);
    return 0;
}

int cmd_variance(int64_t n, const std::string& r_rule, int samples, uint64_t seed) {
    double R = apply_r_rule(r_rule, n);
    auto est = rsl::eq::variance_mc(n, R, samples, seed);
    json j{{"command", "variance"},
           {"version", kVersion},
           {"config",
            {{"n", n}, {"R_rule", r_rule}, {"R", R}, {"samples", samples}, {"seed", seed}}},
           {"mean_ratio", est.mean_ratio},
           {"variance", est.variance},
           {"std_error", est.std_error},
           {"bound", est.bound},
           {"within_bound", est.variance <= est.bound + 3 * est.std_error}};
    emit(j);
    return 0;
}

int cmd_covering(int64_t n, int64_t T, int K, double epsilon) {
    rsl::lat::PointSet ps = (n > 0) ? rsl::lat::omega_n(n, 2) : rsl::lat::omega_T(T, 2);
    auto rep = rsl::eq::covering_radius(ps, K);
    json j{{"command", "covering"},
           {"version", kVersion},
           {"config", {{"n", n}, {"T", T}, {"K", K}, {"epsilon", epsilon}}},
           {"label", rep.label},
           {"set_size", rep.set_size},
           {"covering_radius", rep.covering_radius},
           {"resolution_error_bound", rep.resolution_error_bound}};
    if (epsilon > 0) j["generic_covering_radius"] = rsl::eq::generic_covering_radius(ps, epsilon, K);
    emit(j);
    return 0;
}

int cmd_linnik(int64_t lmax, const std::string& out) {
    auto records = rsl::eq::linnik_exponent_scan(lmax);
    std::ostringstream csv;
    csv << "l,n,z_min,exponent,trivial\n";
    double max_exp = 0;
    for (auto& r : records) {
        csv << r.l << ',' << r.n << ',' << r.z_min << ',' << r.exponent << ','
            << (r.trivial ? 1 : 0) << '\n';
        max_exp = std::max(max_exp, r.exponent);
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        f << csv.str();
    }
    json j{{"command", "linnik"},
           {"version", kVersion},
           {"config", {{"lmax", lmax}}},
           {"records", records.size()},
           {"max_exponent", max_exp}};
    emit(j);
    return 0;
}

int cmd_hecke_verify(int64_t p, int nu, int64_t nmax) {
    rsl::poly::Poly3 P = standard_harmonic(nu);
    auto rep = rsl::theta::eichler_verify(p, P, nmax);
    json j = json::parse(rep.to_json());
    j["command"] = "hecke-verify";
    j["version"] = kVersion;
    j["config"] = {{"p", p}, {"nu", nu}, {"nmax", nmax}, {"P", P.str()}};
    emit(j);
    return rep.ok() ? 0 : 1;
}

int cmd_eigenbasis(int nu, std::vector<int64_t> primes, uint64_t seed) {
    auto basis = rsl::quat::hecke_eigenbasis(nu, primes, seed);
    json funcs = json::array();
    for (auto& f : basis.functions) {
        json ev;
        for (auto& [p, lam] : f.eigenvalue) ev[std::to_string(p)] = lam;
        funcs.push_back({{"block", f.block}, {"eigenvalues", ev}, {"coords", f.coords}});
    }
    json j{{"command", "eigenbasis"},
           {"version", kVersion},
           {"config", {{"nu", nu}, {"primes", primes}, {"seed", seed}}},
           {"block_dims", basis.block_dims},
           {"functions", funcs}};
    emit(j);
    return 0;
}

int cmd_theta(int nu, int index, int64_t kmax, const std::string& out) {
    const auto& basis = rsl::sh::harmonic_basis(nu);
    if (index < 0 || index >= static_cast<int>(basis.polys.size()))
        throw CLI::ValidationError("--index", "out of range for this nu");
    auto series = rsl::theta::r_lambda_series(basis.polys[index], kmax);
    if (out.empty()) {
        rsl::theta::write_series_csv(series, std::cout);
    } else {
        std::ofstream f(out);
        rsl::theta::write_series_csv(series, f);
        json j{{"command", "theta"},
               {"version", kVersion},
               {"config", {{"nu", nu}, {"index", index}, {"kmax", kmax}}},
               {"out", out}};
        emit(j);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rational points on spheres: enumeration, Hecke/theta identities, statistics"};
    app.require_subcommand(1);

    std::string cache_dir;
    if (const char* env = std::getenv("RSL_CACHE")) cache_dir = env;
    app.add_option("--cache-dir", cache_dir, "directory for binary point-set caches");
    int workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = auto; reserved)");

    int64_t n = 0, T = 0, lmax = 499, nmax = 300, p = 3, kmax = 100;
    int d = 2, samples = 1000, K = 20000, nu = 4, index = 0;
    uint64_t seed = 0;
    double epsilon = 0;
    std::string format = "csv", out, r_rule = "n^-0.25", center = "0,0,1";
    std::vector<int64_t> primes{3, 5};

    auto* en = app.add_subcommand("enumerate", "enumerate Omega_n or Omega_T with cross-checks");
    auto* en_n = en->add_option("--n", n, "height n");
    auto* en_T = en->add_option("--T", T, "height bound T");
    en->add_option("--d", d, "sphere dimension")->check(CLI::Range(2, 5));
    en->add_option("--format", format)->check(CLI::IsMember({"csv", "bin"}));
    en->add_option("--out", out, "point output path (csv to stderr if omitted)");
    en_n->excludes(en_T);

    auto* cs = app.add_subcommand("capstats", "count points of Omega_n in a cap");
    cs->add_option("--n", n)->required();
    cs->add_option("--R-rule", r_rule, "radius rule: c, n^a or c*n^a");
    cs->add_option("--center", center, "cap center, comma-separated");

    auto* va = app.add_subcommand("variance", "Monte-Carlo cap-count variance");
    va->add_option("--n", n)->required();
    va->add_option("--R-rule", r_rule);
    va->add_option("--samples", samples)->check(CLI::Range(100, 1000000));
    va->add_option("--seed", seed)->required();

    auto* co = app.add_subcommand("covering", "grid-estimated covering radius");
    auto* co_n = co->add_option("--n", n);
    auto* co_T = co->add_option("--T", T);
    co->add_option("--K", K, "Fibonacci grid size")->check(CLI::Range(1000, 10000000));
    co->add_option("--epsilon", epsilon, "also report generic covering radius");
    co_n->excludes(co_T);

    auto* li = app.add_subcommand("linnik", "minimal-|z| scan over odd l <= lmax");
    li->add_option("--lmax", lmax)->check(CLI::Range(int64_t{3}, int64_t{2001}));
    li->add_option("--out", out, "CSV path (stdout if omitted)");

    auto* hv = app.add_subcommand("hecke-verify", "exact Eichler commutation check");
    hv->add_option("--p", p)->required();
    hv->add_option("--nu", nu)->check(CLI::Range(0, 6));
    hv->add_option("--nmax", nmax)->check(CLI::Range(int64_t{1}, int64_t{500}));

    auto* eb = app.add_subcommand("eigenbasis", "simultaneous Hecke eigenbasis of H_nu");
    eb->add_option("--nu", nu)->check(CLI::Range(0, 8));
    eb->add_option("--primes", primes, "odd primes <= 50");
    eb->add_option("--seed", seed);

    auto* th = app.add_subcommand("theta", "theta coefficient series for a basis harmonic");
    th->add_option("--nu", nu)->check(CLI::Range(0, 12));
    th->add_option("--index", index, "basis element index");
    th->add_option("--kmax", kmax)->check(CLI::Range(int64_t{1}, int64_t{50000}));
    th->add_option("--out", out, "CSV path (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (en->parsed()) {
            if (n == 0 && T == 0) throw CLI::ValidationError("enumerate", "need --n or --T");
            return cmd_enumerate(n, T, d, format, out, cache_dir);
        }
        if (cs->parsed()) return cmd_capstats(n, r_rule, center);
        if (va->parsed()) return cmd_variance(n, r_rule, samples, seed);
        if (co->parsed()) {
            if (n == 0 && T == 0) throw CLI::ValidationError("covering", "need --n or --T");
            return cmd_covering(n, T, K, epsilon);
        }
        if (li->parsed()) return cmd_linnik(lmax, out);
        if (hv->parsed()) return cmd_hecke_verify(p, nu, nmax);
        if (eb->parsed()) return cmd_eigenbasis(nu, primes, seed);
        if (th->parsed()) return cmd_theta(nu, index, kmax, out);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
