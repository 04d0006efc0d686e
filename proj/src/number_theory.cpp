#include "rsl/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsl::nt {

Factorization factorize(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    auto strip = [&](uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    strip(5);
    // wheel mod 30: offsets of residues coprime to 30
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t p = 7;
    int w = 0;
    while (p <= n / p) {
        strip(p);
        p += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

int mobius(uint64_t n) {
    Factorization f = factorize(n);
    for (auto& [p, e] : f.factors)
        if (e > 1) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

int chi4(uint64_t n) {
    switch (n % 4) {
        case 1: return 1;
        case 3: return -1;
        default: return 0;
    }
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull})
        if (n % q == 0) return n == q;
    static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t p = 7;
    int w = 0;
    while (p <= n / p) {
        if (n % p == 0) return false;
        p += wheel[w];
        w = (w + 1) & 7;
    }
    return true;
}

int legendre_symbol(int64_t a, uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    int64_t sp = static_cast<int64_t>(p);
    int64_t r = a % sp;
    if (r < 0) r += sp;
    if (r == 0) return 0;
    // Euler criterion, modular exponentiation
    uint64_t base = static_cast<uint64_t>(r), e = (p - 1) / 2, acc = 1;
    while (e) {
        if (e & 1) acc = (unsigned __int128)acc * base % p;
        base = (unsigned __int128)base * base % p;
        e >>= 1;
    }
    if (acc == 1) return 1;
    if (acc == p - 1) return -1;
    throw std::logic_error("legendre_symbol: Euler criterion failed (p not prime?)");
}

uint64_t divisor_count(uint64_t n) {
    Factorization f = factorize(n);
    uint64_t d = 1;
    for (auto& [p, e] : f.factors) d *= static_cast<uint64_t>(e + 1);
    return d;
}

std::vector<uint64_t> divisors(uint64_t n) {
    Factorization f = factorize(n);
    std::vector<uint64_t> ds{1};
    for (auto& [p, e] : f.factors) {
        size_t sz = ds.size();
        uint64_t pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace rsl::nt
