#pragma once

#include <cstdint>
#include <vector>

// Elementary arithmetic: factorization, Moebius, characters, divisor counts.
// All functions are pure and safe for concurrent use.

namespace rsl::nt {

struct Factorization {
    uint64_t value = 1;
    // (prime, exponent), primes strictly increasing, exponents >= 1
    std::vector<std::pair<uint64_t, int>> factors;
};

// Deterministic trial division with a 2/3/5 wheel. Rejects n = 0.
Factorization factorize(uint64_t n);

// 0 if n is not squarefree, else (-1)^(number of prime factors). Rejects n = 0.
int mobius(uint64_t n);

// Primitive character mod 4: 0 for even n, +1 for n = 1 (4), -1 for n = 3 (4).
int chi4(uint64_t n);

// Quadratic residue symbol (a/p) for odd prime p; 0 iff p | a.
// p is verified prime by trial division; composite or even p is rejected.
int legendre_symbol(int64_t a, uint64_t p);

// Number of positive divisors. Rejects n = 0.
uint64_t divisor_count(uint64_t n);

// All positive divisors of n, increasing.
std::vector<uint64_t> divisors(uint64_t n);

bool is_prime(uint64_t n);

}  // namespace rsl::nt
