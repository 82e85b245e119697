#pragma once

// Exact elementary number theory on 64-bit integers: 2-adic valuations,
// factorization, multiplicative orders, Möbius and Carmichael functions,
// and the half-order congruence system x ≡ a_i (mod 2a_i).

#include <cstdint>
#include <optional>
#include <vector>

namespace goodint {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Complete prime factorization of a positive integer; primes strictly
// increasing, exponents >= 1, product reconstructs value (1 -> empty list).
struct Factorization {
    std::uint64_t value = 1;
    std::vector<PrimePower> prime_powers;

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// n = 2^beta * odd_part with odd_part odd.
struct TwoAdicSplit {
    unsigned beta = 0;
    std::uint64_t odd_part = 1;
};

// Largest s with 2^s | n. Rejects n = 0.
unsigned v2(std::uint64_t n);

// True iff 2^s || n (exactly divides).
bool exact_divides(unsigned s, std::uint64_t n);

TwoAdicSplit two_adic_split(std::uint64_t n);

// Deterministic factorization for 1 <= n < 2^63: trial division by small
// primes, then Miller-Rabin + Brent's rho for the remaining cofactor.
Factorization factorize(std::uint64_t n);

// All divisors of the factored value, sorted ascending.
std::vector<std::uint64_t> divisors(const Factorization& f);

bool is_prime(std::uint64_t n);

// (a*b) mod m and a^e mod m, overflow-safe for 64-bit moduli.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Canonical residue of a (possibly negative) integer in [0, n).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n);

// Inverse of a modulo n; throws std::invalid_argument when gcd(a, n) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n);

// Smallest e >= 1 with a^e ≡ 1 (mod n); a is reduced into [0, n) first.
// ord_1(a) = 1 by convention (trivial group). Requires gcd(a, n) = 1.
std::uint64_t mult_order(std::int64_t a, std::uint64_t n);

// Order of a*b^{-1} modulo n. Requires gcd(a, n) = gcd(b, n) = 1.
std::uint64_t mult_order_ratio(std::int64_t a, std::int64_t b, std::uint64_t n);

// Möbius function, in {-1, 0, 1}.
int mobius(std::uint64_t n);

// Carmichael function: exponent of the unit group mod n.
std::uint64_t carmichael(std::uint64_t n);

// Some x with x ≡ a_i (mod 2a_i) for all i, when one exists. A solution
// exists iff all a_i share the same 2-adic valuation; in that case
// lcm(a_1, ..., a_t) is one (lcm/a_i is odd), and is what gets returned.
std::optional<std::uint64_t>
solve_half_order_system(const std::vector<std::uint64_t>& values);

}  // namespace goodint
