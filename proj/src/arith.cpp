#include "goodint/arith.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace goodint {

namespace {

constexpr std::uint64_t kMaxInput = std::uint64_t{1} << 63;

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": must be positive");
}

}  // namespace

unsigned v2(std::uint64_t n) {
    require_positive(n, "v2");
    return static_cast<unsigned>(std::countr_zero(n));
}

bool exact_divides(unsigned s, std::uint64_t n) { return v2(n) == s; }

TwoAdicSplit two_adic_split(std::uint64_t n) {
    require_positive(n, "two_adic_split");
    const unsigned beta = v2(n);
    return {beta, n >> beta};
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t n) {
    require_positive(n, "reduce_mod");
    const auto sn = static_cast<std::int64_t>(n);
    std::int64_t r = a % sn;
    if (r < 0) r += sn;
    return static_cast<std::uint64_t>(r);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin base set for the full 64-bit range.
    const std::uint64_t d = n - 1;
    const unsigned s = static_cast<unsigned>(std::countr_zero(d));
    const std::uint64_t odd = d >> s;
    for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                               19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(base, odd, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

std::uint64_t brent_rho(std::uint64_t n) {
    // n odd composite, no factor below the trial-division bound.
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            const std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    const std::uint64_t d = brent_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    require_positive(n, "factorize");
    if (n > kMaxInput) throw std::invalid_argument("factorize: input above 2^63");
    Factorization f;
    f.value = n;
    for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.prime_powers.push_back({p, e});
    }
    if (n > 1) {
        std::vector<std::uint64_t> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            f.prime_powers.push_back({rest[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    return f;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : f.prime_powers) {
        const std::size_t base = ds.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    require_positive(n, "mod_inverse");
    if (n == 1) return 0;
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(n),
                 new_r = static_cast<std::int64_t>(a % n);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
    return reduce_mod(t, n);
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t n) {
    require_positive(n, "mult_order");
    if (n == 1) return 1;
    const std::uint64_t r = reduce_mod(a, n);
    if (std::gcd(r, n) != 1)
        throw std::invalid_argument("mult_order: gcd(a, n) != 1");
    // Start from the group exponent and strip prime factors.
    std::uint64_t e = carmichael(n);
    for (const auto& [p, _] : factorize(e).prime_powers) {
        while (e % p == 0 && powmod(r, e / p, n) == 1) e /= p;
    }
    return e;
}

std::uint64_t mult_order_ratio(std::int64_t a, std::int64_t b, std::uint64_t n) {
    require_positive(n, "mult_order_ratio");
    if (n == 1) return 1;
    const std::uint64_t ra = reduce_mod(a, n);
    const std::uint64_t rb = reduce_mod(b, n);
    if (std::gcd(ra, n) != 1)
        throw std::invalid_argument("mult_order_ratio: gcd(a, n) != 1");
    const std::uint64_t ratio = mulmod(ra, mod_inverse(rb, n), n);
    return mult_order(static_cast<std::int64_t>(ratio), n);
}

int mobius(std::uint64_t n) {
    const Factorization f = factorize(n);
    for (const auto& pp : f.prime_powers)
        if (pp.exponent > 1) return 0;
    return f.prime_powers.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t carmichael(std::uint64_t n) {
    require_positive(n, "carmichael");
    std::uint64_t lambda = 1;
    for (const auto& [p, e] : factorize(n).prime_powers) {
        std::uint64_t comp;
        if (p == 2) {
            comp = e == 1 ? 1 : (e == 2 ? 2 : std::uint64_t{1} << (e - 2));
        } else {
            comp = p - 1;
            for (unsigned i = 1; i < e; ++i) comp *= p;
        }
        lambda = std::lcm(lambda, comp);
    }
    return lambda;
}

std::optional<std::uint64_t>
solve_half_order_system(const std::vector<std::uint64_t>& values) {
    if (values.empty())
        throw std::invalid_argument("solve_half_order_system: empty system");
    const unsigned s = v2(values.front());
    std::uint64_t l = 1;
    for (std::uint64_t a : values) {
        if (v2(a) != s) return std::nullopt;
        l = std::lcm(l, a);
    }
    // lcm/a_i is odd for every i, so lcm ≡ a_i (mod 2a_i).
    return l;
}

}  // namespace goodint
