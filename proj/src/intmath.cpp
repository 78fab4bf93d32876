#include "orbitcode/intmath.hpp"

#include <algorithm>
#include <numeric>

namespace orbitcode {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) { return std::gcd(a, b); }

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
    if (a % n == 0) return true;
    uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

uint64_t pollard_brent(uint64_t n) {
    // n odd composite, not a prime power of small primes
    if (n % 2 == 0) return 2;
    uint64_t x0 = 2, c = 1;
    while (true) {
        uint64_t x = x0, y = x0, d = 1;
        uint64_t power = 1, lam = 1;
        while (d == 1) {
            if (power == lam) { x = y; power <<= 1; lam = 0; }
            y = (mulmod(y, y, n) + c) % n;
            ++lam;
            uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
        ++c;
        if (c > 64) ++x0;  // fresh start, extremely unlikely to be needed
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) { primes.push_back(n); return; }
    uint64_t d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic witness set for 64-bit integers
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

Factorization factorize_u64(uint64_t n) {
    Factorization out;
    if (n <= 1) return out;
    std::vector<uint64_t> primes;
    for (uint64_t d = 2; d < (1u << 21) && d * d <= n; d == 2 ? d = 3 : d += 2) {
        while (n % d == 0) { primes.push_back(d); n /= d; }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

std::vector<uint64_t> divisors_from(const Factorization& fac) {
    std::vector<uint64_t> divs{1};
    for (const auto& [p, e] : fac) {
        size_t base = divs.size();
        uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::optional<uint64_t> checked_pow(uint64_t base, unsigned exp) {
    unsigned __int128 acc = 1;
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > limit) return std::nullopt;
    }
    return static_cast<uint64_t>(acc);
}

}  // namespace orbitcode
