#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orbitcode {

/// Prime-power factorization, sorted by prime: [(p1,e1), (p2,e2), ...].
using Factorization = std::vector<std::pair<uint64_t, unsigned>>;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(uint64_t n);

/// Trial division below 2^21, Pollard-Brent rho above.
Factorization factorize_u64(uint64_t n);

/// All divisors of n, ascending, from its factorization.
std::vector<uint64_t> divisors_from(const Factorization& fac);

/// base^exp if it fits in [0, 2^63], otherwise nullopt.
std::optional<uint64_t> checked_pow(uint64_t base, unsigned exp);

uint64_t gcd_u64(uint64_t a, uint64_t b);

}  // namespace orbitcode
