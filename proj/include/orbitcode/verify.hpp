#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/diffset.hpp"
#include "orbitcode/orbit.hpp"

namespace orbitcode {

struct ScanOptions {
    uint64_t ops_cap = 100'000'000;      // intersection-operation budget
    uint64_t enum_cap = kDefaultGrassmannCap;
    unsigned workers = 1;                 // 0 = hardware concurrency
};

/// One analyzed orbit representative inside a scan.
struct OrbitSummary {
    unsigned k = 0;
    Subspace rep;                 // lexicographically minimal member
    unsigned t = 1;               // full-group stabilizer degree
    uint64_t generator_order = 0; // order of the acting generator
    uint64_t size = 0;
    bool equidistant = false;
    std::optional<unsigned> intersection_dim;
    bool sunflower = false;
    unsigned center_dim = 0;
    TrivialClass trivial_class = TrivialClass::NonTrivial;
};

struct ScanReport {
    uint64_t p = 0;
    unsigned n = 0;
    std::vector<unsigned> k_values;
    std::vector<uint64_t> subgroup_orders;  // sunflower scans only
    uint64_t subspaces_visited = 0;
    uint64_t orbit_count = 0;
    std::vector<OrbitSummary> orbits;       // sorted by (k, rep)
    std::vector<std::string> counterexamples;  // expected empty
    struct PerK {
        uint64_t visited = 0;
        uint64_t orbit_size_sum = 0;  // must equal |G_q(n,k)|
        uint64_t orbits = 0;
    };
    std::map<unsigned, PerK> per_k;
    unsigned workers = 1;
    double seconds = 0;  // excluded from serialized artifacts

    uint64_t equidistant_count() const;
    uint64_t sunflower_count() const;
};

/// Enumerates G_q(n,k) for each k, deduplicates cyclic orbits by minimal
/// representative, and checks that every equidistant orbit is trivial
/// (dim U ∈ {t, n-t}) and that full-length orbits are equidistant exactly
/// for dim U ∈ {1, n-1}. Violations land in counterexamples.
ScanReport scan_equidistant(const FieldCtxPtr& ctx, unsigned k_min, unsigned k_max,
                            const ScanOptions& options = {});

/// For every orbit representative and every listed subgroup order d | q^n - 1,
/// analyzes the orbit under the canonical order-d generator. Each sunflower
/// found is checked against the center-stabilizer property, and for prime n
/// against the no-nontrivial-center rule.
ScanReport scan_sunflowers(const FieldCtxPtr& ctx, unsigned k_min, unsigned k_max,
                           const std::vector<uint64_t>& subgroup_orders,
                           const ScanOptions& options = {});

struct Lemma4Violation {
    uint64_t m = 0;
    unsigned a = 0, b = 0, c = 0;
};

/// For all 2 <= m <= m_max and 1 <= a < b <= c <= exp_max: whenever
/// m^c - 1 divides (m^a - 1)(m^b - 1), asserts c = b. Returns violations
/// (expected none).
std::vector<Lemma4Violation> scan_lemma4(uint64_t m_max, unsigned exp_max);

/// The size comparisons ruling out non-trivial 0-intersecting orbits.
struct Remark1Bounds {
    uint64_t q = 0;
    unsigned n = 0, k = 0, t = 1, r = 0;  // r = n mod k
    uint64_t full_length_size = 0;        // (q^n-1)/(q-1)
    uint64_t orbit_size = 0;              // (q^n-1)/(q^t-1)
    uint64_t spread_bound = 0;            // (q^n-1)/(q^k-1)
    uint64_t partial_spread_bound = 0;    // (q^n-q^r)/(q^k-1)
    bool ruled_out = false;               // orbit_size > applicable bound
};

Remark1Bounds remark1_bounds(uint64_t q, unsigned n, unsigned k, unsigned t);

struct PropertyReport {
    std::string name;
    unsigned trials = 0;
    uint64_t seed = 0;
    unsigned passed = 0;
    unsigned resamples = 0;  // precondition rejections, not failures
    std::vector<std::string> transcript;
    bool ok = false;
};

/// Random (U, beta) with deg(beta) = 2 and beta not in Stab(U): the orbit
/// must always be a sunflower (verified with the pairwise oracle).
/// Requires even n >= 4; throws OddDegreeField otherwise.
PropertyReport property_theorem9(const FieldCtxPtr& ctx, unsigned trials, uint64_t seed);

/// Random V with Stab(V) = F_{q^t}^* (t > 1) and x outside V: building the
/// orbit of V ⊕ <x> under a generator of F_{q^t}^* must give a sunflower
/// with center exactly V.
PropertyReport property_prop10(const FieldCtxPtr& ctx, unsigned t, unsigned trials,
                               uint64_t seed);

struct ExampleCheck {
    std::string quantity;
    std::string expected;
    std::string actual;
    std::string tag;  // "recorded", "derived" or "assumed"
    bool match = false;
};

struct ExampleReport {
    int id = 0;
    bool ok = false;  // every check matched
    double seconds = 0;
    std::vector<ExampleCheck> checks;
    std::vector<std::string> assumptions;
};

/// Rebuilds one of the eight bundled reference examples from its embedded
/// construction and diffs every recorded quantity against the computation.
ExampleReport reproduce_example(int id);

}  // namespace orbitcode
