#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbitcode/subspace.hpp"

namespace orbitcode {

/// Stab(U) under the full group: Stab(U) ∪ {0} = F_{q^t}. t always divides
/// gcd(dim U, n), and the full orbit has (q^n - 1)/(q^t - 1) members.
struct StabilizerInfo {
    unsigned t = 1;
    uint64_t full_orbit_size = 0;
    bool is_full_length = false;  // t == 1
};

enum class TrivialClass { DimEqualsT, DimEqualsNMinusT, NonTrivial };

const char* to_string(TrivialClass c) noexcept;

struct TrivialVerdict {
    TrivialClass cls = TrivialClass::NonTrivial;
    /// 0 for dim = t, n - 2t for dim = n - t; absent otherwise.
    std::optional<unsigned> predicted_intersection_dim;
};

/// Full analysis of a beta-cyclic orbit code Orb_beta(U).
struct OrbitReport {
    FieldElement generator;
    uint64_t generator_order = 0;
    uint64_t size = 0;                   // least s >= 1 with beta^s U = U
    uint64_t stabilizer_beta_order = 0;  // |beta| / size = |<beta> ∩ Stab(U)|
    unsigned dim = 0;                    // k = dim U
    std::map<unsigned, uint64_t> weight_spectrum;  // dim(U ∩ beta^i U) -> count
    std::optional<unsigned> min_distance;          // absent for size-1 orbits
    bool equidistant = false;
    std::optional<unsigned> intersection_dim;      // the single c when equidistant
    bool sunflower = false;
    std::optional<Subspace> center;
    TrivialClass trivial_class = TrivialClass::NonTrivial;
    StabilizerInfo stab;  // full-group stabilizer of U
};

struct OrbitOptions {
    /// Also verify the sunflower condition over all pairs (beta^i U, beta^j U),
    /// not just the pairs (U, beta^i U). Quadratic; test oracle.
    bool pairwise_oracle = false;
    /// Refuse orbits whose predicted size exceeds this many intersections.
    uint64_t ops_cap = 100'000'000;
};

/// Largest divisor t of gcd(dim U, n) whose subfield generator fixes U.
/// Throws DegenerateSubspace for dim 0 or n.
StabilizerInfo stabilizer(const Subspace& u);

TrivialVerdict classify_trivial(const Subspace& u);

/// Walks U, bU, b²U, ... to the first recurrence of U; checks the predicted
/// size |beta|/gcd(|beta|, q^t - 1) (Eq. (4)/(5) consistency); fills the
/// weight spectrum from the pairs (U, beta^i U), which is sufficient because
/// dim(beta^i U ∩ beta^j U) = dim(U ∩ beta^(j-i) U).
/// Throws ZeroGenerator, DegenerateSubspace, EnumerationTooLarge.
OrbitReport analyze_orbit(const Subspace& u, const FieldElement& beta,
                          const OrbitOptions& options = {});

/// One-sided sunflower test; with pairwise = true runs the exhaustive
/// all-pairs oracle instead.
std::pair<bool, std::optional<Subspace>> sunflower_check(const Subspace& u,
                                                         const FieldElement& beta,
                                                         bool pairwise = false);

/// Builds U = V ⊕ <x> and returns the orbit of U under a generator of
/// F_{q^t}^* where Stab(V) = F_{q^t}^*; always a sunflower with center V.
/// Throws StabilizerTooSmall (t = 1), GeneratorInV, NotFullLength.
OrbitReport build_sunflower(const Subspace& v, const FieldElement& x);

/// Cardinality bounds applicable to a sunflower orbit.
struct SunflowerBounds {
    bool trivial_center = false;
    unsigned k = 0;
    unsigned center_dim = 0;
    struct Entry {
        std::string kind;   // which bound applies
        uint64_t bound = 0;
        bool strict = false;     // "<" rather than "<="
        bool satisfied = false;
        bool with_equality = false;
    };
    std::vector<Entry> entries;
    bool size_divides_group_order = true;
    /// For trivial centers: the non-trivial-center value (q^s-1)/(q-1),
    /// reported for comparison only — it does not constrain this case.
    std::optional<uint64_t> nontrivial_center_reference;
    bool exceeds_reference = false;
    bool all_satisfied = false;
    bool optimal = false;  // trivial center meeting the spread bound exactly
};

/// Throws NotASunflower unless report.sunflower.
SunflowerBounds sunflower_bounds(const OrbitReport& report, const Subspace& u);

}  // namespace orbitcode
