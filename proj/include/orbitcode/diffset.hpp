#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitcode/orbit.hpp"
#include "orbitcode/subspace.hpp"

namespace orbitcode {

/// Difference enumeration uses a dense length-v count table.
inline constexpr uint64_t kMaxDiffsetModulus = uint64_t{1} << 24;

struct DsVerdict {
    uint64_t v = 0;
    uint64_t k = 0;
    bool is_ds = false;
    std::optional<uint64_t> lambda;
    bool eq1_holds = false;  // lambda (v-1) = k (k-1)
};

struct RdsVerdict {
    uint64_t n_sub = 0;  // order of the forbidden subgroup N
    uint64_t m = 0;      // v / n_sub
    uint64_t k = 0;
    bool is_rds = false;
    std::optional<uint64_t> lambda1;  // differences inside N \ {0}; vacuous when n_sub = 1
    std::optional<uint64_t> lambda2;  // differences outside N
    bool lemma2_holds = false;        // k(k-1) = n(m-1) lambda2 + (n-1) lambda1
};

/// Multiplicity of each nonzero residue among pairwise differences of D.
/// Index 0 of the result is unused (always 0).
std::vector<uint64_t> difference_counts(std::span<const uint64_t> d, uint64_t v);

DsVerdict verify_ds(std::span<const uint64_t> d, uint64_t v);

/// N is the unique subgroup of Z_v of order n_sub, i.e. (v/n_sub)Z_v.
RdsVerdict verify_rds(std::span<const uint64_t> d, uint64_t v, uint64_t n_sub);

std::vector<uint64_t> translate(std::span<const uint64_t> d, uint64_t g, uint64_t v);
uint64_t translate_intersection(std::span<const uint64_t> d, uint64_t g, uint64_t g2, uint64_t v);

/// D = {dlog(u) : 0 != u in U}; |D| = q^k - 1. Requires primitive alpha.
std::vector<uint64_t> subspace_indices(const Subspace& u, uint64_t cap = kDefaultEnumCap);

enum class BridgeTheorem { Auto, Theorem3, Theorem4, Theorem6 };

const char* to_string(BridgeTheorem t) noexcept;

/// Outcome of the orbit-to-difference-set bridge for one subspace.
struct BridgeVerdict {
    BridgeTheorem applied = BridgeTheorem::Auto;
    uint64_t v = 0;
    unsigned stabilizer_degree = 1;
    unsigned r = 0;  // common intersection dimension of the full orbit
    std::vector<uint64_t> indices;
    std::vector<uint64_t> expected_params;  // (v,k,λ) or (n,m,k,λ1,λ2)
    std::optional<DsVerdict> ds;
    std::optional<RdsVerdict> rds;
    bool verified = false;
    std::string note;
};

/// Checks the equidistant-orbit / difference-set correspondence:
/// q = 2 and full-length U gives a (2^n-1, 2^k-1, 2^r-1) difference set;
/// q > 2 full-length gives the (q-1, (q^n-1)/(q-1), q^k-1, q^k-1, q^r-1)
/// relative difference set; degenerate orbits with Stab(U) = F_{q^t}^* give
/// the (q^t-1, (q^n-1)/(q^t-1), q^k-1, q^k-1, q^r-1) one. The intersection
/// dimension r is recomputed from the orbit, never taken on trust.
/// Throws NotEquidistant, ZeroIntersection.
BridgeVerdict bridge_check(const Subspace& u, BridgeTheorem expect = BridgeTheorem::Auto);

struct Prop1Verdict {
    DsVerdict ds;
    uint64_t lambda_bound = 0;  // q^d - 1
    unsigned dim = 0;
    std::optional<unsigned> min_distance;
    unsigned expected_distance = 0;  // 2(k - d)
    bool verified = false;
};

/// Builds U = span{alpha^i : i in D} from a verified (q^n-1, q^k-1, λ)
/// difference set with λ <= q^d - 1 and checks that the full orbit has
/// minimum subspace distance 2(k - d).
/// Throws NotADifferenceSet, DimensionMismatch.
Prop1Verdict prop1_distance_check(const FieldCtxPtr& ctx, std::span<const uint64_t> d_set,
                                  unsigned k, unsigned d);

}  // namespace orbitcode
