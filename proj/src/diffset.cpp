#include "orbitcode/diffset.hpp"

#include <algorithm>
#include <set>

namespace orbitcode {

const char* to_string(BridgeTheorem t) noexcept {
    switch (t) {
        case BridgeTheorem::Auto: return "Auto";
        case BridgeTheorem::Theorem3: return "Theorem3";
        case BridgeTheorem::Theorem4: return "Theorem4";
        case BridgeTheorem::Theorem6: return "Theorem6";
    }
    return "Auto";
}

namespace {

void check_residues(std::span<const uint64_t> d, uint64_t v) {
    if (v == 0 || v > kMaxDiffsetModulus)
        throw Error(ErrorCode::ResidueOutOfRange, "modulus out of supported range");
    std::set<uint64_t> seen;
    for (uint64_t x : d) {
        if (x >= v) throw Error(ErrorCode::ResidueOutOfRange);
        if (!seen.insert(x).second)
            throw Error(ErrorCode::ResidueOutOfRange, "duplicate residue");
    }
}

}  // namespace

std::vector<uint64_t> difference_counts(std::span<const uint64_t> d, uint64_t v) {
    check_residues(d, v);
    std::vector<uint64_t> counts(v, 0);
    for (uint64_t x : d)
        for (uint64_t y : d) {
            if (x == y) continue;
            counts[(x + v - y) % v] += 1;
        }
    return counts;
}

DsVerdict verify_ds(std::span<const uint64_t> d, uint64_t v) {
    if (d.size() < 2 || d.size() >= v) throw Error(ErrorCode::SizeOutOfRange);
    auto counts = difference_counts(d, v);
    DsVerdict verdict;
    verdict.v = v;
    verdict.k = d.size();
    uint64_t lambda = counts.size() > 1 ? counts[1] : 0;
    bool constant = true;
    for (uint64_t g = 1; g < v; ++g)
        if (counts[g] != lambda) { constant = false; break; }
    verdict.is_ds = constant && lambda > 0;
    if (verdict.is_ds) {
        verdict.lambda = lambda;
        verdict.eq1_holds = lambda * (v - 1) == verdict.k * (verdict.k - 1);
    }
    return verdict;
}

RdsVerdict verify_rds(std::span<const uint64_t> d, uint64_t v, uint64_t n_sub) {
    if (n_sub == 0 || v % n_sub != 0) throw Error(ErrorCode::NonDivisorSubgroup);
    if (d.size() < 2 || d.size() >= v) throw Error(ErrorCode::SizeOutOfRange);
    auto counts = difference_counts(d, v);
    const uint64_t step = v / n_sub;  // N = step * Z_v
    RdsVerdict verdict;
    verdict.n_sub = n_sub;
    verdict.m = v / n_sub;
    verdict.k = d.size();

    std::optional<uint64_t> lambda1, lambda2;
    bool ok = true;
    for (uint64_t g = 1; g < v && ok; ++g) {
        bool in_n = (g % step == 0);
        auto& slot = in_n ? lambda1 : lambda2;
        if (!slot)
            slot = counts[g];
        else if (*slot != counts[g])
            ok = false;
    }
    verdict.is_rds = ok;
    if (ok) {
        verdict.lambda1 = lambda1;  // vacuous (nullopt) when n_sub = 1
        verdict.lambda2 = lambda2;
        uint64_t l1 = lambda1.value_or(0);
        uint64_t l2 = lambda2.value_or(0);
        verdict.lemma2_holds = verdict.k * (verdict.k - 1) ==
                               n_sub * (verdict.m - 1) * l2 + (n_sub - 1) * l1;
    }
    return verdict;
}

std::vector<uint64_t> translate(std::span<const uint64_t> d, uint64_t g, uint64_t v) {
    check_residues(d, v);
    if (g >= v) throw Error(ErrorCode::ResidueOutOfRange);
    std::vector<uint64_t> out;
    out.reserve(d.size());
    for (uint64_t x : d) out.push_back((x + g) % v);
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t translate_intersection(std::span<const uint64_t> d, uint64_t g, uint64_t g2,
                                uint64_t v) {
    auto a = translate(d, g, v);
    auto b = translate(d, g2, v);
    std::vector<uint64_t> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    return inter.size();
}

std::vector<uint64_t> subspace_indices(const Subspace& u, uint64_t cap) {
    const FieldCtxPtr& ctx = u.context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    if (!ctx->alpha_primitive()) throw Error(ErrorCode::NonPrimitiveAlpha);
    std::vector<uint64_t> out;
    for (const FieldElement& e : u.elements(cap)) {
        if (e.is_zero()) continue;
        out.push_back(ctx->dlog(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BridgeVerdict bridge_check(const Subspace& u, BridgeTheorem expect) {
    const FieldCtxPtr& ctx = u.context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    if (!ctx->alpha_primitive()) throw Error(ErrorCode::NonPrimitiveAlpha);
    const uint64_t q = ctx->p();
    const unsigned k = u.dimension();

    OrbitReport orbit = analyze_orbit(u, ctx->alpha());
    if (!orbit.equidistant) throw Error(ErrorCode::NotEquidistant);
    const unsigned r = *orbit.intersection_dim;
    if (r == 0) throw Error(ErrorCode::ZeroIntersection, "0-intersecting orbits carry no difference-set claim");
    const unsigned t = orbit.stab.t;

    BridgeVerdict verdict;
    verdict.v = ctx->group_order();
    verdict.stabilizer_degree = t;
    verdict.r = r;
    verdict.applied = (t > 1)   ? BridgeTheorem::Theorem6
                      : (q > 2) ? BridgeTheorem::Theorem4
                                : BridgeTheorem::Theorem3;
    if (expect != BridgeTheorem::Auto && expect != verdict.applied) {
        verdict.note = std::string("requested ") + to_string(expect) + " but parameters select " +
                       to_string(verdict.applied);
        return verdict;
    }
    verdict.indices = subspace_indices(u);

    const uint64_t qk = *checked_pow(q, k);
    const uint64_t qr = *checked_pow(q, r);
    const uint64_t qt = *checked_pow(q, t);
    if (verdict.applied == BridgeTheorem::Theorem3) {
        verdict.expected_params = {verdict.v, qk - 1, qr - 1};
        verdict.ds = verify_ds(verdict.indices, verdict.v);
        verdict.verified = verdict.ds->is_ds && verdict.ds->lambda == qr - 1 &&
                           verdict.ds->k == qk - 1;
    } else {
        uint64_t n_sub = qt - 1;
        verdict.expected_params = {n_sub, verdict.v / n_sub, qk - 1, qk - 1, qr - 1};
        verdict.rds = verify_rds(verdict.indices, verdict.v, n_sub);
        verdict.verified = verdict.rds->is_rds && verdict.rds->k == qk - 1 &&
                           verdict.rds->lambda1 == qk - 1 && verdict.rds->lambda2 == qr - 1;
    }
    return verdict;
}

Prop1Verdict prop1_distance_check(const FieldCtxPtr& ctx, std::span<const uint64_t> d_set,
                                  unsigned k, unsigned d) {
    if (!ctx->alpha_primitive()) throw Error(ErrorCode::NonPrimitiveAlpha);
    Prop1Verdict verdict;
    verdict.ds = verify_ds(d_set, ctx->group_order());
    if (!verdict.ds.is_ds) throw Error(ErrorCode::NotADifferenceSet);
    verdict.lambda_bound = *checked_pow(ctx->p(), d) - 1;
    if (*verdict.ds.lambda > verdict.lambda_bound)
        throw Error(ErrorCode::NotADifferenceSet,
                    "lambda exceeds q^d - 1; Proposition 1 does not apply");
    std::vector<FieldElement> gens;
    gens.reserve(d_set.size());
    for (uint64_t i : d_set) gens.push_back(ctx->exp(i));
    Subspace u = Subspace::span(gens);
    verdict.dim = u.dimension();
    if (verdict.dim != k) throw Error(ErrorCode::DimensionMismatch);
    OrbitReport orbit = analyze_orbit(u, ctx->alpha());
    verdict.min_distance = orbit.min_distance;
    verdict.expected_distance = 2 * (k - d);
    verdict.verified = orbit.min_distance && *orbit.min_distance == verdict.expected_distance;
    return verdict;
}

}  // namespace orbitcode
