#include "orbitcode/orbit.hpp"

#include <algorithm>

namespace orbitcode {

const char* to_string(TrivialClass c) noexcept {
    switch (c) {
        case TrivialClass::DimEqualsT: return "DimEqualsT";
        case TrivialClass::DimEqualsNMinusT: return "DimEqualsNMinusT";
        case TrivialClass::NonTrivial: return "NonTrivial";
    }
    return "NonTrivial";
}

StabilizerInfo stabilizer(const Subspace& u) {
    const FieldCtxPtr& ctx = u.context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    const unsigned k = u.dimension();
    const unsigned n = ctx->n();
    if (k == 0 || k == n) throw Error(ErrorCode::DegenerateSubspace);
    // Stab(U) ∪ {0} = F_{q^t} with t | gcd(k, n): test divisors from above.
    // U is an F_{q^t}-space iff it is fixed by one algebra generator of F_{q^t}.
    const uint64_t g = gcd_u64(k, n);
    std::vector<unsigned> divs;
    for (unsigned d = 1; d <= g; ++d)
        if (g % d == 0) divs.push_back(d);
    StabilizerInfo info;
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        unsigned t = *it;
        if (t == 1 || u.scaled(ctx->subfield_algebra_generator(t)) == u) {
            info.t = t;
            break;
        }
    }
    uint64_t qt = *checked_pow(ctx->p(), info.t);
    info.full_orbit_size = ctx->group_order() / (qt - 1);
    info.is_full_length = (info.t == 1);
    return info;
}

TrivialVerdict classify_trivial(const Subspace& u) {
    StabilizerInfo info = stabilizer(u);
    const unsigned k = u.dimension();
    const unsigned n = u.context()->n();
    TrivialVerdict verdict;
    if (k == info.t) {
        verdict.cls = TrivialClass::DimEqualsT;
        verdict.predicted_intersection_dim = 0;
    } else if (k == n - info.t) {
        verdict.cls = TrivialClass::DimEqualsNMinusT;
        verdict.predicted_intersection_dim = n - 2 * info.t;
    }
    return verdict;
}

OrbitReport analyze_orbit(const Subspace& u, const FieldElement& beta,
                          const OrbitOptions& options) {
    const FieldCtxPtr& ctx = u.context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    if (!beta.context() || beta.context().get() != ctx.get())
        throw Error(ErrorCode::MixedContexts);
    if (beta.is_zero()) throw Error(ErrorCode::ZeroGenerator);
    const unsigned k = u.dimension();
    const unsigned n = ctx->n();
    if (k == 0 || k == n) throw Error(ErrorCode::DegenerateSubspace);

    OrbitReport report;
    report.generator = beta;
    report.generator_order = beta.order();
    report.dim = k;
    report.stab = stabilizer(u);
    report.trivial_class = classify_trivial(u).cls;

    // Stab_beta(U) = <beta> ∩ Stab(U) = the subgroup of <beta> of order
    // gcd(|beta|, q^t - 1), so the orbit size is known before walking.
    uint64_t qt = *checked_pow(ctx->p(), report.stab.t);
    uint64_t predicted = report.generator_order / gcd_u64(report.generator_order, qt - 1);
    if (predicted > options.ops_cap)
        throw Error(ErrorCode::EnumerationTooLarge,
                    "orbit size " + std::to_string(predicted) + " exceeds cap");

    Subspace v = u;
    uint64_t size = 0;
    std::optional<Subspace> common;
    bool all_equal = true;
    while (true) {
        v = v.scaled(beta);
        ++size;
        if (v == u) break;
        Subspace s = u.intersect(v);
        report.weight_spectrum[s.dimension()] += 1;
        if (!common)
            common = s;
        else if (all_equal && !(*common == s))
            all_equal = false;
        if (size > predicted)
            throw Error(ErrorCode::InvalidArgument, "orbit exceeded predicted size");
    }
    report.size = size;
    if (size != predicted)
        throw Error(ErrorCode::InvalidArgument, "orbit size disagrees with Eq. (5)");
    report.stabilizer_beta_order = report.generator_order / size;

    if (size >= 2) {
        unsigned max_dim = report.weight_spectrum.rbegin()->first;
        report.min_distance = 2 * k - 2 * max_dim;
        report.equidistant = (report.weight_spectrum.size() == 1);
        if (report.equidistant) report.intersection_dim = max_dim;
        if (report.equidistant && all_equal) {
            report.sunflower = true;
            report.center = common->dimension() == 0 ? Subspace::zero(ctx) : *common;
        }
    }

    if (options.pairwise_oracle && size >= 2) {
        // Exhaustive Definition-6 check across all pairs.
        std::vector<Subspace> members;
        members.reserve(size);
        Subspace w = u;
        members.push_back(w);
        for (uint64_t i = 1; i < size; ++i) {
            w = w.scaled(beta);
            members.push_back(w);
        }
        bool pairwise_sunflower = true;
        std::optional<Subspace> pairwise_common;
        for (size_t i = 0; i < members.size() && pairwise_sunflower; ++i)
            for (size_t j = i + 1; j < members.size(); ++j) {
                Subspace s = members[i].intersect(members[j]);
                if (!pairwise_common)
                    pairwise_common = s;
                else if (!(*pairwise_common == s)) {
                    pairwise_sunflower = false;
                    break;
                }
            }
        if (pairwise_sunflower != report.sunflower)
            throw Error(ErrorCode::InvalidArgument,
                        "one-sided and pairwise sunflower checks disagree");
    }
    return report;
}

std::pair<bool, std::optional<Subspace>> sunflower_check(const Subspace& u,
                                                         const FieldElement& beta,
                                                         bool pairwise) {
    OrbitOptions options;
    options.pairwise_oracle = pairwise;
    OrbitReport report = analyze_orbit(u, beta, options);
    return {report.sunflower, report.center};
}

OrbitReport build_sunflower(const Subspace& v, const FieldElement& x) {
    const FieldCtxPtr& ctx = v.context();
    if (!ctx) throw Error(ErrorCode::MixedContexts, "uninitialized subspace");
    StabilizerInfo sv = stabilizer(v);
    if (sv.t <= 1) throw Error(ErrorCode::StabilizerTooSmall);
    if (x.is_zero() || v.contains(x)) throw Error(ErrorCode::GeneratorInV);
    Subspace u = v.sum(Subspace::span({x}));
    StabilizerInfo su = stabilizer(u);
    if (!su.is_full_length) throw Error(ErrorCode::NotFullLength);
    OrbitReport report = analyze_orbit(u, ctx->subfield_generator(sv.t));
    if (!report.sunflower || !(*report.center == v))
        throw Error(ErrorCode::InvalidArgument, "construction failed to produce center V");
    return report;
}

SunflowerBounds sunflower_bounds(const OrbitReport& report, const Subspace& u) {
    if (!report.sunflower) throw Error(ErrorCode::NotASunflower);
    const FieldCtxPtr& ctx = u.context();
    const uint64_t q = ctx->p();
    const unsigned n = ctx->n();
    const unsigned k = report.dim;
    const uint64_t size = report.size;

    SunflowerBounds out;
    out.k = k;
    out.center_dim = report.center ? report.center->dimension() : 0;
    out.trivial_center = (out.center_dim == 0);

    auto largest_divisor_below = [&](unsigned bound, unsigned multiple_of) -> std::optional<unsigned> {
        for (unsigned s = bound; s >= 1; --s)
            if (n % s == 0 && s % multiple_of == 0) return s;
        return std::nullopt;
    };

    if (!out.trivial_center) {
        const unsigned t = stabilizer(u).t;
        if (t == 1) {
            // full-length U: size <= (q^s - 1)/(q - 1), s the largest divisor
            // of n below k
            auto s = largest_divisor_below(k - 1, 1);
            uint64_t bound = (*checked_pow(q, *s) - 1) / (q - 1);
            out.entries.push_back({"nontrivial_center_full_length", bound, false,
                                   size <= bound, size == bound});
        } else {
            // degenerate U: size <= (q^s - 1)/(q^t - 1) with t | s
            auto s = largest_divisor_below(k - 1, t);
            if (s) {
                uint64_t bound = (*checked_pow(q, *s) - 1) / (*checked_pow(q, t) - 1);
                out.entries.push_back({"nontrivial_center_degenerate", bound, false,
                                       size <= bound, size == bound});
            }
        }
    } else {
        out.size_divides_group_order = (ctx->group_order() % size == 0);
        if (k != 0 && n % k == 0) {
            uint64_t bound = ctx->group_order() / (*checked_pow(q, k) - 1);
            bool eq = (size == bound);
            out.entries.push_back({"spread", bound, false, size <= bound, eq});
            out.optimal = eq;
        } else {
            unsigned r = n % k;
            uint64_t bound = (*checked_pow(q, n) - *checked_pow(q, r)) / (*checked_pow(q, k) - 1);
            out.entries.push_back({"partial_spread", bound, true, size < bound, false});
        }
        auto s = largest_divisor_below(k - 1, 1);
        if (s) {
            uint64_t ref = (*checked_pow(q, *s) - 1) / (q - 1);
            out.nontrivial_center_reference = ref;
            out.exceeds_reference = size > ref;
        }
    }
    out.all_satisfied = out.size_divides_group_order &&
                        std::all_of(out.entries.begin(), out.entries.end(),
                                    [](const auto& e) { return e.satisfied; });
    return out;
}

}  // namespace orbitcode
