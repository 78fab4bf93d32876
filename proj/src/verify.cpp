#include "orbitcode/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace orbitcode {

uint64_t ScanReport::equidistant_count() const {
    return static_cast<uint64_t>(
        std::count_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.equidistant; }));
}

uint64_t ScanReport::sunflower_count() const {
    return static_cast<uint64_t>(
        std::count_if(orbits.begin(), orbits.end(), [](const auto& o) { return o.sunflower; }));
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// U is the representative of its alpha-orbit iff no member precedes it in
// the canonical order. Early-exits on the first smaller member.
bool is_min_representative(const Subspace& u, const FieldElement& alpha) {
    Subspace v = u.scaled(alpha);
    while (!(v == u)) {
        if (v < u) return false;
        v = v.scaled(alpha);
    }
    return true;
}

// Chunked parallel map over the Grassmannian stream: analysis per subspace
// is independent, so any partition yields the same set of results. Results
// are collected in stream order and sorted afterwards.
template <typename Fn>
void parallel_over_grassmannian(const FieldCtxPtr& ctx, unsigned k, uint64_t cap,
                                unsigned workers, Fn&& per_subspace) {
    GrassmannianStream stream(ctx, k, cap);
    if (workers <= 1) {
        while (auto s = stream.next()) per_subspace(*s);
        return;
    }
    const size_t chunk_size = 1024;
    std::vector<Subspace> chunk;
    chunk.reserve(chunk_size);
    bool more = true;
    while (more) {
        chunk.clear();
        while (chunk.size() < chunk_size) {
            auto s = stream.next();
            if (!s) { more = false; break; }
            chunk.push_back(std::move(*s));
        }
        if (chunk.empty()) break;
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        unsigned use = std::min<size_t>(workers, chunk.size());
        for (unsigned w = 0; w < use; ++w)
            pool.emplace_back([&] {
                size_t i;
                while ((i = next.fetch_add(1)) < chunk.size()) per_subspace(chunk[i]);
            });
        for (auto& th : pool) th.join();
    }
}

void sort_orbits(std::vector<OrbitSummary>& orbits) {
    std::sort(orbits.begin(), orbits.end(), [](const OrbitSummary& a, const OrbitSummary& b) {
        if (a.k != b.k) return a.k < b.k;
        if (!(a.rep == b.rep)) return a.rep < b.rep;
        return a.generator_order < b.generator_order;
    });
}

}  // namespace

ScanReport scan_equidistant(const FieldCtxPtr& ctx, unsigned k_min, unsigned k_max,
                            const ScanOptions& options) {
    if (!ctx->alpha_primitive()) throw Error(ErrorCode::NonPrimitiveAlpha);
    if (k_min == 0 || k_max >= ctx->n() || k_min > k_max)
        throw Error(ErrorCode::InvalidArgument, "scan dimensions must satisfy 0 < k < n");
    const auto start = Clock::now();
    ScanReport report;
    report.p = ctx->p();
    report.n = ctx->n();
    report.workers = resolve_workers(options.workers);

    // Budget guard: every subspace costs at most one full orbit walk, and
    // each orbit is analyzed once more at its representative.
    const uint64_t max_orbit = ctx->group_order() / (ctx->p() - 1);
    unsigned __int128 estimate = 0;
    for (unsigned k = k_min; k <= k_max; ++k) {
        auto count = qbinomial(ctx->p(), ctx->n(), k);
        if (!count || *count > options.enum_cap) throw Error(ErrorCode::EnumerationTooLarge);
        estimate += static_cast<unsigned __int128>(*count) * max_orbit;
    }
    if (estimate > options.ops_cap)
        throw Error(ErrorCode::EnumerationTooLarge, "estimated operation count exceeds cap");

    const FieldElement alpha = ctx->alpha();
    std::mutex mu;
    for (unsigned k = k_min; k <= k_max; ++k) {
        report.k_values.push_back(k);
        auto& per_k = report.per_k[k];
        parallel_over_grassmannian(ctx, k, options.enum_cap, report.workers,
                                   [&](const Subspace& u) {
            bool rep = is_min_representative(u, alpha);
            std::optional<OrbitSummary> summary;
            std::vector<std::string> problems;
            if (rep) {
                OrbitOptions oopts;
                oopts.ops_cap = options.ops_cap;
                OrbitReport orbit = analyze_orbit(u, alpha, oopts);
                OrbitSummary s;
                s.k = k;
                s.rep = u;
                s.t = orbit.stab.t;
                s.generator_order = orbit.generator_order;
                s.size = orbit.size;
                s.equidistant = orbit.equidistant;
                s.intersection_dim = orbit.intersection_dim;
                s.sunflower = orbit.sunflower;
                s.center_dim = orbit.center ? orbit.center->dimension() : 0;
                s.trivial_class = orbit.trivial_class;
                // Orbit size under the full group must match the stabilizer
                // formula (q^n-1)/(q^t-1).
                if (orbit.size != orbit.stab.full_orbit_size)
                    problems.push_back("orbit size violates the stabilizer formula at " +
                                       u.to_string());
                // Equidistance and triviality must coincide, in both directions.
                if (orbit.equidistant && s.trivial_class == TrivialClass::NonTrivial)
                    problems.push_back("non-trivial equidistant cyclic orbit at " + u.to_string());
                if (!orbit.equidistant && s.trivial_class != TrivialClass::NonTrivial)
                    problems.push_back("trivial orbit failed to be equidistant at " + u.to_string());
                // Remark 4: full-length orbits are equidistant iff k is 1 or n-1.
                if (orbit.stab.is_full_length) {
                    bool should = (k == 1 || k == ctx->n() - 1);
                    if (orbit.equidistant != should)
                        problems.push_back("full-length equidistance contradicts dim rule at " +
                                           u.to_string());
                }
                summary = std::move(s);
            }
            std::lock_guard lock(mu);
            per_k.visited += 1;
            report.subspaces_visited += 1;
            if (summary) {
                per_k.orbits += 1;
                per_k.orbit_size_sum += summary->size;
                report.orbit_count += 1;
                report.orbits.push_back(std::move(*summary));
            }
            for (auto& pr : problems) report.counterexamples.push_back(std::move(pr));
        });
        // Orbits partition the Grassmannian: representative sizes must add up.
        if (per_k.orbit_size_sum != per_k.visited)
            report.counterexamples.push_back("orbit sizes at k=" + std::to_string(k) +
                                             " sum to " + std::to_string(per_k.orbit_size_sum) +
                                             " of " + std::to_string(per_k.visited));
    }
    sort_orbits(report.orbits);
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.seconds = elapsed_seconds(start);
    return report;
}

ScanReport scan_sunflowers(const FieldCtxPtr& ctx, unsigned k_min, unsigned k_max,
                           const std::vector<uint64_t>& subgroup_orders,
                           const ScanOptions& options) {
    if (!ctx->alpha_primitive()) throw Error(ErrorCode::NonPrimitiveAlpha);
    if (k_min == 0 || k_max >= ctx->n() || k_min > k_max)
        throw Error(ErrorCode::InvalidArgument, "scan dimensions must satisfy 0 < k < n");
    for (uint64_t d : subgroup_orders)
        if (d == 0 || ctx->group_order() % d != 0)
            throw Error(ErrorCode::InvalidArgument,
                        "subgroup order " + std::to_string(d) + " does not divide q^n - 1");
    const auto start = Clock::now();
    ScanReport report;
    report.p = ctx->p();
    report.n = ctx->n();
    report.subgroup_orders = subgroup_orders;
    report.workers = resolve_workers(options.workers);
    const bool n_prime = is_prime_u64(ctx->n());

    uint64_t order_sum = 0;
    for (uint64_t d : subgroup_orders) order_sum += d;
    const uint64_t max_orbit = ctx->group_order() / (ctx->p() - 1);
    unsigned __int128 estimate = 0;
    for (unsigned k = k_min; k <= k_max; ++k) {
        auto count = qbinomial(ctx->p(), ctx->n(), k);
        if (!count || *count > options.enum_cap) throw Error(ErrorCode::EnumerationTooLarge);
        estimate += static_cast<unsigned __int128>(*count) * (max_orbit + order_sum);
    }
    if (estimate > options.ops_cap)
        throw Error(ErrorCode::EnumerationTooLarge, "estimated operation count exceeds cap");

    const FieldElement alpha = ctx->alpha();
    std::vector<FieldElement> generators;
    generators.reserve(subgroup_orders.size());
    for (uint64_t d : subgroup_orders) generators.push_back(ctx->exp(ctx->group_order() / d));

    std::mutex mu;
    for (unsigned k = k_min; k <= k_max; ++k) {
        report.k_values.push_back(k);
        auto& per_k = report.per_k[k];
        parallel_over_grassmannian(ctx, k, options.enum_cap, report.workers,
                                   [&](const Subspace& u) {
            bool rep = is_min_representative(u, alpha);
            std::vector<OrbitSummary> found;
            std::vector<std::string> problems;
            uint64_t full_size = 0;
            if (rep) {
                StabilizerInfo stab = stabilizer(u);
                full_size = stab.full_orbit_size;
                for (size_t gi = 0; gi < generators.size(); ++gi) {
                    OrbitOptions oopts;
                    oopts.ops_cap = options.ops_cap;
                    OrbitReport orbit = analyze_orbit(u, generators[gi], oopts);
                    OrbitSummary s;
                    s.k = k;
                    s.rep = u;
                    s.t = stab.t;
                    s.generator_order = orbit.generator_order;
                    s.size = orbit.size;
                    s.equidistant = orbit.equidistant;
                    s.intersection_dim = orbit.intersection_dim;
                    s.sunflower = orbit.sunflower;
                    s.center_dim = orbit.center ? orbit.center->dimension() : 0;
                    s.trivial_class = orbit.trivial_class;
                    if (orbit.sunflower && s.center_dim > 0) {
                        // center-stabilizer property: the center is fixed by
                        // beta, so its stabilizer degree exceeds 1
                        const Subspace& center = *orbit.center;
                        if (!(center.scaled(generators[gi]) == center))
                            problems.push_back("sunflower center not fixed by generator at " +
                                               u.to_string());
                        else if (stabilizer(center).t <= 1)
                            problems.push_back("sunflower center generates a full-length orbit at " +
                                               u.to_string());
                        if (n_prime)
                            problems.push_back("non-trivial sunflower center in prime-degree field at " +
                                               u.to_string());
                    }
                    found.push_back(std::move(s));
                }
            }
            std::lock_guard lock(mu);
            per_k.visited += 1;
            report.subspaces_visited += 1;
            if (rep) {
                per_k.orbits += 1;
                per_k.orbit_size_sum += full_size;
                report.orbit_count += 1;
                for (auto& s : found) report.orbits.push_back(std::move(s));
            }
            for (auto& pr : problems) report.counterexamples.push_back(std::move(pr));
        });
        if (per_k.orbit_size_sum != per_k.visited)
            report.counterexamples.push_back("orbit sizes at k=" + std::to_string(k) +
                                             " sum to " + std::to_string(per_k.orbit_size_sum) +
                                             " of " + std::to_string(per_k.visited));
    }
    sort_orbits(report.orbits);
    std::sort(report.counterexamples.begin(), report.counterexamples.end());
    report.seconds = elapsed_seconds(start);
    return report;
}

std::vector<Lemma4Violation> scan_lemma4(uint64_t m_max, unsigned exp_max) {
    if (m_max < 2 || exp_max < 3)
        throw Error(ErrorCode::InvalidArgument, "need m_max >= 2 and exp_max >= 3");
    std::vector<Lemma4Violation> violations;
    for (uint64_t m = 2; m <= m_max; ++m) {
        std::vector<unsigned __int128> pow(exp_max + 1, 1);
        for (unsigned e = 1; e <= exp_max; ++e) pow[e] = pow[e - 1] * m;
        for (unsigned a = 1; a <= exp_max; ++a)
            for (unsigned b = a + 1; b <= exp_max; ++b)
                for (unsigned c = b; c <= exp_max; ++c) {
                    unsigned __int128 lhs = (pow[a] - 1) * (pow[b] - 1);
                    if (lhs % (pow[c] - 1) == 0 && c != b)
                        violations.push_back({m, a, b, c});
                }
    }
    return violations;
}

Remark1Bounds remark1_bounds(uint64_t q, unsigned n, unsigned k, unsigned t) {
    if (q < 2 || !(1 <= t && t < k && k < n))
        throw Error(ErrorCode::ParameterOrderViolation);
    if (t > 1 && n % t != 0)
        throw Error(ErrorCode::ParameterOrderViolation, "t must divide n when t > 1");
    auto qn = checked_pow(q, n);
    if (!qn) throw Error(ErrorCode::GroupOrderOverflow);
    Remark1Bounds out;
    out.q = q;
    out.n = n;
    out.k = k;
    out.t = t;
    out.r = n % k;
    const uint64_t group = *qn - 1;
    out.full_length_size = group / (q - 1);
    out.orbit_size = group / (*checked_pow(q, t) - 1);
    out.spread_bound = group / (*checked_pow(q, k) - 1);
    out.partial_spread_bound = (*qn - *checked_pow(q, out.r)) / (*checked_pow(q, k) - 1);
    // for r = 0 the partial-spread bound coincides with the spread bound
    const uint64_t applicable = (out.r == 0) ? out.spread_bound : out.partial_spread_bound;
    out.ruled_out = out.orbit_size > applicable;
    return out;
}

PropertyReport property_theorem9(const FieldCtxPtr& ctx, unsigned trials, uint64_t seed) {
    if (ctx->n() % 2 != 0) throw Error(ErrorCode::OddDegreeField);
    if (ctx->n() < 4)
        throw Error(ErrorCode::InvalidArgument, "need n >= 4 for dimensions 2..n-2");
    if (trials == 0) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
    PropertyReport report;
    report.name = "theorem9_degree2_sunflower";
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(seed);

    // degree-2 elements live in F_{q^2} \ F_q
    std::vector<FieldElement> degree2;
    for (const FieldElement& e : subfield_subspace(ctx, 2).elements())
        if (!e.is_zero() && e.degree() == 2) degree2.push_back(e);

    const unsigned span_dims = ctx->n() - 3;  // dimensions 2..n-2
    for (unsigned trial = 0; trial < trials; ++trial) {
        unsigned k = 2 + static_cast<unsigned>(rng() % (span_dims + 1));
        Subspace u = random_subspace(ctx, k, rng);
        // if F_{q^2}^* stabilizes U, no degree-2 element avoids Stab(U)
        if (stabilizer(u).t % 2 == 0) {
            ++report.resamples;
            --trial;
            continue;
        }
        FieldElement beta = degree2[rng() % degree2.size()];
        if (u.scaled(beta) == u) {  // beta in Stab(U): precondition, resample
            ++report.resamples;
            --trial;
            continue;
        }
        auto [is_sunflower, center] = sunflower_check(u, beta, /*pairwise=*/true);
        if (is_sunflower) {
            ++report.passed;
        } else {
            report.transcript.push_back("trial " + std::to_string(trial) + ": k=" +
                                        std::to_string(k) + " U=" + u.to_string() +
                                        " beta=" + beta.to_string() + " NOT a sunflower");
        }
    }
    report.ok = (report.passed == report.trials);
    return report;
}

PropertyReport property_prop10(const FieldCtxPtr& ctx, unsigned t, unsigned trials,
                               uint64_t seed) {
    if (t < 2 || t >= ctx->n() || ctx->n() % t != 0) throw Error(ErrorCode::NonDivisorDegree);
    if (trials == 0) throw Error(ErrorCode::InvalidArgument, "need at least one trial");
    PropertyReport report;
    report.name = "prop10_sunflower_construction";
    report.trials = trials;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    const unsigned n = ctx->n();
    const unsigned max_blocks = n / t - (t * (n / t) == n ? 1 : 0);  // keep V proper

    FieldElement gen = ctx->subfield_algebra_generator(t);
    for (unsigned trial = 0; trial < trials; ++trial) {
        // V = sum of random rank-one F_{q^t}-modules w * F_{q^t}
        unsigned blocks = 1 + static_cast<unsigned>(rng() % max_blocks);
        std::vector<FieldElement> gens;
        for (unsigned b = 0; b < blocks; ++b) {
            FieldElement w = random_nonzero_element(ctx, rng);
            FieldElement g = ctx->one();
            for (unsigned j = 0; j < t; ++j) {
                gens.push_back(w * g);
                g = g * gen;
            }
        }
        Subspace v = Subspace::span(gens);
        if (v.dimension() == 0 || v.dimension() >= n || stabilizer(v).t != t) {
            ++report.resamples;
            --trial;
            continue;
        }
        FieldElement x = random_nonzero_element(ctx, rng);
        if (v.contains(x)) {
            ++report.resamples;
            --trial;
            continue;
        }
        Subspace u = v.sum(Subspace::span({x}));
        if (u.dimension() >= n || !stabilizer(u).is_full_length) {
            ++report.resamples;
            --trial;
            continue;
        }
        OrbitReport orbit = build_sunflower(v, x);
        bool pass = orbit.sunflower && orbit.center && *orbit.center == v &&
                    stabilizer(*orbit.center).t == t;
        if (pass) {
            ++report.passed;
        } else {
            report.transcript.push_back("trial " + std::to_string(trial) + ": V=" +
                                        v.to_string() + " x=" + x.to_string() +
                                        " construction failed");
        }
    }
    report.ok = (report.passed == report.trials);
    return report;
}

}  // namespace orbitcode
