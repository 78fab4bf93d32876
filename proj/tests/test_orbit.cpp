#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "orbitcode/orbit.hpp"

using namespace orbitcode;

namespace {

FieldCtxPtr f26() { return FieldContext::make(2, 6, "1,1,0,0,0,0,1"); }

}  // namespace

TEST_CASE("stabilizer degree by divisor testing") {
    auto f59 = FieldContext::make(5, 9, "3,4,2,1,4,1,0,0,1,1");
    Subspace u = Subspace::span({
        f59->element({1, 0, 2, 0, 0, 0, 1}),
        f59->element({2, 0, 1, 0, 1, 1}),
        f59->element({0, 1, 2, 1, 2}),
        f59->element({0, 0, 0, 1, 0, 0, 1, 0, 1}),
    });
    StabilizerInfo info = stabilizer(u);  // gcd(4, 9) = 1 forces t = 1
    CHECK(info.t == 1);
    CHECK(info.is_full_length);
    CHECK(info.full_orbit_size == (f59->group_order()) / 4);

    auto f210 = FieldContext::make(2, 10, "1,1,1,1,0,1,1,0,0,0,1");
    Subspace u4 = Subspace::span({f210->one(), f210->exp(13), f210->exp(70), f210->exp(177)});
    CHECK(stabilizer(u4).full_orbit_size == 1023);

    // a subfield, viewed as a subspace, is stabilized by its own units
    auto ctx = f26();
    Subspace f4 = subfield_subspace(ctx, 2);
    CHECK(stabilizer(f4).t == 2);
    CHECK(stabilizer(f4).full_orbit_size == 21);

    CHECK_THROWS_AS(stabilizer(Subspace::zero(ctx)), Error);
    CHECK_THROWS_AS(stabilizer(Subspace::full(ctx)), Error);

    // Eq. (5) with the full group: orbit size times stabilizer order is q^n - 1
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        Subspace u6 = random_subspace(ctx, 1 + rng() % 5, rng);
        StabilizerInfo s = stabilizer(u6);
        CHECK(s.full_orbit_size * (*checked_pow(2, s.t) - 1) == ctx->group_order());
        CHECK(static_cast<uint64_t>(std::gcd<uint64_t>(u6.dimension(), 6)) % s.t == 0);
    }
}

TEST_CASE("trivial classification") {
    auto f28 = FieldContext::make(2, 8, "1,0,1,1,1,0,0,0,1");
    Subspace f4 = subfield_subspace(f28, 2);
    TrivialVerdict v = classify_trivial(f4);  // dim = t = 2
    CHECK(v.cls == TrivialClass::DimEqualsT);
    CHECK(v.predicted_intersection_dim == 0u);

    // an F_4-hyperplane of F_{2^6}: dim 4 = n - t with t = 2
    auto ctx = f26();
    FieldElement g = ctx->subfield_generator(2);
    FieldElement x = ctx->alpha();
    Subspace hyper = Subspace::span({ctx->one(), g, x, x * g});
    REQUIRE(hyper.dimension() == 4);
    REQUIRE(stabilizer(hyper).t == 2);
    TrivialVerdict v2 = classify_trivial(hyper);
    CHECK(v2.cls == TrivialClass::DimEqualsNMinusT);
    CHECK(v2.predicted_intersection_dim == 2u);  // n - 2t

    auto f210 = FieldContext::make(2, 10, "1,1,1,1,0,1,1,0,0,0,1");
    Subspace u = Subspace::span({f210->one(), f210->exp(13), f210->exp(70), f210->exp(177)});
    CHECK(classify_trivial(u).cls == TrivialClass::NonTrivial);
}

TEST_CASE("orbit analysis on the recorded quasi-cyclic codes") {
    auto f210 = FieldContext::make(2, 10, "1,1,1,1,0,1,1,0,0,0,1");
    Subspace u = Subspace::span({f210->one(), f210->exp(13), f210->exp(70), f210->exp(177)});
    OrbitReport orbit = analyze_orbit(u, f210->exp(93));
    CHECK(orbit.generator_order == 11);
    CHECK(orbit.size == 11);
    CHECK(orbit.stabilizer_beta_order == 1);
    CHECK(orbit.equidistant);
    CHECK(orbit.intersection_dim == 1u);
    CHECK(orbit.min_distance == 6u);
    CHECK_FALSE(orbit.sunflower);
    CHECK(orbit.weight_spectrum == std::map<unsigned, uint64_t>{{1, 10}});

    // beta inside the stabilizer collapses the orbit to a single subspace
    OrbitReport single = analyze_orbit(u, f210->one());
    CHECK(single.size == 1);
    CHECK(single.weight_spectrum.empty());
    CHECK_FALSE(single.min_distance.has_value());
    CHECK_FALSE(single.equidistant);

    CHECK_THROWS_AS(analyze_orbit(u, f210->zero()), Error);
    CHECK_THROWS_AS(analyze_orbit(Subspace::zero(f210), f210->exp(93)), Error);
}

TEST_CASE("orbit size divides the generator order (Eq. 5)") {
    auto ctx = f26();
    std::mt19937_64 rng(7);
    auto divisors = divisors_from(ctx->group_order_factorization());
    for (int i = 0; i < 40; ++i) {
        Subspace u = random_subspace(ctx, 2 + rng() % 3, rng);
        uint64_t d = divisors[rng() % divisors.size()];
        if (d == 1) continue;
        FieldElement beta = ctx->exp(ctx->group_order() / d);
        OrbitReport r = analyze_orbit(u, beta);
        CHECK(r.generator_order == d);
        CHECK(r.generator_order % r.size == 0);
        CHECK(r.size * r.stabilizer_beta_order == r.generator_order);
        CHECK(ctx->group_order() % r.size == 0);
        // the walked orbit returns to U exactly at its size: direct
        // Stab_beta(U) = <beta^size> witness
        CHECK(u.scaled(beta.pow(r.size)) == u);
    }
}

TEST_CASE("one-sided and pairwise sunflower checks agree") {
    auto ctx = f26();
    std::mt19937_64 rng(11);
    auto divisors = divisors_from(ctx->group_order_factorization());
    for (int i = 0; i < 60; ++i) {
        Subspace u = random_subspace(ctx, 2 + rng() % 3, rng);
        uint64_t d = divisors[rng() % divisors.size()];
        if (d == 1) continue;
        FieldElement beta = ctx->exp(ctx->group_order() / d);
        // analyze_orbit with the oracle flag throws if the two disagree
        OrbitOptions opts;
        opts.pairwise_oracle = true;
        CHECK_NOTHROW(analyze_orbit(u, beta, opts));
    }
}

TEST_CASE("sunflower construction from a stabilized hyperplane piece") {
    auto ctx = f26();
    Subspace v = subfield_subspace(ctx, 2);  // F_4, stabilizer degree 2
    FieldElement x = ctx->alpha();
    REQUIRE_FALSE(v.contains(x));
    OrbitReport r = build_sunflower(v, x);
    CHECK(r.size == 3);  // orbit under F_4^*
    CHECK(r.sunflower);
    CHECK(*r.center == v);
    // direct witness: U ∩ gU = V for both nontrivial shifts
    Subspace u = v.sum(Subspace::span({x}));
    FieldElement g = ctx->subfield_generator(2);
    CHECK(u.intersect(u.scaled(g)) == v);
    CHECK(u.intersect(u.scaled(g * g)) == v);
    // the center never generates a full-length orbit
    CHECK(stabilizer(*r.center).t > 1);

    CHECK_THROWS_AS(build_sunflower(v, v.basis_element(0)), Error);  // x inside V
    Subspace full_length_v = Subspace::span({ctx->one(), ctx->alpha()});
    if (stabilizer(full_length_v).t == 1)
        CHECK_THROWS_AS(build_sunflower(full_length_v, ctx->exp(17)), Error);
}

TEST_CASE("a (k-1)-dimensional center extends to the full subfield orbit") {
    // For a sunflower with center V of dimension k - 1 and Stab(V) = F_{q^t}^*,
    // the orbit under a generator of F_{q^t}^* is the largest one with that
    // center: it is itself a sunflower with center V and contains every
    // beta-orbit whose center is V.
    auto ctx = f26();
    Subspace v = subfield_subspace(ctx, 2);
    FieldElement x = ctx->alpha();
    Subspace u = v.sum(Subspace::span({x}));
    FieldElement g = ctx->subfield_generator(2);

    OrbitReport big = analyze_orbit(u, g);
    REQUIRE(big.sunflower);
    REQUIRE(*big.center == v);
    // every generator inside F_4^* produces a sub-orbit with the same center
    for (const FieldElement& beta : subfield_subspace(ctx, 2).elements()) {
        if (beta.is_zero() || beta.is_one()) continue;
        OrbitReport sub = analyze_orbit(u, beta);
        CHECK(sub.generator_order % sub.size == 0);
        CHECK(big.size % sub.size == 0);  // Orb_beta(U) sits inside Orb_g(U)
        if (sub.size >= 2) {
            CHECK(sub.sunflower);
            CHECK(*sub.center == v);
        }
        // beta stabilizes the center, so its powers stay inside F_{q^t}
        CHECK(v.scaled(beta) == v);
        CHECK((*checked_pow(2, stabilizer(v).t) - 1) % beta.order() == 0);
    }
}

TEST_CASE("sunflower bounds across the recorded regimes") {
    // spread-bound equality (trivial center, k | n)
    auto f212 = FieldContext::make(2, 12, "1,1,0,1,0,1,1,1,0,0,0,0,1");
    Subspace u8 = Subspace::span({f212->one(), f212->exp(470), f212->exp(3607), f212->exp(3621)});
    OrbitReport r8 = analyze_orbit(u8, f212->exp(15));
    SunflowerBounds b8 = sunflower_bounds(r8, u8);
    CHECK(b8.trivial_center);
    CHECK(b8.entries.size() == 1);
    CHECK(b8.entries[0].kind == "spread");
    CHECK(b8.entries[0].bound == 273);
    CHECK(b8.entries[0].with_equality);
    CHECK(b8.optimal);
    CHECK(b8.size_divides_group_order);
    CHECK(b8.all_satisfied);

    // trivial center in a prime-degree field (k does not divide n)
    auto f311 = FieldContext::make(3, 11, "1,0,2,0,0,0,0,0,0,0,0,1");
    Subspace u5 = Subspace::span({f311->exp(3179), f311->exp(8390), f311->exp(31874),
                                  f311->exp(114951), f311->exp(118325)});
    OrbitReport r5 = analyze_orbit(u5, f311->exp(3851));
    SunflowerBounds b5 = sunflower_bounds(r5, u5);
    CHECK(b5.trivial_center);
    CHECK(b5.entries[0].kind == "partial_spread");
    CHECK(b5.entries[0].strict);
    CHECK(b5.all_satisfied);

    // non-trivial center: Orb under F_4^* in F_{2^6}
    auto ctx = f26();
    OrbitReport rc = build_sunflower(subfield_subspace(ctx, 2), ctx->alpha());
    Subspace uc = subfield_subspace(ctx, 2).sum(Subspace::span({ctx->alpha()}));
    SunflowerBounds bc = sunflower_bounds(rc, uc);
    CHECK_FALSE(bc.trivial_center);
    CHECK(bc.entries[0].kind == "nontrivial_center_full_length");
    // largest divisor of 6 below k = 3 is 2: bound (2^2-1)/(2-1) = 3
    CHECK(bc.entries[0].bound == 3);
    CHECK(bc.entries[0].with_equality);
    CHECK(bc.all_satisfied);

    CHECK_THROWS_AS(sunflower_bounds(analyze_orbit(u8, f212->alpha()), u8), Error);
}
