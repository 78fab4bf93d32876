#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "orbitcode/subspace.hpp"

using namespace orbitcode;

namespace {

FieldCtxPtr f210() { return FieldContext::make(2, 10, "1,1,1,1,0,1,1,0,0,0,1"); }
FieldCtxPtr f34() { return FieldContext::make(3, 4, "2,0,0,2,1"); }

// Enumeration-based membership oracle, independent of row reduction.
bool contains_by_enumeration(const Subspace& u, const FieldElement& x) {
    for (const FieldElement& e : u.elements())
        if (e == x) return true;
    return false;
}

}  // namespace

TEST_CASE("span produces the canonical basis") {
    auto ctx = f210();
    Subspace u = Subspace::span({ctx->one(), ctx->exp(13), ctx->exp(70), ctx->exp(177)});
    CHECK(u.dimension() == 4);  // the four generators are independent

    // idempotence: spanning the canonical rows reproduces the subspace
    CHECK(Subspace::span(std::span<const FieldElement>(u.basis_elements())) == u);

    Subspace zero = Subspace::zero(ctx);
    CHECK(zero.dimension() == 0);
    CHECK(zero.elements().size() == 1);
    CHECK(Subspace::span(ctx, {}) == zero);  // empty span

    auto f3 = FieldContext::make(3, 2, "2,2,1");
    FieldElement x = f3->alpha();
    Subspace dep = Subspace::span({x, x, x + x});
    CHECK(dep.dimension() == 1);
}

TEST_CASE("membership agrees with the enumeration oracle") {
    auto ctx = f34();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace u = random_subspace(ctx, 2, rng);
        CHECK(u.contains(ctx->zero()));
        for (int i = 0; i < 20; ++i) {
            FieldElement x = random_nonzero_element(ctx, rng);
            CHECK(u.contains(x) == contains_by_enumeration(u, x));
        }
        for (const FieldElement& e : u.elements()) CHECK(u.contains(e));
    }
}

TEST_CASE("sum and intersection satisfy the dimension law") {
    auto ctx = f34();
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        Subspace u = random_subspace(ctx, 1 + rng() % 3, rng);
        Subspace v = random_subspace(ctx, 1 + rng() % 3, rng);
        Subspace s = u.sum(v);
        Subspace i = u.intersect(v);
        CHECK(i.dimension() + s.dimension() == u.dimension() + v.dimension());
        CHECK(s.contains_subspace(u));
        CHECK(s.contains_subspace(v));
        CHECK(u.contains_subspace(i));
        CHECK(v.contains_subspace(i));
    }
    Subspace u = random_subspace(ctx, 2, rng);
    CHECK(u.intersect(u) == u);
    CHECK(u.intersect(Subspace::zero(ctx)) == Subspace::zero(ctx));
}

TEST_CASE("intersection matches element-level enumeration") {
    auto ctx = f34();
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        Subspace u = random_subspace(ctx, 2, rng);
        Subspace v = random_subspace(ctx, 2, rng);
        Subspace i = u.intersect(v);
        std::set<uint64_t> in_u, both;
        for (const FieldElement& e : u.elements()) in_u.insert(e.encode());
        for (const FieldElement& e : v.elements())
            if (in_u.count(e.encode())) both.insert(e.encode());
        CHECK(both.size() == *i.element_count());
        for (const FieldElement& e : i.elements()) CHECK(both.count(e.encode()) == 1);
    }
}

TEST_CASE("cyclic shift is a group action preserving dimension") {
    auto ctx = f210();
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        Subspace u = random_subspace(ctx, 1 + rng() % 9, rng);
        FieldElement x = random_nonzero_element(ctx, rng);
        FieldElement y = random_nonzero_element(ctx, rng);
        Subspace xu = u.scaled(x);
        CHECK(xu.dimension() == u.dimension());
        CHECK(xu.scaled(x.inverse()) == u);
        CHECK(u.scaled(x).scaled(y) == u.scaled(x * y));
        // shifts by base-field scalars fix every subspace
        CHECK(u.scaled(ctx->one()) == u);
        // dim(xU ∩ yU) = dim(U ∩ x^{-1}yU)
        CHECK(xu.intersect(u.scaled(y)).dimension() ==
              u.intersect(u.scaled(x.inverse() * y)).dimension());
    }
    CHECK_THROWS_AS(random_subspace(ctx, 2, rng).scaled(ctx->zero()), Error);

    auto f3 = f34();
    for (int trial = 0; trial < 30; ++trial) {
        Subspace u = random_subspace(f3, 2, rng);
        FieldElement a = f3->element({1 + rng() % 2});  // scalar in F_3^*
        CHECK(u.scaled(a) == u);
    }
}

TEST_CASE("translation invariance of intersection dimensions") {
    // dim(U ∩ gU) = dim(U ∩ (g+s)U) for scalar s and g outside F_q
    auto ctx = f34();
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        Subspace u = random_subspace(ctx, 2, rng);
        FieldElement g = random_nonzero_element(ctx, rng);
        if (g.degree() == 1) continue;
        for (uint64_t s = 1; s < 3; ++s) {
            FieldElement shifted = g + ctx->element({s});
            CHECK(u.intersect(u.scaled(g)).dimension() ==
                  u.intersect(u.scaled(shifted)).dimension());
        }
    }
}

TEST_CASE("subspace distance is a metric") {
    auto ctx = f34();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        Subspace u = random_subspace(ctx, rng() % 5, rng);
        Subspace v = random_subspace(ctx, rng() % 5, rng);
        Subspace w = random_subspace(ctx, rng() % 5, rng);
        unsigned duv = subspace_distance(u, v);
        CHECK(duv == subspace_distance(v, u));
        CHECK((duv == 0) == (u == v));
        CHECK(subspace_distance(u, w) <= duv + subspace_distance(v, w));
        if (u.dimension() == v.dimension()) CHECK(duv % 2 == 0);
    }
    Subspace u = random_subspace(ctx, 2, rng);
    CHECK(subspace_distance(u, u) == 0);
}

TEST_CASE("element enumeration counts and caps") {
    auto ctx = f34();
    std::mt19937_64 rng(37);
    for (unsigned k = 0; k <= 4; ++k) {
        Subspace u = random_subspace(ctx, k, rng);
        CHECK(u.elements().size() == *checked_pow(3, k));
    }
    Subspace dim1 = random_subspace(ctx, 1, rng);
    auto elems = dim1.elements();
    CHECK(elems.size() == 3);  // {0, x, 2x}
    CHECK_THROWS_AS(Subspace::full(ctx).elements(/*cap=*/10), Error);
}

TEST_CASE("grassmannian stream hits the q-binomial count exactly once each") {
    CHECK(qbinomial(2, 4, 2) == 35);
    CHECK(qbinomial(2, 6, 3) == 1395);
    CHECK(qbinomial(3, 4, 2) == 130);
    CHECK(qbinomial(2, 4, 0) == 1);
    CHECK(qbinomial(5, 9, 2) == 7947261556);
    CHECK(qbinomial(2, 5, 2) == 155);

    struct Case { uint64_t p; unsigned n; const char* f; unsigned k; };
    const Case cases[] = {
        {2, 4, "1,1,0,0,1", 0},
        {2, 4, "1,1,0,0,1", 2},
        {2, 4, "1,1,0,0,1", 3},
        {3, 4, "2,0,0,2,1", 2},
        {2, 6, "1,1,0,0,0,0,1", 3},
    };
    for (const auto& c : cases) {
        auto ctx = FieldContext::make(c.p, c.n, c.f);
        GrassmannianStream stream(ctx, c.k);
        std::set<std::vector<uint64_t>> seen;
        uint64_t count = 0;
        while (auto s = stream.next()) {
            CHECK(s->dimension() == c.k);
            CHECK(seen.insert(s->flat_basis()).second);  // no duplicates
            ++count;
        }
        CHECK(count == *qbinomial(c.p, c.n, c.k));
        CHECK(count == stream.total());
    }
    auto big = FieldContext::make(5, 9, "3,4,2,1,4,1,0,0,1,1");
    CHECK_THROWS_AS(GrassmannianStream(big, 2), Error);  // above the cap
}

TEST_CASE("random subspaces are uniform over pivot patterns") {
    // sanity: dimension is exact and the most skewed pattern shows up with
    // roughly its q^(free cells) share
    auto ctx = FieldContext::make(2, 4, "1,1,0,0,1");
    std::mt19937_64 rng(41);
    std::map<std::vector<uint64_t>, unsigned> counts;
    const int draws = 3500;
    for (int i = 0; i < draws; ++i) {
        Subspace u = random_subspace(ctx, 2, rng);
        REQUIRE(u.dimension() == 2);
        counts[u.flat_basis()] += 1;
    }
    CHECK(counts.size() == 35);  // every member of G_2(4,2) observed
    for (const auto& [basis, c] : counts) CHECK(c > 35);  // ~100 expected each
}

TEST_CASE("subfield subspace matches generator span") {
    auto ctx = FieldContext::make(2, 6, "1,1,0,0,0,0,1");
    Subspace f4 = subfield_subspace(ctx, 2);
    CHECK(f4.dimension() == 2);
    FieldElement g = ctx->subfield_generator(2);
    CHECK(f4 == Subspace::span({ctx->one(), g}));
    for (const FieldElement& e : f4.elements()) {
        if (e.is_zero()) continue;
        CHECK(e.in_subfield(2));
    }
    CHECK(subfield_subspace(ctx, 6) == Subspace::full(ctx));
    CHECK(subfield_subspace(ctx, 1).dimension() == 1);
    CHECK_THROWS_AS(subfield_subspace(ctx, 4), Error);
}

TEST_CASE("canonical order is total and stable") {
    auto ctx = FieldContext::make(2, 4, "1,1,0,0,1");
    GrassmannianStream stream(ctx, 2);
    std::vector<Subspace> all;
    while (auto s = stream.next()) all.push_back(*s);
    std::sort(all.begin(), all.end());
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}
