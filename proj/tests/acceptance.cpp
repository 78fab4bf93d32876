// Acceptance suite: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure. Criteria cover the eight bundled reference examples, the
// exhaustive equidistance scans, the difference-set bridge, the seeded
// property suites, and the structural invariants.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "orbitcode/verify.hpp"

using namespace orbitcode;

namespace {

struct Harness {
    int failures = 0;
    std::map<std::string, ScanReport> scans;  // stashed by criterion 9 for 12

    void run(const std::string& name, double time_limit_s,
             const std::function<void(std::ostringstream&)>& body) {
        std::ostringstream detail;
        bool ok = true;
        auto start = std::chrono::steady_clock::now();
        try {
            body(detail);
        } catch (const std::exception& err) {
            ok = false;
            detail << " EXCEPTION: " << err.what();
        }
        double elapsed = std::chrono::duration<double>(
            std::chrono::steady_clock::now() - start).count();
        std::string text = detail.str();
        if (!text.empty() && text.find("FAIL") != std::string::npos) ok = false;
        if (elapsed > time_limit_s) {
            ok = false;
            text += " OVER TIME LIMIT " + std::to_string(time_limit_s) + "s";
        }
        if (!ok) ++failures;
        std::printf("[%s] %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", name.c_str(), elapsed,
                    text.empty() ? "" : ("  " + text).c_str());
        std::fflush(stdout);
    }
};

void require(std::ostringstream& out, bool cond, const std::string& what) {
    if (!cond) out << " FAIL[" << what << "]";
}

// Shared helper for criteria driven by the bundled examples: every recorded
// quantity must match the computation.
void expect_example_clean(std::ostringstream& out, int id) {
    ExampleReport report = reproduce_example(id);
    for (const auto& c : report.checks)
        if (!c.match)
            out << " FAIL[" << c.quantity << ": expected " << c.expected << ", got " << c.actual
                << "]";
}

struct ScanCase {
    const char* name;
    uint64_t p;
    unsigned n;
    const char* modulus;
};

constexpr ScanCase kScanCases[] = {
    {"(2,4)", 2, 4, "1,1,0,0,1"},
    {"(2,5)", 2, 5, "1,0,1,0,0,1"},
    {"(2,6)", 2, 6, "1,1,0,0,0,0,1"},
    {"(3,4)", 3, 4, "2,0,0,2,1"},
};

}  // namespace

int main() {
    Harness h;

    h.run("criterion 1: F_{5^9} orbits of size 19 and 31, 0-intersecting, distance 8", 10,
          [](std::ostringstream& out) {
              expect_example_clean(out, 1);
              // pairwise intersections, checked exhaustively and not just
              // via the translation identity
              auto ctx = FieldContext::make(5, 9, "3,4,2,1,4,1,0,0,1,1");
              Subspace u = Subspace::span({
                  ctx->element({1, 0, 2, 0, 0, 0, 1}),
                  ctx->element({2, 0, 1, 0, 1, 1}),
                  ctx->element({0, 1, 2, 1, 2}),
                  ctx->element({0, 0, 0, 1, 0, 0, 1, 0, 1}),
              });
              OrbitOptions pairwise;
              pairwise.pairwise_oracle = true;
              OrbitReport w = analyze_orbit(u, ctx->element({0, 0, 0, 2, 2, 3, 3, 0, 2}), pairwise);
              OrbitReport b = analyze_orbit(u, ctx->element({3, 4, 2, 0, 3, 1, 1, 1, 4}), pairwise);
              require(out, w.sunflower && w.center->dimension() == 0,
                      "omega pairwise 0-intersecting");
              require(out, b.sunflower && b.center->dimension() == 0,
                      "beta pairwise 0-intersecting");
          });

    h.run("criterion 2: F_{3^12} orbit sizes 13 and 28, dims 3 and 2, non-sunflower witness", 10,
          [](std::ostringstream& out) { expect_example_clean(out, 2); });

    h.run("criterion 3: F_{3^15} sunflower of size 13, distance 4, recorded center", 10,
          [](std::ostringstream& out) { expect_example_clean(out, 3); });

    h.run("criterion 4: F_{2^10} full orbit 1023, 1-intersecting non-sunflower of size 11", 5,
          [](std::ostringstream& out) { expect_example_clean(out, 4); });

    h.run("criterion 5: F_{3^11} trivial-center sunflower of size 23, distance 10", 10,
          [](std::ostringstream& out) { expect_example_clean(out, 5); });

    h.run("criterion 6: F_{5^15} sunflower of size 781, center F_{5^5}, bound equality", 60,
          [](std::ostringstream& out) {
              // The recorded center identity is knowingly unreproducible: the
              // computed center is the shift of F_{5^5} by a^2 + 1, not
              // F_{5^5} itself. The check is kept as recorded and fails.
              expect_example_clean(out, 6);
          });

    h.run("criterion 7: F_{3^12} trivial-center sunflower of size 65 exceeding 40", 10,
          [](std::ostringstream& out) { expect_example_clean(out, 7); });

    h.run("criterion 8: F_{2^12} optimal trivial-center sunflower of size 273", 10,
          [](std::ostringstream& out) { expect_example_clean(out, 8); });

    for (const auto& c : kScanCases) {
        h.run(std::string("criterion 9: exhaustive equidistance scan ") + c.name +
                  " dims 2..n-2: only trivial hits",
              60, [&](std::ostringstream& out) {
                  auto ctx = FieldContext::make(c.p, c.n, c.modulus);
                  ScanReport report = scan_equidistant(ctx, 2, c.n - 2);
                  for (const auto& cx : report.counterexamples) out << " FAIL[" << cx << "]";
                  for (const auto& o : report.orbits)
                      if (o.equidistant)
                          require(out, o.trivial_class != TrivialClass::NonTrivial,
                                  "non-trivial equidistant orbit");
                  h.scans[c.name] = std::move(report);
              });
    }

    h.run("criterion 10: difference-set bridge on hyperplanes and F_4-hyperplanes", 5,
          [](std::ostringstream& out) {
              // every hyperplane of F_{2^4} gives a verified (15,7,3) set
              auto f24 = FieldContext::make(2, 4, "1,1,0,0,1");
              GrassmannianStream stream(f24, 3);
              unsigned count = 0;
              while (auto u = stream.next()) {
                  BridgeVerdict v = bridge_check(*u);
                  require(out, v.verified && v.ds && v.ds->v == 15 && v.ds->k == 7 &&
                                   v.ds->lambda == 3u,
                          "hyperplane (15,7,3)");
                  require(out, v.ds && v.ds->eq1_holds, "eq1");
                  ++count;
              }
              require(out, count == 15, "all 15 hyperplanes");
              // an F_4-hyperplane of F_{2^6} gives the (3,21,15,15,3) set
              auto f26 = FieldContext::make(2, 6, "1,1,0,0,0,0,1");
              FieldElement g = f26->subfield_generator(2);
              FieldElement x = f26->alpha();
              Subspace hyper = Subspace::span({f26->one(), g, x, x * g});
              BridgeVerdict v6 = bridge_check(hyper);
              require(out,
                      v6.verified && v6.rds && v6.rds->n_sub == 3 && v6.rds->m == 21 &&
                          v6.rds->k == 15 && v6.rds->lambda1 == 15u && v6.rds->lambda2 == 3u,
                      "F_4-hyperplane (3,21,15,15,3)");
              require(out, v6.rds && v6.rds->lemma2_holds, "lemma2");
          });

    h.run("criterion 11: seeded property suites (100 trials each)", 60,
          [](std::ostringstream& out) {
              auto f26 = FieldContext::make(2, 6, "1,1,0,0,0,0,1");
              auto f34 = FieldContext::make(3, 4, "2,0,0,2,1");
              PropertyReport t9a = property_theorem9(f26, 100, 20240901);
              PropertyReport t9b = property_theorem9(f34, 100, 20240902);
              require(out, t9a.ok, "degree-2 sunflowers in F_{2^6}");
              require(out, t9b.ok, "degree-2 sunflowers in F_{3^4}");
              PropertyReport p10 = property_prop10(f26, 2, 100, 20240903);
              require(out, p10.ok, "construction with t=2 in F_{2^6}");
              // center-stabilizer property on every sunflower found in scans
              // (violations surface as scan counterexamples)
              ScanReport flowers = scan_sunflowers(
                  f26, 2, 4, divisors_from(f26->group_order_factorization()));
              require(out, flowers.counterexamples.empty(), "scan counterexamples");
              unsigned nontrivial = 0;
              for (const auto& o : flowers.orbits)
                  if (o.sunflower && o.center_dim > 0) ++nontrivial;
              require(out, nontrivial > 0, "nontrivial centers found in F_{2^6}");
              auto f35 = FieldContext::make(3, 5, "1,2,0,0,0,1");
              ScanReport prime = scan_sunflowers(
                  f35, 2, 3, divisors_from(f35->group_order_factorization()));
              require(out, prime.counterexamples.empty(), "prime-degree scan");
              for (const auto& o : prime.orbits)
                  if (o.sunflower)
                      require(out, o.center_dim == 0, "prime n gives trivial centers");
              // integer scan
              require(out, scan_lemma4(5, 12).empty(), "divisibility scan");
              // translate identity on every verified difference set
              auto f24 = FieldContext::make(2, 4, "1,1,0,0,1");
              GrassmannianStream stream(f24, 3);
              while (auto u = stream.next()) {
                  auto d = subspace_indices(*u);
                  DsVerdict verdict = verify_ds(d, 15);
                  require(out, verdict.is_ds, "hyperplane set verifies");
                  for (uint64_t g1 = 0; g1 < 15; ++g1)
                      for (uint64_t g2 = 0; g2 < g1; ++g2)
                          require(out, translate_intersection(d, g1, g2, 15) == *verdict.lambda,
                                  "translate intersection = lambda");
              }
              std::vector<uint64_t> fano{1, 2, 4};
              for (uint64_t g1 = 1; g1 < 7; ++g1)
                  require(out, translate_intersection(fano, g1, 0, 7) == 1, "fano translates");
          });

    h.run("criterion 12: structural invariants (divisibility, Eq. 5, counts, metric axioms)",
          120, [&](std::ostringstream& out) {
              // Grassmannian accounting inside the criterion-9 scans
              for (const auto& [name, report] : h.scans) {
                  for (const auto& [k, acc] : report.per_k) {
                      auto expected = qbinomial(report.p, report.n, k);
                      require(out, expected && acc.visited == *expected,
                              "scan visited = q-binomial");
                      require(out, acc.orbit_size_sum == acc.visited, "orbit partition");
                  }
                  uint64_t group = *checked_pow(report.p, report.n) - 1;
                  for (const auto& o : report.orbits)
                      require(out, group % o.size == 0, "orbit size divides q^n - 1");
              }
              // Eq. (5) on freshly analyzed orbits across all four fields
              for (const auto& c : kScanCases) {
                  auto ctx = FieldContext::make(c.p, c.n, c.modulus);
                  std::mt19937_64 rng(515151);
                  auto divisors = divisors_from(ctx->group_order_factorization());
                  for (int i = 0; i < 25; ++i) {
                      Subspace u = random_subspace(ctx, 1 + rng() % (c.n - 1), rng);
                      uint64_t d = divisors[rng() % divisors.size()];
                      FieldElement beta = ctx->exp(ctx->group_order() / d);
                      if (beta.is_zero()) continue;
                      OrbitReport r = analyze_orbit(u, beta);
                      require(out, r.size * r.stabilizer_beta_order == r.generator_order,
                              "size x |Stab_beta| = |beta|");
                      require(out, ctx->group_order() % r.size == 0, "size | q^n - 1");
                  }
                  // metric axioms on 1000 random triples
                  for (int i = 0; i < 1000; ++i) {
                      Subspace a = random_subspace(ctx, rng() % (c.n + 1), rng);
                      Subspace b = random_subspace(ctx, rng() % (c.n + 1), rng);
                      Subspace cc = random_subspace(ctx, rng() % (c.n + 1), rng);
                      unsigned dab = subspace_distance(a, b);
                      require(out, dab == subspace_distance(b, a), "symmetry");
                      require(out, (dab == 0) == (a == b), "identity of indiscernibles");
                      require(out,
                              subspace_distance(a, cc) <= dab + subspace_distance(b, cc),
                              "triangle inequality");
                  }
              }
          });

    std::printf("%d criterion(s) failed\n", h.failures);
    return h.failures == 0 ? 0 : 1;
}
