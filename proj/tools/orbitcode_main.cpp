// orbitcode: construct and analyze cyclic / quasi-cyclic orbit subspace codes
// over F_{q^n}, verify the difference-set correspondences, and run exhaustive
// desk-scale scans.
//
// Exit codes: 0 success / verified, 1 mismatch or counterexample,
// 2 invalid configuration or modulus, 3 degenerate subspace,
// 4 generator inside the stabilizer (unless --allow-degenerate).

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbitcode/json_io.hpp"

using namespace orbitcode;
using nlohmann::json;

namespace {

struct FieldArgs {
    uint64_t p = 0;
    unsigned n = 0;
    std::string modulus;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
    cmd->add_option("--p", args.p, "prime characteristic")->required();
    cmd->add_option("--n", args.n, "extension degree")->required();
    cmd->add_option("--modulus", args.modulus,
                    "comma-separated ascending coefficients, monic of degree n "
                    "(default: first primitive modulus in lexicographic order)");
}

FieldCtxPtr make_context(const FieldArgs& args) {
    if (args.modulus.empty()) return FieldContext::make_default(args.p, args.n);
    return FieldContext::make(args.p, args.n, args.modulus);
}

uint64_t default_ops_cap() {
    if (const char* env = std::getenv("ORBITCODE_CAP")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw Error(ErrorCode::InvalidArgument, "ORBITCODE_CAP is not an integer");
        }
    }
    return 100'000'000;
}

// "exp:i1,i2,..." or "coeffs:(c0 c1 ...);(...)"
std::vector<FieldElement> parse_generators(const FieldCtxPtr& ctx, const std::string& spec) {
    std::vector<FieldElement> out;
    if (spec.rfind("exp:", 0) == 0) {
        std::istringstream in(spec.substr(4));
        std::string token;
        while (std::getline(in, token, ','))
            if (!token.empty()) out.push_back(ctx->exp(std::stoull(token)));
    } else if (spec.rfind("coeffs:", 0) == 0) {
        std::istringstream in(spec.substr(7));
        std::string row;
        while (std::getline(in, row, ';')) {
            auto open = row.find('(');
            auto close = row.find(')');
            if (open == std::string::npos || close == std::string::npos || close < open)
                throw Error(ErrorCode::InvalidArgument, "coeffs rows look like (c0 c1 ...)");
            out.push_back(ctx->element_from_string(row.substr(open + 1, close - open - 1)));
        }
    } else {
        throw Error(ErrorCode::InvalidArgument, "subspace spec must start with exp: or coeffs:");
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no generators given");
    return out;
}

// "exp:i", "coeffs:(c0 c1 ...)" or "subfield:t"
FieldElement parse_element(const FieldCtxPtr& ctx, const std::string& spec) {
    if (spec.rfind("subfield:", 0) == 0)
        return ctx->subfield_generator(static_cast<unsigned>(std::stoul(spec.substr(9))));
    auto gens = parse_generators(ctx, spec);
    if (gens.size() != 1)
        throw Error(ErrorCode::InvalidArgument, "element spec must name a single element");
    return gens.front();
}

// "a..b" or "a"
std::pair<unsigned, unsigned> parse_k_range(const std::string& spec) {
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        unsigned k = static_cast<unsigned>(std::stoul(spec));
        return {k, k};
    }
    return {static_cast<unsigned>(std::stoul(spec.substr(0, dots))),
            static_cast<unsigned>(std::stoul(spec.substr(dots + 2)))};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << content;
}

void emit_json(const std::string& path, const json& doc) {
    if (!path.empty()) write_file(path, doc.dump(2) + "\n");
}

int exit_code_for(const Error& err) {
    switch (err.code()) {
        case ErrorCode::DegenerateSubspace: return 3;
        default: return 2;
    }
}

struct ScanOut {
    std::string json_path, csv_path;
};

int finish_scan(const ScanReport& report, const ScanOut& out, bool generator_column) {
    std::cout << "p=" << report.p << " n=" << report.n << " visited=" << report.subspaces_visited
              << " orbits=" << report.orbit_count
              << " equidistant=" << report.equidistant_count()
              << " sunflowers=" << report.sunflower_count()
              << " counterexamples=" << report.counterexamples.size() << "  ["
              << report.seconds << " s, " << report.workers << " workers]\n";
    for (const auto& o : report.orbits) {
        if (!o.equidistant && !o.sunflower) continue;
        std::cout << "  k=" << o.k << " t=" << o.t << " size=" << o.size;
        if (o.intersection_dim) std::cout << " c=" << *o.intersection_dim;
        if (o.sunflower) std::cout << " sunflower(center_dim=" << o.center_dim << ")";
        std::cout << " " << to_string(o.trivial_class) << "\n";
    }
    for (const auto& c : report.counterexamples) std::cout << "  COUNTEREXAMPLE: " << c << "\n";
    emit_json(out.json_path, to_json(report));
    if (!out.csv_path.empty()) write_file(out.csv_path, scan_csv(report, generator_column));
    return report.counterexamples.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-orbit cyclic and quasi-cyclic subspace code analyzer"};
    app.require_subcommand(1);

    // ---- field-info ----
    FieldArgs fi_field;
    std::string fi_json;
    auto* fi = app.add_subcommand("field-info", "construct and describe F_{q^n}");
    add_field_options(fi, fi_field);
    fi->add_option("--json", fi_json, "write the report as JSON");

    // ---- analyze ----
    FieldArgs an_field;
    std::string an_gens, an_beta, an_json;
    bool an_allow_degenerate = false, an_pairwise = false;
    uint64_t an_cap = 0;
    auto* an = app.add_subcommand("analyze", "analyze one beta-cyclic orbit code");
    add_field_options(an, an_field);
    an->add_option("--gens", an_gens, "subspace generators (exp:... or coeffs:(...);(...))")
        ->required();
    an->add_option("--beta", an_beta, "orbit generator (exp:i, coeffs:(...), subfield:t)")
        ->required();
    an->add_flag("--allow-degenerate", an_allow_degenerate,
                 "permit beta inside the stabilizer (size-1 orbit)");
    an->add_flag("--exhaustive-pairwise", an_pairwise,
                 "verify the sunflower verdict over all pairs");
    an->add_option("--cap", an_cap, "operation ceiling (default ORBITCODE_CAP or 1e8)");
    an->add_option("--json", an_json, "also write the report to a file");

    // ---- reproduce ----
    int rep_id = 0;
    std::string rep_json;
    auto* rep = app.add_subcommand("reproduce", "re-run one of the bundled reference examples");
    rep->add_option("id", rep_id, "example id (1..8)")->required();
    rep->add_option("--json", rep_json, "write the diff report as JSON");

    // ---- scan ----
    auto* scan = app.add_subcommand("scan", "exhaustive and randomized verification scans");
    scan->require_subcommand(1);

    FieldArgs se_field;
    std::string se_k = "2..2", se_json, se_csv;
    unsigned se_workers = 0;
    uint64_t se_cap = 0;
    auto* se = scan->add_subcommand("equidistant", "classify every cyclic orbit in G_q(n,k)");
    add_field_options(se, se_field);
    se->add_option("--k", se_k, "dimension range, e.g. 2..4");
    se->add_option("--workers", se_workers, "scan parallelism (0 = auto)");
    se->add_option("--cap", se_cap, "operation ceiling");
    se->add_option("--json", se_json, "write the scan report as JSON");
    se->add_option("--csv", se_csv, "write the per-orbit summary as CSV");

    FieldArgs ss_field;
    std::string ss_k = "2..2", ss_orders = "all", ss_json, ss_csv;
    unsigned ss_workers = 0;
    uint64_t ss_cap = 0;
    auto* ss = scan->add_subcommand("sunflowers", "hunt sunflowers under cyclic subgroups");
    add_field_options(ss, ss_field);
    ss->add_option("--k", ss_k, "dimension range, e.g. 2..4");
    ss->add_option("--orders", ss_orders, "subgroup orders: 'all' or a comma list");
    ss->add_option("--workers", ss_workers, "scan parallelism (0 = auto)");
    ss->add_option("--cap", ss_cap, "operation ceiling");
    ss->add_option("--json", ss_json, "write the scan report as JSON");
    ss->add_option("--csv", ss_csv, "write the per-orbit summary as CSV");

    uint64_t l4_m = 5;
    unsigned l4_exp = 12;
    std::string l4_json;
    auto* l4 = scan->add_subcommand("lemma4", "integer divisibility scan");
    l4->add_option("--m-max", l4_m, "largest base");
    l4->add_option("--exp-max", l4_exp, "largest exponent");
    l4->add_option("--json", l4_json, "write violations as JSON");

    FieldArgs t9_field;
    unsigned t9_trials = 100;
    uint64_t t9_seed = 1;
    std::string t9_json;
    auto* t9 = scan->add_subcommand("theorem9", "randomized degree-2 sunflower property");
    add_field_options(t9, t9_field);
    t9->add_option("--trials", t9_trials, "number of random (U, beta) pairs");
    t9->add_option("--seed", t9_seed, "generator seed");
    t9->add_option("--json", t9_json, "write the property report as JSON");

    FieldArgs p10_field;
    unsigned p10_t = 2, p10_trials = 100;
    uint64_t p10_seed = 1;
    std::string p10_json;
    auto* p10 = scan->add_subcommand("prop10", "randomized sunflower-construction property");
    add_field_options(p10, p10_field);
    p10->add_option("--t", p10_t, "stabilizer degree of the center");
    p10->add_option("--trials", p10_trials, "number of random constructions");
    p10->add_option("--seed", p10_seed, "generator seed");
    p10->add_option("--json", p10_json, "write the property report as JSON");

    // ---- diffset ----
    auto* ds = app.add_subcommand("diffset", "difference-set verification");
    ds->require_subcommand(1);

    std::string dv_file;
    uint64_t dv_v = 0, dv_nsub = 0;
    std::string dv_set, dv_json;
    auto* dv = ds->add_subcommand("verify", "verify a (relative) difference set");
    dv->add_option("--file", dv_file, "file: 'v=<int>', residue line, optional 'n_sub=<int>'");
    dv->add_option("--v", dv_v, "modulus");
    dv->add_option("--set", dv_set, "comma-separated residues");
    dv->add_option("--n-sub", dv_nsub, "forbidden subgroup order (relative sets)");
    dv->add_option("--json", dv_json, "write the verdict as JSON");

    FieldArgs df_field;
    std::string df_gens, df_json, df_out;
    auto* df = ds->add_subcommand("from-subspace",
                                  "derive indices from a subspace and check the bridge");
    add_field_options(df, df_field);
    df->add_option("--gens", df_gens, "subspace generators")->required();
    df->add_option("--out", df_out, "write the difference set in the file format");
    df->add_option("--json", df_json, "write the bridge verdict as JSON");

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "closed-form bound evaluations");
    bounds->require_subcommand(1);
    uint64_t r1_q = 0;
    unsigned r1_n = 0, r1_k = 0, r1_t = 1;
    std::string r1_json;
    auto* r1 = bounds->add_subcommand("remark1", "0-intersecting impossibility arithmetic");
    r1->add_option("--q", r1_q, "field size")->required();
    r1->add_option("--n", r1_n, "ambient degree")->required();
    r1->add_option("--k", r1_k, "subspace dimension")->required();
    r1->add_option("--t", r1_t, "stabilizer degree");
    r1->add_option("--json", r1_json, "write the bound record as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // config failures use a stable code
    }

    try {
        if (*fi) {
            auto ctx = make_context(fi_field);
            json doc = to_json(*ctx);
            json lattice = json::array();
            for (unsigned t = 1; t <= ctx->n(); ++t)
                if (ctx->n() % t == 0) lattice.push_back(t);
            doc["subfield_lattice"] = lattice;
            doc["irreducible"] = true;  // construction would have failed otherwise
            std::cout << doc.dump(2) << "\n";
            emit_json(fi_json, doc);
            return 0;
        }

        if (*an) {
            auto ctx = make_context(an_field);
            auto gens = parse_generators(ctx, an_gens);
            Subspace u = Subspace::span(std::span<const FieldElement>(gens));
            if (u.dimension() == 0 || u.dimension() == ctx->n()) {
                std::cout << "DegenerateSubspace\n";
                return 3;
            }
            FieldElement beta = parse_element(ctx, an_beta);
            if (beta.is_zero()) {
                std::cout << "ZeroGenerator\n";
                return 2;
            }
            if (u.scaled(beta) == u && !an_allow_degenerate) {
                std::cout << "GeneratorInStabilizer\n";
                return 4;
            }
            OrbitOptions opts;
            opts.pairwise_oracle = an_pairwise;
            opts.ops_cap = an_cap ? an_cap : default_ops_cap();
            OrbitReport report = analyze_orbit(u, beta, opts);
            json doc = to_json(report);
            doc["field"] = to_json(*ctx);
            doc["subspace"] = to_json(u);
            if (report.sunflower) doc["bounds"] = to_json(sunflower_bounds(report, u));
            std::cout << doc.dump(2) << "\n";
            emit_json(an_json, doc);
            return 0;
        }

        if (*rep) {
            ExampleReport report = reproduce_example(rep_id);
            std::cout << "example " << report.id << ": " << (report.ok ? "ok" : "DIFFS") << "  ["
                      << report.seconds << " s]\n";
            for (const auto& a : report.assumptions) std::cout << "  assumption: " << a << "\n";
            for (const auto& c : report.checks) {
                std::cout << (c.match ? "  = " : "  ! ") << c.quantity << " [" << c.tag
                          << "] expected " << c.expected;
                if (!c.match) std::cout << " got " << c.actual;
                std::cout << "\n";
            }
            emit_json(rep_json, to_json(report));
            return report.ok ? 0 : 1;
        }

        if (*se) {
            auto ctx = make_context(se_field);
            auto [lo, hi] = parse_k_range(se_k);
            ScanOptions opts;
            opts.workers = se_workers;
            opts.ops_cap = se_cap ? se_cap : default_ops_cap();
            ScanReport report = scan_equidistant(ctx, lo, hi, opts);
            return finish_scan(report, {se_json, se_csv}, false);
        }

        if (*ss) {
            auto ctx = make_context(ss_field);
            auto [lo, hi] = parse_k_range(ss_k);
            std::vector<uint64_t> orders;
            if (ss_orders == "all") {
                orders = divisors_from(ctx->group_order_factorization());
            } else {
                std::istringstream in(ss_orders);
                std::string token;
                while (std::getline(in, token, ','))
                    if (!token.empty()) orders.push_back(std::stoull(token));
            }
            ScanOptions opts;
            opts.workers = ss_workers;
            opts.ops_cap = ss_cap ? ss_cap : default_ops_cap();
            ScanReport report = scan_sunflowers(ctx, lo, hi, orders, opts);
            return finish_scan(report, {ss_json, ss_csv}, true);
        }

        if (*l4) {
            auto violations = scan_lemma4(l4_m, l4_exp);
            std::cout << "lemma4 scan m<=" << l4_m << " exp<=" << l4_exp << ": "
                      << violations.size() << " violations\n";
            json doc = json::array();
            for (const auto& v : violations) {
                std::cout << "  VIOLATION m=" << v.m << " a=" << v.a << " b=" << v.b
                          << " c=" << v.c << "\n";
                doc.push_back({{"m", v.m}, {"a", v.a}, {"b", v.b}, {"c", v.c}});
            }
            emit_json(l4_json, doc);
            return violations.empty() ? 0 : 1;
        }

        if (*t9) {
            auto ctx = make_context(t9_field);
            PropertyReport report = property_theorem9(ctx, t9_trials, t9_seed);
            std::cout << report.name << ": " << report.passed << "/" << report.trials
                      << " passed (seed " << report.seed << ", " << report.resamples
                      << " resamples)\n";
            emit_json(t9_json, to_json(report));
            return report.ok ? 0 : 1;
        }

        if (*p10) {
            auto ctx = make_context(p10_field);
            PropertyReport report = property_prop10(ctx, p10_t, p10_trials, p10_seed);
            std::cout << report.name << ": " << report.passed << "/" << report.trials
                      << " passed (seed " << report.seed << ", " << report.resamples
                      << " resamples)\n";
            emit_json(p10_json, to_json(report));
            return report.ok ? 0 : 1;
        }

        if (*dv) {
            std::vector<uint64_t> d_set;
            uint64_t v = dv_v, n_sub = dv_nsub;
            if (!dv_file.empty()) {
                std::ifstream in(dv_file);
                if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + dv_file);
                std::string line;
                while (std::getline(in, line)) {
                    if (line.rfind("v=", 0) == 0)
                        v = std::stoull(line.substr(2));
                    else if (line.rfind("n_sub=", 0) == 0)
                        n_sub = std::stoull(line.substr(6));
                    else if (!line.empty()) {
                        std::istringstream row(line);
                        std::string token;
                        while (std::getline(row, token, ','))
                            if (!token.empty()) d_set.push_back(std::stoull(token));
                    }
                }
            } else {
                std::istringstream row(dv_set);
                std::string token;
                while (std::getline(row, token, ','))
                    if (!token.empty()) d_set.push_back(std::stoull(token));
            }
            if (v == 0) throw Error(ErrorCode::InvalidArgument, "modulus v is required");
            json doc;
            bool verified;
            if (n_sub > 1) {
                RdsVerdict verdict = verify_rds(d_set, v, n_sub);
                verified = verdict.is_rds;
                doc = to_json(verdict);
                std::cout << (verified ? "relative difference set"
                                       : "not a relative difference set");
                if (verified)
                    std::cout << " (" << verdict.n_sub << "," << verdict.m << "," << verdict.k
                              << "," << *verdict.lambda1 << "," << *verdict.lambda2 << ")";
                std::cout << "\n";
            } else {
                DsVerdict verdict = verify_ds(d_set, v);
                verified = verdict.is_ds;
                doc = to_json(verdict);
                std::cout << (verified ? "difference set" : "not a difference set");
                if (verified)
                    std::cout << " (" << verdict.v << "," << verdict.k << "," << *verdict.lambda
                              << ")";
                std::cout << "\n";
            }
            emit_json(dv_json, doc);
            return verified ? 0 : 1;
        }

        if (*df) {
            auto ctx = make_context(df_field);
            auto gens = parse_generators(ctx, df_gens);
            Subspace u = Subspace::span(std::span<const FieldElement>(gens));
            BridgeVerdict verdict = bridge_check(u);
            json doc = to_json(verdict);
            std::cout << doc.dump(2) << "\n";
            emit_json(df_json, doc);
            if (!df_out.empty()) {
                std::string content = "v=" + std::to_string(verdict.v) + "\n";
                for (size_t i = 0; i < verdict.indices.size(); ++i)
                    content += (i ? "," : "") + std::to_string(verdict.indices[i]);
                content += "\n";
                if (verdict.rds) content += "n_sub=" + std::to_string(verdict.rds->n_sub) + "\n";
                write_file(df_out, content);
            }
            return verdict.verified ? 0 : 1;
        }

        if (*r1) {
            Remark1Bounds record = remark1_bounds(r1_q, r1_n, r1_k, r1_t);
            json doc = to_json(record);
            std::cout << doc.dump(2) << "\n";
            emit_json(r1_json, doc);
            return record.ruled_out ? 0 : 1;
        }
    } catch (const Error& err) {
        std::cout << err.what() << "\n";
        return exit_code_for(err);
    } catch (const std::exception& err) {
        std::cout << "InvalidArgument: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
