#pragma once

// JSON renderings of the report types. Kept out of the core headers so the
// library itself has no serialization dependency; timing fields are omitted
// so that identical inputs give byte-identical artifacts.

#include <json.hpp>

#include "orbitcode/diffset.hpp"
#include "orbitcode/orbit.hpp"
#include "orbitcode/verify.hpp"

namespace orbitcode {

inline nlohmann::json to_json(const FieldContext& ctx) {
    nlohmann::json fac = nlohmann::json::array();
    for (const auto& [p, e] : ctx.group_order_factorization())
        fac.push_back({{"prime", p}, {"exponent", e}});
    return {
        {"p", ctx.p()},
        {"n", ctx.n()},
        {"modulus", ctx.modulus_text()},
        {"group_order", ctx.group_order()},
        {"group_order_factorization", fac},
        {"alpha_primitive", ctx.alpha_primitive()},
        {"dlog_table", ctx.has_dlog_table()},
    };
}

inline nlohmann::json to_json(const Subspace& s) {
    nlohmann::json rows = nlohmann::json::array();
    const unsigned n = s.ambient_dimension();
    for (unsigned r = 0; r < s.dimension(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned c = 0; c < n; ++c) row.push_back(s.flat_basis()[r * n + c]);
        rows.push_back(row);
    }
    return {{"dimension", s.dimension()}, {"basis", rows}};
}

inline nlohmann::json to_json(const StabilizerInfo& s) {
    return {{"t", s.t},
            {"full_orbit_size", s.full_orbit_size},
            {"is_full_length", s.is_full_length}};
}

inline nlohmann::json to_json(const SunflowerBounds& b) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : b.entries)
        entries.push_back({{"kind", e.kind},
                           {"bound", e.bound},
                           {"strict", e.strict},
                           {"satisfied", e.satisfied},
                           {"with_equality", e.with_equality}});
    nlohmann::json out{{"trivial_center", b.trivial_center},
                       {"k", b.k},
                       {"center_dim", b.center_dim},
                       {"entries", entries},
                       {"size_divides_group_order", b.size_divides_group_order},
                       {"all_satisfied", b.all_satisfied},
                       {"optimal", b.optimal}};
    if (b.nontrivial_center_reference) {
        out["nontrivial_center_reference"] = *b.nontrivial_center_reference;
        out["exceeds_reference"] = b.exceeds_reference;
    }
    return out;
}

inline nlohmann::json to_json(const OrbitReport& r) {
    nlohmann::json spectrum = nlohmann::json::object();
    for (const auto& [dim, count] : r.weight_spectrum)
        spectrum[std::to_string(dim)] = count;
    nlohmann::json out{
        {"generator", r.generator.to_string()},
        {"generator_order", r.generator_order},
        {"size", r.size},
        {"stabilizer_beta_order", r.stabilizer_beta_order},
        {"dim", r.dim},
        {"weight_spectrum", spectrum},
        {"equidistant", r.equidistant},
        {"sunflower", r.sunflower},
        {"trivial_class", to_string(r.trivial_class)},
        {"stabilizer", to_json(r.stab)},
    };
    out["min_distance"] = r.min_distance ? nlohmann::json(*r.min_distance) : nlohmann::json();
    out["intersection_dim"] =
        r.intersection_dim ? nlohmann::json(*r.intersection_dim) : nlohmann::json();
    out["center"] = r.center ? to_json(*r.center) : nlohmann::json();
    return out;
}

inline nlohmann::json to_json(const DsVerdict& v) {
    nlohmann::json out{{"v", v.v}, {"k", v.k}, {"is_ds", v.is_ds}, {"eq1_holds", v.eq1_holds}};
    out["lambda"] = v.lambda ? nlohmann::json(*v.lambda) : nlohmann::json();
    return out;
}

inline nlohmann::json to_json(const RdsVerdict& v) {
    nlohmann::json out{{"n_sub", v.n_sub},
                       {"m", v.m},
                       {"k", v.k},
                       {"is_rds", v.is_rds},
                       {"lemma2_holds", v.lemma2_holds}};
    out["lambda1"] = v.lambda1 ? nlohmann::json(*v.lambda1) : nlohmann::json();
    out["lambda2"] = v.lambda2 ? nlohmann::json(*v.lambda2) : nlohmann::json();
    return out;
}

inline nlohmann::json to_json(const BridgeVerdict& v) {
    nlohmann::json out{
        {"applied", to_string(v.applied)},
        {"v", v.v},
        {"stabilizer_degree", v.stabilizer_degree},
        {"r", v.r},
        {"indices", v.indices},
        {"expected_params", v.expected_params},
        {"verified", v.verified},
    };
    if (!v.note.empty()) out["note"] = v.note;
    if (v.ds) out["ds"] = to_json(*v.ds);
    if (v.rds) out["rds"] = to_json(*v.rds);
    return out;
}

inline nlohmann::json to_json(const OrbitSummary& o) {
    nlohmann::json out{
        {"k", o.k},
        {"rep", to_json(o.rep)},
        {"t", o.t},
        {"generator_order", o.generator_order},
        {"size", o.size},
        {"equidistant", o.equidistant},
        {"sunflower", o.sunflower},
        {"center_dim", o.center_dim},
        {"trivial_class", to_string(o.trivial_class)},
    };
    out["intersection_dim"] =
        o.intersection_dim ? nlohmann::json(*o.intersection_dim) : nlohmann::json();
    return out;
}

inline nlohmann::json to_json(const ScanReport& r) {
    nlohmann::json orbits = nlohmann::json::array();
    for (const auto& o : r.orbits) orbits.push_back(to_json(o));
    nlohmann::json per_k = nlohmann::json::object();
    for (const auto& [k, acc] : r.per_k)
        per_k[std::to_string(k)] = {{"visited", acc.visited},
                                    {"orbit_size_sum", acc.orbit_size_sum},
                                    {"orbits", acc.orbits}};
    return {
        {"p", r.p},
        {"n", r.n},
        {"k_values", r.k_values},
        {"subgroup_orders", r.subgroup_orders},
        {"subspaces_visited", r.subspaces_visited},
        {"orbit_count", r.orbit_count},
        {"orbits", orbits},
        {"counterexamples", r.counterexamples},
        {"per_k", per_k},
    };
}

inline nlohmann::json to_json(const Remark1Bounds& b) {
    return {
        {"q", b.q},
        {"n", b.n},
        {"k", b.k},
        {"t", b.t},
        {"r", b.r},
        {"full_length_size", b.full_length_size},
        {"orbit_size", b.orbit_size},
        {"spread_bound", b.spread_bound},
        {"partial_spread_bound", b.partial_spread_bound},
        {"ruled_out", b.ruled_out},
    };
}

inline nlohmann::json to_json(const PropertyReport& r) {
    return {
        {"name", r.name},        {"trials", r.trials},       {"seed", r.seed},
        {"passed", r.passed},    {"resamples", r.resamples}, {"transcript", r.transcript},
        {"ok", r.ok},
    };
}

inline nlohmann::json to_json(const ExampleReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"quantity", c.quantity},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"tag", c.tag},
                          {"match", c.match}});
    return {{"id", r.id}, {"ok", r.ok}, {"checks", checks}, {"assumptions", r.assumptions}};
}

/// CSV summary: one row per analyzed orbit.
inline std::string scan_csv(const ScanReport& r, bool with_generator_order) {
    std::string out = "k,t,size,equidistant,c,sunflower,center_dim";
    if (with_generator_order) out += ",generator_order";
    out += "\n";
    for (const auto& o : r.orbits) {
        out += std::to_string(o.k) + "," + std::to_string(o.t) + "," + std::to_string(o.size) +
               "," + (o.equidistant ? "1" : "0") + "," +
               (o.intersection_dim ? std::to_string(*o.intersection_dim) : "") + "," +
               (o.sunflower ? "1" : "0") + "," + std::to_string(o.center_dim);
        if (with_generator_order) out += "," + std::to_string(o.generator_order);
        out += "\n";
    }
    return out;
}

}  // namespace orbitcode
