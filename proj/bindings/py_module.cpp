#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orbitcode/json_io.hpp"

namespace py = pybind11;
using namespace orbitcode;

namespace {

// The context type is immutable and handed around as shared_ptr<const ...>;
// a thin value wrapper keeps the python surface simple.
struct PyField {
    FieldCtxPtr ctx;
};

Subspace py_span(const PyField&, const std::vector<FieldElement>& gens) {
    return Subspace::span(std::span<const FieldElement>(gens));
}

std::string json_str(const nlohmann::json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cyclic and quasi-cyclic orbit subspace codes over F_{q^n}";

    py::register_exception<Error>(m, "OrbitcodeError");

    py::class_<FieldElement>(m, "FieldElement")
        .def_property_readonly("coeffs", &FieldElement::coeffs)
        .def("is_zero", &FieldElement::is_zero)
        .def("is_one", &FieldElement::is_one)
        .def("order", &FieldElement::order)
        .def("degree", &FieldElement::degree)
        .def("in_subfield", &FieldElement::in_subfield, py::arg("t"))
        .def("inverse", &FieldElement::inverse)
        .def("pow", &FieldElement::pow, py::arg("e"))
        .def("frobenius", &FieldElement::frobenius)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__repr__", [](const FieldElement& e) { return "<element " + e.to_string() + ">"; })
        .def("__str__", &FieldElement::to_string);

    py::class_<Subspace>(m, "Subspace")
        .def_property_readonly("dimension", &Subspace::dimension)
        .def_property_readonly("ambient_dimension", &Subspace::ambient_dimension)
        .def("basis", &Subspace::basis_elements)
        .def("contains", &Subspace::contains, py::arg("x"))
        .def("contains_subspace", &Subspace::contains_subspace, py::arg("other"))
        .def("sum", &Subspace::sum)
        .def("intersect", &Subspace::intersect)
        .def("scaled", &Subspace::scaled, py::arg("x"))
        .def("distance", &subspace_distance, py::arg("other"))
        .def("elements", [](const Subspace& s) { return s.elements(); })
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__lt__", [](const Subspace& a, const Subspace& b) { return a < b; })
        .def("__repr__", [](const Subspace& s) { return "<subspace " + s.to_string() + ">"; })
        .def("__str__", &Subspace::to_string);

    py::class_<PyField>(m, "Field")
        .def(py::init([](uint64_t p, unsigned n, const std::string& modulus) {
                 return PyField{FieldContext::make(p, n, modulus)};
             }),
             py::arg("p"), py::arg("n"), py::arg("modulus"))
        .def_property_readonly("p", [](const PyField& f) { return f.ctx->p(); })
        .def_property_readonly("n", [](const PyField& f) { return f.ctx->n(); })
        .def_property_readonly("group_order",
                               [](const PyField& f) { return f.ctx->group_order(); })
        .def_property_readonly("alpha_primitive",
                               [](const PyField& f) { return f.ctx->alpha_primitive(); })
        .def_property_readonly("modulus", [](const PyField& f) { return f.ctx->modulus_text(); })
        .def_property_readonly("group_order_factorization",
                               [](const PyField& f) { return f.ctx->group_order_factorization(); })
        .def("zero", [](const PyField& f) { return f.ctx->zero(); })
        .def("one", [](const PyField& f) { return f.ctx->one(); })
        .def("alpha", [](const PyField& f) { return f.ctx->alpha(); })
        .def("element",
             [](const PyField& f, const std::vector<uint64_t>& coeffs) {
                 return f.ctx->element(coeffs);
             },
             py::arg("coeffs"))
        .def("exp", [](const PyField& f, uint64_t i) { return f.ctx->exp(i); }, py::arg("i"))
        .def("dlog", [](const PyField& f, const FieldElement& x) { return f.ctx->dlog(x); },
             py::arg("x"))
        .def("subfield_generator",
             [](const PyField& f, unsigned t) { return f.ctx->subfield_generator(t); },
             py::arg("t"))
        .def("subfield_subspace",
             [](const PyField& f, unsigned t) { return subfield_subspace(f.ctx, t); },
             py::arg("t"))
        .def("span", &py_span, py::arg("generators"))
        .def("zero_subspace", [](const PyField& f) { return Subspace::zero(f.ctx); })
        .def("subspaces",
             [](const PyField& f, unsigned k, uint64_t cap) {
                 std::vector<Subspace> out;
                 GrassmannianStream stream(f.ctx, k, cap);
                 while (auto s = stream.next()) out.push_back(std::move(*s));
                 return out;
             },
             py::arg("k"), py::arg("cap") = kDefaultGrassmannCap)
        .def("__repr__", [](const PyField& f) {
            return "<Field p=" + std::to_string(f.ctx->p()) +
                   " n=" + std::to_string(f.ctx->n()) + ">";
        });

    py::enum_<TrivialClass>(m, "TrivialClass")
        .value("DimEqualsT", TrivialClass::DimEqualsT)
        .value("DimEqualsNMinusT", TrivialClass::DimEqualsNMinusT)
        .value("NonTrivial", TrivialClass::NonTrivial);

    py::class_<StabilizerInfo>(m, "StabilizerInfo")
        .def_readonly("t", &StabilizerInfo::t)
        .def_readonly("full_orbit_size", &StabilizerInfo::full_orbit_size)
        .def_readonly("is_full_length", &StabilizerInfo::is_full_length);

    py::class_<OrbitReport>(m, "OrbitReport")
        .def_readonly("generator_order", &OrbitReport::generator_order)
        .def_readonly("size", &OrbitReport::size)
        .def_readonly("stabilizer_beta_order", &OrbitReport::stabilizer_beta_order)
        .def_readonly("dim", &OrbitReport::dim)
        .def_readonly("weight_spectrum", &OrbitReport::weight_spectrum)
        .def_readonly("min_distance", &OrbitReport::min_distance)
        .def_readonly("equidistant", &OrbitReport::equidistant)
        .def_readonly("intersection_dim", &OrbitReport::intersection_dim)
        .def_readonly("sunflower", &OrbitReport::sunflower)
        .def_readonly("center", &OrbitReport::center)
        .def_readonly("trivial_class", &OrbitReport::trivial_class)
        .def_readonly("stabilizer", &OrbitReport::stab)
        .def("to_json", [](const OrbitReport& r) { return json_str(to_json(r)); });

    m.def("stabilizer", &stabilizer, py::arg("u"));
    m.def("classify_trivial",
          [](const Subspace& u) {
              TrivialVerdict v = classify_trivial(u);
              return py::make_tuple(v.cls, v.predicted_intersection_dim);
          },
          py::arg("u"));
    m.def("analyze_orbit",
          [](const Subspace& u, const FieldElement& beta, bool pairwise) {
              OrbitOptions opts;
              opts.pairwise_oracle = pairwise;
              return analyze_orbit(u, beta, opts);
          },
          py::arg("u"), py::arg("beta"), py::arg("pairwise") = false);
    m.def("sunflower_check", &sunflower_check, py::arg("u"), py::arg("beta"),
          py::arg("pairwise") = false);
    m.def("build_sunflower", &build_sunflower, py::arg("v"), py::arg("x"));
    m.def("sunflower_bounds",
          [](const OrbitReport& r, const Subspace& u) { return json_str(to_json(sunflower_bounds(r, u))); },
          py::arg("report"), py::arg("u"));
    m.def("qbinomial", &qbinomial, py::arg("q"), py::arg("n"), py::arg("k"));

    py::class_<DsVerdict>(m, "DsVerdict")
        .def_readonly("v", &DsVerdict::v)
        .def_readonly("k", &DsVerdict::k)
        .def_readonly("is_ds", &DsVerdict::is_ds)
        .def_readonly("lambda_", &DsVerdict::lambda)
        .def_readonly("eq1_holds", &DsVerdict::eq1_holds);

    py::class_<RdsVerdict>(m, "RdsVerdict")
        .def_readonly("n_sub", &RdsVerdict::n_sub)
        .def_readonly("m", &RdsVerdict::m)
        .def_readonly("k", &RdsVerdict::k)
        .def_readonly("is_rds", &RdsVerdict::is_rds)
        .def_readonly("lambda1", &RdsVerdict::lambda1)
        .def_readonly("lambda2", &RdsVerdict::lambda2)
        .def_readonly("lemma2_holds", &RdsVerdict::lemma2_holds);

    m.def("difference_counts",
          [](const std::vector<uint64_t>& d, uint64_t v) { return difference_counts(d, v); },
          py::arg("d"), py::arg("v"));
    m.def("verify_ds",
          [](const std::vector<uint64_t>& d, uint64_t v) { return verify_ds(d, v); },
          py::arg("d"), py::arg("v"));
    m.def("verify_rds",
          [](const std::vector<uint64_t>& d, uint64_t v, uint64_t n_sub) {
              return verify_rds(d, v, n_sub);
          },
          py::arg("d"), py::arg("v"), py::arg("n_sub"));
    m.def("translate",
          [](const std::vector<uint64_t>& d, uint64_t g, uint64_t v) {
              return translate(d, g, v);
          },
          py::arg("d"), py::arg("g"), py::arg("v"));
    m.def("translate_intersection",
          [](const std::vector<uint64_t>& d, uint64_t g, uint64_t g2, uint64_t v) {
              return translate_intersection(d, g, g2, v);
          },
          py::arg("d"), py::arg("g"), py::arg("g2"), py::arg("v"));
    m.def("subspace_indices",
          [](const Subspace& u) { return subspace_indices(u); }, py::arg("u"));

    py::enum_<BridgeTheorem>(m, "BridgeTheorem")
        .value("Auto", BridgeTheorem::Auto)
        .value("Theorem3", BridgeTheorem::Theorem3)
        .value("Theorem4", BridgeTheorem::Theorem4)
        .value("Theorem6", BridgeTheorem::Theorem6);

    py::class_<BridgeVerdict>(m, "BridgeVerdict")
        .def_readonly("applied", &BridgeVerdict::applied)
        .def_readonly("v", &BridgeVerdict::v)
        .def_readonly("stabilizer_degree", &BridgeVerdict::stabilizer_degree)
        .def_readonly("r", &BridgeVerdict::r)
        .def_readonly("indices", &BridgeVerdict::indices)
        .def_readonly("expected_params", &BridgeVerdict::expected_params)
        .def_readonly("ds", &BridgeVerdict::ds)
        .def_readonly("rds", &BridgeVerdict::rds)
        .def_readonly("verified", &BridgeVerdict::verified)
        .def("to_json", [](const BridgeVerdict& v) { return json_str(to_json(v)); });

    m.def("bridge_check", &bridge_check, py::arg("u"),
          py::arg("expect") = BridgeTheorem::Auto);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("subspaces_visited", &ScanReport::subspaces_visited)
        .def_readonly("orbit_count", &ScanReport::orbit_count)
        .def_readonly("counterexamples", &ScanReport::counterexamples)
        .def_property_readonly("equidistant_count", &ScanReport::equidistant_count)
        .def_property_readonly("sunflower_count", &ScanReport::sunflower_count)
        .def_readonly("seconds", &ScanReport::seconds)
        .def("to_json", [](const ScanReport& r) { return json_str(to_json(r)); });

    m.def("scan_equidistant",
          [](const PyField& f, unsigned k_min, unsigned k_max, unsigned workers) {
              ScanOptions opts;
              opts.workers = workers;
              return scan_equidistant(f.ctx, k_min, k_max, opts);
          },
          py::arg("field"), py::arg("k_min"), py::arg("k_max"), py::arg("workers") = 1);
    m.def("scan_sunflowers",
          [](const PyField& f, unsigned k_min, unsigned k_max,
             const std::vector<uint64_t>& orders, unsigned workers) {
              ScanOptions opts;
              opts.workers = workers;
              return scan_sunflowers(f.ctx, k_min, k_max, orders, opts);
          },
          py::arg("field"), py::arg("k_min"), py::arg("k_max"), py::arg("orders"),
          py::arg("workers") = 1);
    m.def("scan_lemma4",
          [](uint64_t m_max, unsigned exp_max) {
              std::vector<std::tuple<uint64_t, unsigned, unsigned, unsigned>> out;
              for (const auto& v : scan_lemma4(m_max, exp_max))
                  out.emplace_back(v.m, v.a, v.b, v.c);
              return out;
          },
          py::arg("m_max"), py::arg("exp_max"));
    m.def("remark1_bounds",
          [](uint64_t q, unsigned n, unsigned k, unsigned t) {
              return json_str(to_json(remark1_bounds(q, n, k, t)));
          },
          py::arg("q"), py::arg("n"), py::arg("k"), py::arg("t") = 1);

    py::class_<PropertyReport>(m, "PropertyReport")
        .def_readonly("name", &PropertyReport::name)
        .def_readonly("trials", &PropertyReport::trials)
        .def_readonly("seed", &PropertyReport::seed)
        .def_readonly("passed", &PropertyReport::passed)
        .def_readonly("resamples", &PropertyReport::resamples)
        .def_readonly("ok", &PropertyReport::ok);

    m.def("property_theorem9",
          [](const PyField& f, unsigned trials, uint64_t seed) {
              return property_theorem9(f.ctx, trials, seed);
          },
          py::arg("field"), py::arg("trials"), py::arg("seed"));
    m.def("property_prop10",
          [](const PyField& f, unsigned t, unsigned trials, uint64_t seed) {
              return property_prop10(f.ctx, t, trials, seed);
          },
          py::arg("field"), py::arg("t"), py::arg("trials"), py::arg("seed"));

    py::class_<ExampleReport>(m, "ExampleReport")
        .def_readonly("id", &ExampleReport::id)
        .def_readonly("ok", &ExampleReport::ok)
        .def_readonly("assumptions", &ExampleReport::assumptions)
        .def_property_readonly("checks",
                               [](const ExampleReport& r) {
                                   std::vector<std::tuple<std::string, std::string, std::string,
                                                          std::string, bool>> out;
                                   for (const auto& c : r.checks)
                                       out.emplace_back(c.quantity, c.expected, c.actual, c.tag,
                                                        c.match);
                                   return out;
                               })
        .def("to_json", [](const ExampleReport& r) { return json_str(to_json(r)); });

    m.def("reproduce_example", &reproduce_example, py::arg("id"));
}
