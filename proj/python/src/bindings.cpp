// Python entry points. Structured values cross the boundary as JSON text and
// are decoded on the Python side, so the schema matches the CLI output.

#include "tpalab/io.hpp"
#include "tpalab/report.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;
using namespace tpalab;

namespace {

FamilySpec spec_from(const std::string& family, size_t n, const std::string& params) {
    FamilySpec s{parse_family(family), n, params_from_json(json::parse(params))};
    Params defaults = default_params(s.family, n);
    for (const auto& [k, v] : defaults)
        if (!s.params.count(k)) s.params[k] = v;
    return s;
}

std::string make_algebra_json(const std::string& family, size_t n, const std::string& params) {
    return algebra_to_json(make_algebra(spec_from(family, n, params))).dump();
}

std::string check_lie(const std::string& algebra) {
    AlgebraTable t = parse_algebra(algebra);
    ResidualList anti = antisymmetry_residual(t), jac = jacobi_residual(t);
    json out{{"antisymmetry", residuals_to_json(anti)},
             {"jacobi", residuals_to_json(jac)},
             {"is_lie", anti.empty() && jac.empty()}};
    if (anti.empty() && jac.empty()) {
        out["lower_central_series"] = lower_central_series(t);
        out["is_filiform"] = is_filiform(t);
    }
    return out.dump();
}

std::string delta_derivations(const std::string& algebra, const std::string& delta) {
    return derivation_space_to_json(delta_derivation_space(parse_algebra(algebra), parse_rational(delta))).dump();
}

std::string tpa_space(const std::string& algebra, bool constraints) {
    ProductSpace s = tpa_linear_space(parse_algebra(algebra));
    json basis = json::array();
    for (const auto& p : s.basis) basis.push_back(algebra_to_json(p));
    json out{{"dimension", s.dimension()}, {"coordinates", s.coordinates}, {"basis", basis}};
    if (constraints) {
        auto cs = associativity_constraints(s);
        json rel = json::array(), comps = json::array();
        for (const auto& c : cs) rel.push_back(c.to_string(s.coordinates));
        for (const auto& comp : case_split_solve(cs)) {
            json zero = json::array(), residual = json::array();
            for (size_t v : comp.forced_zero) zero.push_back(s.coordinates[v]);
            for (const auto& c : comp.residual) residual.push_back(c.to_string(s.coordinates));
            comps.push_back({{"zero", zero}, {"residual", residual}, {"unresolved", comp.unresolved()}});
        }
        out["constraints"] = rel;
        out["components"] = comps;
    }
    return out.dump();
}

std::string verify(const std::string& algebra, const std::string& product) {
    AlgebraTable b = parse_algebra(algebra), p = parse_algebra(product);
    return verification_to_json(verify_tpa(b, p), b, p).dump();
}

std::string tp_product(const std::string& family, size_t n, const std::string& variant, const std::string& params,
                       const std::string& tp_params) {
    FamilySpec s = spec_from(family, n, params);
    if (json::parse(params).empty()) s.params = branch_params(s.family, n, variant);
    return algebra_to_json(make_tp_product({s, variant, params_from_json(json::parse(tp_params))})).dump();
}

std::string verify_all(const std::string& n_s, const std::string& n_r, std::uint64_t seed, size_t threads) {
    return report_to_json(run_verify_all(parse_range(n_s), parse_range(n_r), seed, threads)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("version") = kToolVersion;
    m.def("make_algebra", &make_algebra_json, py::arg("family"), py::arg("n"), py::arg("params"));
    m.def("check_lie", &check_lie, py::arg("algebra"));
    m.def("delta_derivations", &delta_derivations, py::arg("algebra"), py::arg("delta"));
    m.def("tpa_space", &tpa_space, py::arg("algebra"), py::arg("constraints"));
    m.def("verify_tpa", &verify, py::arg("algebra"), py::arg("product"));
    m.def("tp_product", &tp_product, py::arg("family"), py::arg("n"), py::arg("variant"), py::arg("params"),
          py::arg("tp_params"));
    m.def("catalog", [](size_t n_s, size_t n_r) { return catalog_json(n_s, n_r).dump(); }, py::arg("n_s"),
          py::arg("n_r"));
    m.def("verify_all", &verify_all, py::arg("n_s"), py::arg("n_r"), py::arg("seed"), py::arg("threads"),
          py::call_guard<py::gil_scoped_release>());
}
