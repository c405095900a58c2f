#include "tpalab/io.hpp"

#include <fstream>
#include <sstream>

namespace tpalab {

json algebra_to_json(const AlgebraTable& t) {
    json entries = json::array();
    for (const auto& e : t.entries()) entries.push_back({e.i, e.j, e.k, to_string(e.value)});
    return {{"name", t.name()},
            {"dim", t.dim()},
            {"symmetry", to_string(t.symmetry())},
            {"basis", t.basis_names()},
            {"entries", entries}};
}

namespace {

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& field(const json& j, const std::string& key) {
    if (!j.is_object()) fail_at("/", "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) fail_at("/" + key, "missing field");
    return *it;
}

Rational rational_field(const json& v, const std::string& where) {
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::exception& e) {
            fail_at(where, e.what());
        }
    }
    if (v.is_number_integer()) return Rational(v.get<long>());
    fail_at(where, "expected a rational as \"p/q\" string");
}

}  // namespace

AlgebraTable algebra_from_json(const json& j) {
    const json& dimj = field(j, "dim");
    if (!dimj.is_number_unsigned() || dimj.get<size_t>() == 0) fail_at("/dim", "expected a positive integer");
    size_t dim = dimj.get<size_t>();
    Symmetry sym = Symmetry::none;
    try {
        sym = parse_symmetry(field(j, "symmetry").get<std::string>());
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        fail_at("/symmetry", e.what());
    }
    std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
    std::vector<std::string> basis;
    if (j.contains("basis")) {
        if (!j["basis"].is_array()) fail_at("/basis", "expected an array of names");
        for (size_t b = 0; b < j["basis"].size(); ++b) {
            if (!j["basis"][b].is_string()) fail_at("/basis/" + std::to_string(b), "expected a string");
            basis.push_back(j["basis"][b].get<std::string>());
        }
        if (!basis.empty() && basis.size() != dim) fail_at("/basis", "length differs from dim");
    }
    AlgebraTable t(dim, sym, name, basis);
    const json& entries = field(j, "entries");
    if (!entries.is_array()) fail_at("/entries", "expected an array");
    for (size_t r = 0; r < entries.size(); ++r) {
        std::string where = "/entries/" + std::to_string(r);
        const json& e = entries[r];
        if (!e.is_array() || e.size() != 4) fail_at(where, "expected [i, j, k, \"p/q\"]");
        size_t ijk[3];
        for (int c = 0; c < 3; ++c) {
            if (!e[c].is_number_unsigned()) fail_at(where + "/" + std::to_string(c), "expected a 1-based index");
            ijk[c] = e[c].get<size_t>();
            if (ijk[c] < 1 || ijk[c] > dim) fail_at(where + "/" + std::to_string(c), "index out of range");
        }
        Rational v = rational_field(e[3], where + "/3");
        try {
            t.add(ijk[0], ijk[1], ijk[2], v);
        } catch (const std::exception& ex) {
            fail_at(where, ex.what());
        }
    }
    return t;
}

AlgebraTable parse_algebra(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

AlgebraTable load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_algebra(ss.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

json residuals_to_json(const ResidualList& r) {
    json out = json::array();
    for (const auto& v : r) {
        json res = json::array();
        for (const auto& q : v.residual) res.push_back(to_string(q));
        out.push_back({v.indices, res});
    }
    return out;
}

json derivation_space_to_json(const DerivationSpace& s) {
    json basis = json::array();
    for (const auto& m : s.basis) {
        json rows = json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
            rows.push_back(row);
        }
        basis.push_back(rows);
    }
    return {{"algebra", s.algebra.name()}, {"delta", to_string(s.delta)}, {"dimension", s.dimension()}, {"basis", basis}};
}

json verification_to_json(const VerificationReport& r, const AlgebraTable& bracket, const CommutativeProduct& product) {
    json v = json::object();
    v["commutativity"] = residuals_to_json(r.commutative);
    v["associativity"] = residuals_to_json(r.associative);
    v["transposed_leibniz"] = residuals_to_json(r.transposed_leibniz);
    v["leibniz"] = residuals_to_json(r.leibniz);
    v["mixed"] = residuals_to_json(r.mixed);
    return {{"algebra", bracket.name()},
            {"product", product.name()},
            {"is_tpa", r.is_tpa},
            {"is_poisson", r.is_poisson},
            {"is_trivial", r.is_trivial},
            {"violations", v}};
}

json params_to_json(const Params& p) {
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = to_string(v);
    return out;
}

Params params_from_json(const json& j) {
    Params p;
    if (!j.is_object()) throw ParseError("params: expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) p[it.key()] = rational_field(it.value(), "/params/" + it.key());
    return p;
}

json catalog_json(size_t n_s, size_t n_r) {
    json fams = json::array();
    for (const auto& entry : list_catalog(n_s, n_r)) {
        Family f = entry.family;
        size_t n = has_Q_nilradical(f) ? n_r : n_s;
        FamilySpec spec{f, n, default_params(f, n)};
        json variants = json::array();
        for (const auto& v : entry.variants) {
            FamilySpec b{f, n, branch_params(f, n, v.key)};
            Params tp;
            for (const auto& k : v.params) tp[k] = 1;
            json jv = {{"key", v.key},
                       {"branch", v.branch},
                       {"algebra_params", params_to_json(b.params)},
                       {"params", v.params},
                       {"disputed", v.disputed},
                       {"corrected", v.corrected},
                       {"product", algebra_to_json(make_tp_product({b, v.key, tp}))}};
            if (!v.note.empty()) jv["note"] = v.note;
            variants.push_back(jv);
        }
        fams.push_back({{"family", to_string(f)},
                        {"description", entry.description},
                        {"n", n},
                        {"param_schema", entry.param_schema},
                        {"params", params_to_json(spec.params)},
                        {"algebra", algebra_to_json(make_algebra(spec))},
                        {"variants", variants}});
    }
    return {{"families", fams}};
}

}  // namespace tpalab
