#include "tpalab/report.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace tpalab;

namespace {

std::string format_element(const RVector& v, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Rational c = v[k];
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        if (a != 1) os << to_string(a) << " ";
        os << names[k];
        first = false;
    }
    return first ? "0" : os.str();
}

std::vector<std::string> names_of(const AlgebraTable& t) {
    if (!t.basis_names().empty()) return t.basis_names();
    std::vector<std::string> out;
    for (size_t i = 1; i <= t.dim(); ++i) out.push_back("e" + std::to_string(i));
    return out;
}

void print_table(const AlgebraTable& t, std::ostream& os) {
    auto names = names_of(t);
    bool bracket = t.symmetry() == Symmetry::antisymmetric;
    size_t shown = 0;
    for (size_t i = 1; i <= t.dim(); ++i)
        for (size_t j = t.symmetry() == Symmetry::none ? 1 : i; j <= t.dim(); ++j) {
            RVector v = t.product(i, j);
            if (is_zero(v)) continue;
            std::string l = names[i - 1], r = names[j - 1];
            os << "  " << (bracket ? "[" + l + "," + r + "]" : l + "." + r) << " = " << format_element(v, names) << "\n";
            ++shown;
        }
    if (!shown) os << "  (zero product)\n";
}

void print_residuals(const std::string& title, const ResidualList& r, const std::vector<std::string>& names,
                     std::ostream& os, size_t limit = 20) {
    if (r.empty()) return;
    os << title << ": " << r.size() << " violation(s)\n";
    for (size_t i = 0; i < r.size() && i < limit; ++i) {
        os << "  (";
        for (size_t k = 0; k < r[i].indices.size(); ++k) os << (k ? "," : "") << names[r[i].indices[k] - 1];
        os << ") -> " << format_element(r[i].residual, names) << "\n";
    }
    if (r.size() > limit) os << "  ...\n";
}

Params parse_param_list(const std::vector<std::string>& items) {
    Params p;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--param expects k=v, got \"" + it + "\"");
        p[it.substr(0, eq)] = parse_rational(it.substr(eq + 1));
    }
    return p;
}

int cmd_catalog_list(const std::string& json_path) {
    for (const auto& e : list_catalog()) {
        std::cout << to_string(e.family) << ": " << e.description << "\n";
        std::cout << "  params: ";
        if (e.param_schema.empty()) std::cout << "none";
        for (size_t i = 0; i < e.param_schema.size(); ++i) std::cout << (i ? ", " : "") << e.param_schema[i];
        std::cout << "\n";
        if (!e.variants.empty()) {
            std::cout << "  TP variants:";
            for (const auto& v : e.variants)
                std::cout << " " << v.key << (v.disputed ? "[disputed]" : "") << (v.corrected ? "[corrected]" : "");
            std::cout << "\n";
        }
    }
    if (!json_path.empty()) save_json(catalog_json(), json_path);
    return 0;
}

int cmd_catalog_show(const std::string& fam, size_t n, const std::vector<std::string>& kv, const std::string& json_path) {
    Family f = parse_family(fam);
    if (n == 0) n = has_Q_nilradical(f) ? 3 : 5;
    Params p = default_params(f, n);
    for (const auto& [k, v] : parse_param_list(kv)) p[k] = v;
    FamilySpec spec{f, n, p};
    AlgebraTable t = make_algebra(spec);
    std::cout << t.name() << ", dim " << t.dim() << "\n";
    print_table(t, std::cout);
    std::cout << "Lie axioms: " << (lie_axioms_hold(t) ? "hold" : "FAIL") << "\n";
    if (auto d = expected_halfderivation_dim(spec)) std::cout << "expected half-derivation dim: " << *d << "\n";
    if (auto d = expected_tpa_space_dim(spec)) std::cout << "expected TPA space dim: " << *d << "\n";
    auto variants = tp_variants(f, n);
    for (const auto& v : variants) {
        std::cout << v.key << " (" << v.branch << (on_branch(spec, v.key) ? ", on branch" : ", off branch") << ")";
        if (!v.params.empty()) {
            std::cout << " params:";
            for (const auto& k : v.params) std::cout << " " << k;
        }
        if (v.disputed) std::cout << " [disputed]";
        if (v.corrected) std::cout << " [corrected]";
        std::cout << "\n";
    }
    if (!json_path.empty()) save_json(algebra_to_json(t), json_path);
    return 0;
}

int cmd_check_lie(const std::string& path) {
    AlgebraTable t = load_algebra(path);
    auto names = names_of(t);
    auto anti = antisymmetry_residual(t), jac = jacobi_residual(t);
    print_residuals("antisymmetry", anti, names, std::cout);
    print_residuals("Jacobi", jac, names, std::cout);
    bool ok = anti.empty() && jac.empty();
    std::cout << (ok ? "Lie axioms hold" : "not a Lie algebra") << "\n";
    return ok ? 0 : 1;
}

int cmd_halfder(const std::string& path, const std::string& delta, const std::string& json_path) {
    AlgebraTable t = load_algebra(path);
    auto names = names_of(t);
    DerivationSpace s = delta_derivation_space(t, parse_rational(delta));
    std::cout << "dimension: " << s.dimension() << "\n";
    for (size_t b = 0; b < s.basis.size(); ++b) {
        std::cout << "phi" << b + 1 << ":\n";
        for (size_t j = 0; j < t.dim(); ++j) {
            RVector img = s.basis[b].col(j);
            if (!is_zero(img)) std::cout << "  " << names[j] << " -> " << format_element(img, names) << "\n";
        }
    }
    if (!json_path.empty()) save_json(derivation_space_to_json(s), json_path);
    return 0;
}

int cmd_tpa_space(const std::string& path, bool constraints) {
    AlgebraTable t = load_algebra(path);
    ProductSpace s = tpa_linear_space(t);
    std::cout << "dimension: " << s.dimension() << "\n";
    for (size_t a = 0; a < s.basis.size(); ++a) {
        std::cout << s.coordinates[a] << ":\n";
        print_table(s.basis[a], std::cout);
    }
    if (!constraints) return 0;
    auto cs = associativity_constraints(s);
    std::cout << "associativity constraints: " << cs.size() << "\n";
    for (const auto& c : cs) std::cout << "  " << c.to_string(s.coordinates) << " = 0\n";
    try {
        auto comps = case_split_solve(cs);
        std::cout << "components: " << comps.size() << "\n";
        for (const auto& c : comps) {
            std::cout << "  {";
            for (size_t i = 0; i < c.forced_zero.size(); ++i)
                std::cout << (i ? ", " : "") << s.coordinates[c.forced_zero[i]] << "=0";
            std::cout << "}";
            if (c.unresolved()) {
                std::cout << " unresolved:";
                for (const auto& r : c.residual) std::cout << " " << r.to_string(s.coordinates) << "=0";
            }
            std::cout << "\n";
        }
    } catch (const TooManyVariables& e) {
        std::cout << "case split skipped: " << e.what() << "\n";
    }
    return 0;
}

int cmd_tpa_verify(const std::string& apath, const std::string& ppath) {
    AlgebraTable b = load_algebra(apath);
    AlgebraTable p = load_algebra(ppath);
    if (p.symmetry() == Symmetry::antisymmetric) throw std::invalid_argument(ppath + ": product must not be antisymmetric");
    VerificationReport r = verify_tpa(b, p);
    std::cout << verification_to_json(r, b, p).dump(2) << "\n";
    return r.is_tpa ? 0 : 1;
}

int cmd_verify_paper(const std::string& ns, const std::string& nr, std::uint64_t seed, const std::string& out) {
    ReportDocument doc = run_verify_all(parse_range(ns), parse_range(nr), seed);
    size_t pass = 0, fail = 0, disputed = 0;
    for (const auto& e : doc.entries) {
        if (!e.pass) ++disputed;
        else if (*e.pass) ++pass;
        else {
            ++fail;
            std::cout << "FAIL " << to_string(e.family) << " n=" << e.n << " {" << params_to_string(e.params) << "} "
                      << e.check << (e.variant.empty() ? "" : " " + e.variant) << ": expected " << e.expected
                      << ", computed " << e.computed << (e.notes.empty() ? "" : " (" + e.notes + ")") << "\n";
        }
    }
    for (const auto& e : doc.entries)
        if (!e.pass)
            std::cout << "DISPUTED " << to_string(e.family) << " n=" << e.n << " " << e.variant << ": " << e.notes << "\n";
    std::cout << doc.entries.size() << " entries: " << pass << " pass, " << fail << " fail, " << disputed
              << " disputed\n";
    if (!out.empty()) save_json(report_to_json(doc), out);
    return doc.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of half-derivations and transposed Poisson structures"};
    app.require_subcommand(1);

    auto* catalog = app.add_subcommand("catalog", "Algebra families and TP tables");
    catalog->require_subcommand(1);
    std::string list_json;
    auto* list = catalog->add_subcommand("list", "List families, parameters and TP variants");
    list->add_option("--json", list_json, "Write the full catalog dump");
    std::string fam, show_json;
    size_t n = 0;
    std::vector<std::string> kv;
    auto* show = catalog->add_subcommand("show", "Print one family instance");
    show->add_option("family", fam)->required();
    show->add_option("--n", n);
    show->add_option("--param", kv, "k=v, repeatable");
    show->add_option("--json", show_json, "Write the algebra JSON");

    auto* check = app.add_subcommand("check", "Axiom checks");
    check->require_subcommand(1);
    std::string lie_path;
    auto* lie = check->add_subcommand("lie", "Antisymmetry and Jacobi");
    lie->add_option("algebra", lie_path)->required();

    std::string hd_path, delta = "1/2", hd_json;
    auto* halfder = app.add_subcommand("halfder", "delta-derivation space");
    halfder->add_option("algebra", hd_path)->required();
    halfder->add_option("--delta", delta);
    halfder->add_option("--json", hd_json);

    std::string ts_path;
    bool constraints = false;
    auto* tspace = app.add_subcommand("tpa-space", "Linear space of products satisfying the transposed Leibniz rule");
    tspace->add_option("algebra", ts_path)->required();
    tspace->add_flag("--constraints", constraints, "Also print associativity constraints and their case split");

    std::string va, vp;
    auto* tverify = app.add_subcommand("tpa-verify", "Verify a product against a bracket");
    tverify->add_option("algebra", va)->required();
    tverify->add_option("product", vp)->required();

    std::string ns = "4..5", nr = "3..3", out;
    std::uint64_t seed = 1;
    auto* vpaper = app.add_subcommand("verify-paper", "Run the full verification matrix");
    vpaper->add_option("--n-s", ns);
    vpaper->add_option("--n-r", nr);
    vpaper->add_option("--seed", seed);
    vpaper->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);
    try {
        if (list->parsed()) return cmd_catalog_list(list_json);
        if (show->parsed()) return cmd_catalog_show(fam, n, kv, show_json);
        if (lie->parsed()) return cmd_check_lie(lie_path);
        if (halfder->parsed()) return cmd_halfder(hd_path, delta, hd_json);
        if (tspace->parsed()) return cmd_tpa_space(ts_path, constraints);
        if (tverify->parsed()) return cmd_tpa_verify(va, vp);
        if (vpaper->parsed()) return cmd_verify_paper(ns, nr, seed, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
