#include "tpalab/catalog.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tpalab {

namespace {

const std::vector<std::pair<Family, std::string>> kFamilyNames = {
    {Family::n_n1, "n_n1"},         {Family::Q_2n, "Q_2n"},         {Family::s1, "s1"},
    {Family::s2, "s2"},             {Family::s3, "s3"},             {Family::s4, "s4"},
    {Family::s_n2, "s_n2"},         {Family::r_lambda, "r_lambda"}, {Family::r_eps, "r_eps"},
    {Family::r_lambdas, "r_lambdas"}, {Family::r_2n2, "r_2n2"},
};

bool is_s_family(Family f) {
    return f == Family::n_n1 || f == Family::s1 || f == Family::s2 || f == Family::s3 || f == Family::s4 ||
           f == Family::s_n2;
}

// dimension of the nilradical
size_t nil_dim(Family f, size_t n) { return is_s_family(f) ? n : 2 * n; }

size_t extension_count(Family f) {
    switch (f) {
        case Family::n_n1:
        case Family::Q_2n: return 0;
        case Family::s_n2:
        case Family::r_2n2: return 2;
        default: return 1;
    }
}

Rational Q(long p, long q = 1) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

const Rational& get(const Params& p, const std::string& k) {
    auto it = p.find(k);
    if (it == p.end()) throw std::invalid_argument("missing parameter " + k);
    return it->second;
}

Rational get_or_zero(const Params& p, const std::string& k) {
    auto it = p.find(k);
    return it == p.end() ? Rational(0) : it->second;
}

std::string idx(const std::string& base, long i) { return base + std::to_string(i); }

void nilradical_n1(AlgebraTable& t, size_t n) {
    for (size_t i = 2; i <= n - 1; ++i) t.set(i, 1, i + 1, 1);
}

void nilradical_Q(AlgebraTable& t, size_t n) {
    size_t N = 2 * n;
    for (size_t i = 2; i <= N - 2; ++i) t.set(i, 1, i + 1, 1);
    for (size_t i = 2; i <= n; ++i) t.set(i, N + 1 - i, N, i % 2 == 0 ? 1 : -1);
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& [fam, name] : kFamilyNames)
        if (fam == f) return name;
    return "?";
}

Family parse_family(const std::string& s) {
    std::string valid;
    for (const auto& [fam, name] : kFamilyNames) {
        if (name == s) return fam;
        valid += (valid.empty() ? "" : ", ") + name;
    }
    throw std::invalid_argument("unknown family \"" + s + "\"; valid: " + valid);
}

bool has_Q_nilradical(Family f) { return !is_s_family(f); }

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& [fam, name] : kFamilyNames) out.push_back(fam);
    return out;
}

std::vector<std::string> param_names(Family f, size_t n) {
    switch (f) {
        case Family::s1: return {"beta"};
        case Family::s4: {
            std::vector<std::string> out;
            for (size_t i = 3; i + 1 <= n; ++i) out.push_back(idx("alpha", i));
            return out;
        }
        case Family::r_lambda: return {"lambda"};
        case Family::r_eps: return {"eps"};
        case Family::r_lambdas: {
            std::vector<std::string> out;
            for (size_t k = 5; k <= 2 * n - 1; k += 2) out.push_back(idx("lambda", k));
            return out;
        }
        default: return {};
    }
}

Params default_params(Family f, size_t n) {
    Params p;
    switch (f) {
        case Family::s1: p["beta"] = 7; break;
        case Family::s4:
            for (const auto& k : param_names(f, n)) p[k] = 1;
            break;
        case Family::r_lambda: p["lambda"] = 7; break;
        case Family::r_eps: p["eps"] = 1; break;
        case Family::r_lambdas:
            for (const auto& k : param_names(f, n)) p[k] = 0;
            if (!p.empty()) p.begin()->second = 1;
            break;
        default: break;
    }
    return p;
}

void validate(const FamilySpec& spec) {
    Family f = spec.family;
    std::string name = to_string(f);
    if (is_s_family(f) && f != Family::n_n1 && spec.n < 4)
        throw std::invalid_argument(name + ": requires n >= 4");
    if (f == Family::n_n1 && spec.n < 3) throw std::invalid_argument(name + ": requires n >= 3");
    if (!is_s_family(f) && spec.n < 3) throw std::invalid_argument(name + ": requires n >= 3");
    auto names = param_names(f, spec.n);
    for (const auto& k : names)
        if (!spec.params.count(k)) throw std::invalid_argument(name + ": missing parameter " + k);
    for (const auto& [k, v] : spec.params)
        if (std::find(names.begin(), names.end(), k) == names.end()) {
            std::string valid;
            for (const auto& nm : names) valid += (valid.empty() ? "" : ", ") + nm;
            throw std::invalid_argument(name + ": unknown parameter " + k + " (valid: " +
                                        (valid.empty() ? "none" : valid) + ")");
        }
    if (f == Family::r_eps) {
        const Rational& e = spec.params.at("eps");
        if (e != 1 && e != -1) throw std::invalid_argument(name + ": eps must be -1 or 1");
    }
}

std::vector<std::string> basis_names(Family f, size_t n) {
    std::vector<std::string> out;
    for (size_t i = 1; i <= nil_dim(f, n); ++i) out.push_back(idx("e", i));
    size_t ext = extension_count(f);
    if (ext == 1) out.push_back("x");
    if (ext == 2) {
        out.push_back("x1");
        out.push_back("x2");
    }
    return out;
}

AlgebraTable make_algebra(const FamilySpec& spec) {
    validate(spec);
    Family f = spec.family;
    size_t n = spec.n;
    const Params& p = spec.params;
    auto names = basis_names(f, n);
    size_t dim = names.size();
    std::string label = to_string(f) + "(n=" + std::to_string(n) + (p.empty() ? "" : ", " + params_to_string(p)) + ")";
    AlgebraTable t(dim, Symmetry::antisymmetric, label, names);
    size_t x = nil_dim(f, n) + 1;
    size_t N = 2 * n;

    switch (f) {
        case Family::n_n1: nilradical_n1(t, n); break;
        case Family::Q_2n: nilradical_Q(t, n); break;
        case Family::s1: {
            nilradical_n1(t, n);
            const Rational& beta = get(p, "beta");
            t.set(1, x, 1, 1);
            for (size_t i = 2; i <= n; ++i) t.set(i, x, i, Q(long(i) - 2) + beta);
            break;
        }
        case Family::s2:
            nilradical_n1(t, n);
            for (size_t i = 2; i <= n; ++i) t.set(i, x, i, 1);
            break;
        case Family::s3:
            nilradical_n1(t, n);
            t.set(1, x, 1, 1);
            t.set(1, x, 2, 1);
            for (size_t i = 2; i <= n; ++i) t.set(i, x, i, Q(long(i) - 1));
            break;
        case Family::s4:
            nilradical_n1(t, n);
            for (size_t i = 2; i <= n; ++i) {
                t.add(i, x, i, 1);
                for (size_t l = i + 2; l <= n; ++l) t.add(i, x, l, get(p, idx("alpha", long(l + 1 - i))));
            }
            break;
        case Family::s_n2:
            nilradical_n1(t, n);
            t.set(1, x, 1, 1);
            for (size_t i = 3; i <= n; ++i) t.set(i, x, i, Q(long(i) - 2));
            for (size_t i = 2; i <= n; ++i) t.set(i, x + 1, i, 1);
            break;
        case Family::r_lambda: {
            nilradical_Q(t, n);
            const Rational& lam = get(p, "lambda");
            t.set(1, x, 1, 1);
            for (size_t i = 2; i <= N - 1; ++i) t.set(i, x, i, Q(long(i) - 2) + lam);
            t.set(N, x, N, Q(long(N) - 3) + 2 * lam);
            break;
        }
        case Family::r_eps: {
            nilradical_Q(t, n);
            t.set(1, x, 1, 1);
            t.set(1, x, N, get(p, "eps"));
            for (size_t i = 2; i <= N - 1; ++i) t.set(i, x, i, Q(long(i) - long(n)));
            t.set(N, x, N, 1);
            break;
        }
        case Family::r_lambdas: {
            nilradical_Q(t, n);
            for (size_t i = 0; i + 6 <= N; ++i) {
                t.add(2 + i, x, 2 + i, 1);
                for (size_t k = 2; k <= (N - 2 - i) / 2; ++k)
                    t.add(2 + i, x, 2 * k + 1 + i, get(p, idx("lambda", long(2 * k + 1))));
            }
            for (size_t i = 1; i <= 3; ++i) t.set(N - i, x, N - i, 1);
            t.set(N, x, N, 2);
            break;
        }
        case Family::r_2n2:
            nilradical_Q(t, n);
            for (size_t i = 1; i <= N - 1; ++i) t.set(i, x, i, Q(long(i)));
            t.set(N, x, N, Q(long(N) + 1));
            for (size_t i = 2; i <= N - 1; ++i) t.set(i, x + 1, i, 1);
            t.set(N, x + 1, N, 2);
            break;
    }
    return t;
}

std::string params_to_string(const Params& p) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : p) {
        os << (first ? "" : ", ") << k << "=" << to_string(v);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// branch values

std::vector<Rational> special_values(Family f, size_t n) {
    std::vector<Rational> out;
    auto push = [&](const Rational& q) {
        if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    };
    long N = long(n);
    switch (f) {
        case Family::s1: push(1); push(2); push(N - 2); break;
        case Family::r_lambda:
            push(2 * N - 3); push(Q(5 - 2 * N, 2)); push(Q(3 - 2 * N, 2)); push(2 - N);
            break;
        case Family::r_eps: push(-1); push(1); break;
        default: break;
    }
    return out;
}

std::vector<Rational> generic_values(Family f, size_t n) {
    std::vector<Rational> pool{7, -5, Q(13, 3)}, excluded, out;
    long N = long(n);
    if (f == Family::s1) excluded = {1, 2, N - 2};
    else if (f == Family::r_lambda) excluded = {2 * N - 3, Q(5 - 2 * N, 2), Q(3 - 2 * N, 2)};
    else return {};
    for (const auto& q : pool)
        if (std::find(excluded.begin(), excluded.end(), q) == excluded.end()) out.push_back(q);
    return out;
}

std::optional<size_t> expected_halfderivation_dim(const FamilySpec& spec) {
    validate(spec);
    size_t n = spec.n;
    switch (spec.family) {
        case Family::s1: {
            const Rational& b = spec.params.at("beta");
            if (n == 4) return b == 2 ? 7 : 4;
            return (b == 2 || b == Q(long(n) - 2)) ? n + 1 : n;
        }
        case Family::s2:
        case Family::s3:
        case Family::s4: return n;
        case Family::s_n2: return 2;
        case Family::r_lambda: {
            const Rational& l = spec.params.at("lambda");
            if (l == Q(2 * long(n) - 3)) return 4;
            if (l == Q(5 - 2 * long(n), 2)) return 2 * n + 1;
            return 3;
        }
        case Family::r_eps:
        case Family::r_lambdas: return 3;
        case Family::r_2n2: return 2;
        default: return std::nullopt;
    }
}

std::optional<size_t> expected_tpa_space_dim(const FamilySpec& spec) {
    validate(spec);
    size_t n = spec.n;
    switch (spec.family) {
        case Family::s1: {
            const Rational& b = spec.params.at("beta");
            if (n >= 5 && b != 1 && b != 2 && b != Q(long(n) - 2)) return n - 1;
            return std::nullopt;
        }
        case Family::s2: return n - 1;
        case Family::s3: return n;
        case Family::s_n2: return 1;
        case Family::r_lambda: {
            const Rational& l = spec.params.at("lambda");
            if (l == Q(2 * long(n) - 3)) return 4;
            if (l == Q(5 - 2 * long(n), 2)) return 2 * n + 1;
            return 2;
        }
        case Family::r_eps: return 2;
        case Family::r_lambdas: return 3;
        case Family::r_2n2: return 1;
        default: return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// TP variants

namespace {

std::vector<std::string> range_names(const std::string& base, long lo, long hi) {
    std::vector<std::string> out;
    for (long i = lo; i <= hi; ++i) out.push_back(idx(base, i));
    return out;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::string lam_2n3(size_t n) { return "lambda=" + std::to_string(2 * n - 3); }

}  // namespace

std::vector<TPVariantInfo> tp_variants(Family f, size_t n) {
    long N = long(n);
    std::vector<TPVariantInfo> v;
    switch (f) {
        case Family::s1:
            if (n == 4) {
                v.push_back({"TP1", range_names("alpha", 1, 4), "beta=1"});
                v.push_back({"TP2", range_names("alpha", 1, 5), "beta=2"});
                v.push_back({"TP3", range_names("alpha", 1, 4), "beta=2"});
                v.push_back({"TP4", range_names("alpha", 1, 3), "beta=2"});
                v.push_back({"TP5", range_names("alpha", 1, 5), "beta=2"});
                v.push_back({"TP6", range_names("alpha", 1, 3), "beta!=1,2"});
            } else {
                std::string nb = "beta=n-2=" + std::to_string(n - 2);
                v.push_back({"TP1", cat(range_names("alpha", 3, N), {"beta3", "beta5"}), "beta=1"});
                v.push_back({"TP2", cat(range_names("alpha", 2, N), {"beta3", "beta5"}), "beta=2"});
                v.push_back({"TP3", cat(range_names("alpha", 5, N), range_names("beta", 1, 5)), nb});
                v.push_back({"TP3-corrected", cat(range_names("alpha", 5, N), range_names("beta", 2, 5)), nb, false,
                             true, "e1.x coefficient (n+t-5) and beta1=0"});
                v.push_back({"TP4", cat(range_names("alpha", 5, N), {"beta3", "beta4", "beta5"}), nb});
                v.push_back({"TP4-corrected", cat(range_names("alpha", 5, N), {"beta3", "beta4", "beta5"}), nb,
                             false, true, "e1.x carries (n-2)e3 in place of beta e4"});
                v.push_back({"TP5", cat(range_names("alpha", 4, N), {"beta3", "beta5"}), "beta!=1,2,n-2"});
            }
            break;
        case Family::s2: v.push_back({"TP", cat(range_names("alpha", 4, N), {"gamma1", "gamma2"}), "any"}); break;
        case Family::s3: v.push_back({"TP", cat(range_names("alpha", 3, N), {"gamma1", "gamma2"}), "any"}); break;
        case Family::s4: v.push_back({"TP", cat(range_names("beta", 4, N), {"gamma1", "gamma2"}), "any"}); break;
        case Family::s_n2: v.push_back({"TP", {}, "any"}); break;
        case Family::r_lambda: {
            std::string gen = "lambda!=2n-3,(5-2n)/2";
            v.push_back({"TP1", {}, gen});
            v.push_back({"TP2", {}, gen});
            v.push_back({"TP3", {}, "lambda=(3-2n)/2", true, false,
                         "listed as a second TP2 at lambda=(3-2n)/2; keyed TP3 here"});
            for (int k = 1; k <= 10; ++k) {
                std::vector<std::string> ps;
                if (k == 6 || k == 9) ps = {"alpha"};
                if (k == 10) ps = {"alpha", "beta"};
                v.push_back({"TP" + std::to_string(k) + "(2n-3)", ps, lam_2n3(n)});
            }
            std::string b52 = "lambda=(5-2n)/2";
            auto a = range_names("a", 5, 2 * N);
            v.push_back({"TP1((5-2n)/2)", cat(a, {"b2", "b3", "b4"}), b52, true, false,
                         "printed e_{2n-1}.x=-(4n+1)/4 e_{2n} breaks the displayed pattern"});
            v.push_back({"TP1((5-2n)/2)-pattern", cat(a, {"b2", "b3", "b4"}), b52, true, false,
                         "printed table with e_{2n-1}.x=(5-2n)/4 e_{2n} from the displayed pattern"});
            v.push_back({"TP1((5-2n)/2)-corrected", cat(a, {"b2", "b3", "b4"}), b52, false, true,
                         "pattern coefficient and x.x carries (3-2n)b3 e_{2n-1}"});
            v.push_back({"TP2((5-2n)/2)", cat(a, {"b1", "b2", "b3", "b4"}), b52});
            v.push_back({"TP2((5-2n)/2)-corrected", cat(a, {"b1", "b2", "b3", "b4"}), b52, false, true,
                         "(3-2n) factor on the b1 terms of e1.x, e3.x, x.x and on b3 in x.x"});
            break;
        }
        case Family::r_eps:
            v.push_back({"TP1", {}, "any"});
            v.push_back({"TP2", {}, "any"});
            break;
        case Family::r_lambdas:
            for (int k = 1; k <= 6; ++k)
                v.push_back({"TP" + std::to_string(k), k == 6 ? std::vector<std::string>{"alpha"}
                                                               : std::vector<std::string>{},
                             "any"});
            break;
        case Family::r_2n2: v.push_back({"TP", {}, "any"}); break;
        default: break;
    }
    return v;
}

TPVariantInfo tp_variant(Family f, size_t n, const std::string& key) {
    std::vector<TPVariantInfo> all = tp_variants(f, n);
    for (const auto& v : all)
        if (v.key == key) return v;
    std::string valid;
    for (const auto& v : all) valid += (valid.empty() ? "" : ", ") + v.key;
    throw std::invalid_argument("unknown variant \"" + key + "\" for " + to_string(f) + " at n=" + std::to_string(n) +
                                "; valid: " + (valid.empty() ? "none" : valid));
}

bool on_branch(const FamilySpec& spec, const std::string& key) {
    long n = long(spec.n);
    const TPVariantInfo& info = tp_variant(spec.family, spec.n, key);
    const std::string& br = info.branch;
    if (br == "any") return true;
    if (spec.family == Family::s1) {
        const Rational& b = spec.params.at("beta");
        if (br == "beta=1") return b == 1;
        if (br == "beta=2") return b == 2;
        if (br == "beta!=1,2") return b != 1 && b != 2;
        if (br == "beta!=1,2,n-2") return b != 1 && b != 2 && b != n - 2;
        return b == n - 2;
    }
    if (spec.family == Family::r_lambda) {
        const Rational& l = spec.params.at("lambda");
        if (br == "lambda!=2n-3,(5-2n)/2") return l != 2 * n - 3 && l != Q(5 - 2 * n, 2);
        if (br == "lambda=(3-2n)/2") return l == Q(3 - 2 * n, 2);
        if (br == "lambda=(5-2n)/2") return l == Q(5 - 2 * n, 2);
        return l == 2 * n - 3;
    }
    return true;
}

Params branch_params(Family f, size_t n, const std::string& key) {
    Params p = default_params(f, n);
    long N = long(n);
    std::string br = tp_variant(f, n, key).branch;
    if (f == Family::s1) {
        if (br == "beta=1") p["beta"] = 1;
        else if (br == "beta=2") p["beta"] = 2;
        else if (br.rfind("beta=n-2", 0) == 0) p["beta"] = N - 2;
        else p["beta"] = generic_values(f, n).front();
    }
    if (f == Family::r_lambda) {
        if (br == "lambda=(3-2n)/2") p["lambda"] = Q(3 - 2 * N, 2);
        else if (br == "lambda=(5-2n)/2") p["lambda"] = Q(5 - 2 * N, 2);
        else if (br == lam_2n3(n)) p["lambda"] = 2 * N - 3;
        else p["lambda"] = generic_values(f, n).front();
    }
    return p;
}

namespace {

struct Builder {
    CommutativeProduct p;
    const Params& q;
    Builder(const AlgebraTable& bracket, const std::string& label, const Params& params)
        : p(bracket.dim(), Symmetry::symmetric, label, bracket.basis_names()), q(params) {}
    void add(size_t i, size_t j, size_t k, const Rational& v) {
        if (v != 0) p.add(i, j, k, v);
    }
    Rational operator()(const std::string& name) const { return get(q, name); }
    Rational operator()(const std::string& base, long i) const { return get(q, idx(base, i)); }
};

void tp_s1_n4(Builder& B, const std::string& key, const Rational& beta) {
    const size_t x = 5;
    auto a = [&](long i) { return B("alpha", i); };
    if (key == "TP1") {
        B.add(1, 1, 3, a(1)); B.add(1, 1, 4, a(2));
        B.add(1, x, 3, a(2)); B.add(1, x, 4, a(3));
        B.add(x, x, 3, a(3)); B.add(x, x, 4, a(4));
    } else if (key == "TP2") {
        B.add(1, 1, 2, 1); B.add(1, 1, 3, a(1)); B.add(1, 1, 4, a(2));
        B.add(1, 2, 3, a(3)); B.add(1, 2, 4, Q(1, 2) * a(1) * a(3));
        B.add(1, 3, 4, Q(1, 2) * a(3));
        B.add(2, 2, 4, Q(1, 2) * a(3) * a(3));
        B.add(1, x, 1, a(3)); B.add(1, x, 2, a(1)); B.add(1, x, 3, 2 * a(2)); B.add(1, x, 4, a(4));
        B.add(3, x, 3, a(3)); B.add(3, x, 4, Q(1, 2) * a(1) * a(3));
        B.add(2, x, 2, a(3)); B.add(2, x, 3, a(1) * a(3)); B.add(2, x, 4, a(2) * a(3));
        B.add(4, x, 4, a(3));
        B.add(x, x, 1, a(1) * a(3)); B.add(x, x, 2, 2 * a(2)); B.add(x, x, 3, 2 * a(4));
        B.add(x, x, 4, a(5)); B.add(x, x, x, a(3));
    } else if (key == "TP3") {
        B.add(1, 1, 3, 1); B.add(1, 1, 4, a(1));
        B.add(1, 2, 4, a(2));
        B.add(1, x, 2, 1); B.add(1, x, 3, 2 * a(1)); B.add(1, x, 4, a(3));
        B.add(2, x, 3, 2 * a(2)); B.add(2, x, 4, 2 * a(1) * a(2));
        B.add(3, x, 4, a(2));
        B.add(x, x, 1, 2 * a(2)); B.add(x, x, 2, 2 * a(1)); B.add(x, x, 3, 2 * a(3)); B.add(x, x, 4, a(4));
    } else if (key == "TP4") {
        B.add(1, 1, 4, 1);
        B.add(1, x, 3, 2); B.add(1, x, 4, a(1));
        B.add(2, x, 4, a(2));
        B.add(x, x, 2, 2); B.add(x, x, 3, 2 * a(1)); B.add(x, x, 4, a(3));
    } else if (key == "TP5") {
        B.add(1, 2, 4, a(1)); B.add(2, 2, 4, a(2));
        B.add(1, x, 4, a(3));
        B.add(2, x, 3, 2 * a(1)); B.add(2, x, 4, a(4));
        B.add(3, x, 4, a(1));
        B.add(x, x, 1, 2 * a(1)); B.add(x, x, 3, 2 * a(3)); B.add(x, x, 4, a(5));
    } else if (key == "TP6") {
        B.add(1, 1, 4, a(1));
        B.add(1, x, 3, beta * a(1)); B.add(1, x, 4, a(2));
        B.add(x, x, 2, (beta - 1) * beta * a(1)); B.add(x, x, 3, beta * a(2)); B.add(x, x, 4, a(3));
    }
}

void tp_s1(Builder& B, size_t n, const std::string& key, const Rational& beta) {
    const size_t x = n + 1;
    long N = long(n);
    auto a = [&](long i) { return B("alpha", i); };
    auto b = [&](long i) { return B("beta", i); };
    if (key == "TP1") {
        for (long j = 3; j <= N; ++j) B.add(1, 1, j, a(j));
        for (long t = 2; t <= N - 1; ++t) B.add(1, x, t, Q(t - 2) * a(t + 1));
        B.add(1, x, n, b(3));
        for (long t = 2; t <= N - 2; ++t) B.add(x, x, t, Q((t - 2) * (t - 1)) * a(t + 2));
        B.add(x, x, n - 1, Q(N - 3) * b(3));
        B.add(x, x, n, b(5));
    } else if (key == "TP2") {
        for (long j = 2; j <= N; ++j) B.add(1, 1, j, a(j));
        for (long t = 2; t <= N - 1; ++t) B.add(1, x, t, Q(t - 1) * a(t + 1));
        B.add(1, x, n, b(3));
        for (long t = 2; t <= N - 2; ++t) B.add(x, x, t, Q(t * t - t) * a(t + 2));
        B.add(x, x, n - 1, Q(N - 2) * b(3));
        B.add(x, x, n, b(5));
    } else if (key == "TP3" || key == "TP3-corrected") {
        bool fixed = key == "TP3-corrected";
        for (long j = 5; j <= N; ++j) B.add(1, 1, j, a(j));
        if (!fixed) B.add(1, 2, n, b(1));
        B.add(2, 2, n, b(2));
        for (long t = 4; t <= N - 1; ++t) B.add(1, x, t, Q(fixed ? N + t - 5 : N + t - 3) * a(t + 1));
        B.add(1, x, n, b(3));
        B.add(2, x, n, b(4));
        for (long t = 3; t <= N - 2; ++t) B.add(x, x, t, Q((N + t - 5) * (N + t - 4)) * a(t + 2));
        B.add(x, x, n - 1, Q(2 * N - 6) * b(3));
        B.add(x, x, n, b(5));
    } else if (key == "TP4" || key == "TP4-corrected") {
        bool fixed = key == "TP4-corrected";
        B.add(1, 1, 4, 1);
        for (long j = 5; j <= N; ++j) B.add(1, 1, j, a(j));
        if (fixed) B.add(1, x, 3, Q(N - 2));
        else B.add(1, x, 4, beta);
        for (long t = 4; t <= N - 1; ++t) B.add(1, x, t, Q(N + t - 5) * a(t + 1));
        B.add(1, x, n, b(3));
        B.add(2, x, n, b(4));
        B.add(x, x, 2, Q((N - 3) * (N - 2)));
        for (long t = 3; t <= N - 2; ++t) B.add(x, x, t, Q((N + t - 5) * (N + t - 4)) * a(t + 2));
        B.add(x, x, n - 1, Q(2 * N - 6) * b(3));
        B.add(x, x, n, b(5));
    } else if (key == "TP5") {
        for (long j = 4; j <= N; ++j) B.add(1, 1, j, a(j));
        for (long t = 3; t <= N - 1; ++t) B.add(1, x, t, (Q(t - 3) + beta) * a(t + 1));
        B.add(1, x, n, b(3));
        for (long t = 2; t <= N - 2; ++t) B.add(x, x, t, (Q(t - 3) + beta) * (Q(t - 2) + beta) * a(t + 2));
        B.add(x, x, n - 1, (Q(N - 4) + beta) * b(3));
        B.add(x, x, n, b(5));
    }
}

void tp_s4(Builder& B, size_t n, const Params& alg) {
    const size_t x = n + 1;
    long N = long(n);
    auto A = [&](long r) { return get_or_zero(alg, idx("alpha", r)); };
    auto Bt = [&](long t) { return t >= 4 && t <= N ? B("beta", t) : Rational(0); };
    for (long t = 4; t <= N; ++t) B.add(1, 1, t, Bt(t));
    for (long t = 3; t <= N - 1; ++t) {
        Rational c = Bt(t + 1);
        for (long r = 3; r <= t - 2; ++r) c += A(r) * Bt(t - r + 2);
        B.add(1, x, t, c);
    }
    B.add(1, x, n, B("gamma1"));
    for (long i = 2; i <= N - 2; ++i) {
        Rational c = Bt(i + 2);
        for (long j = 3; j <= i - 1; ++j) {
            Rational inner = 2 * Bt(i - j + 3);
            for (long r = 3; r <= i - j; ++r) inner += A(r) * Bt(i - j - r + 4);
            c += A(j) * inner;
        }
        B.add(x, x, i, c);
    }
    Rational c = B("gamma1");
    for (long i = 3; i <= N - 2; ++i) {
        Rational inner = Bt(N - i + 2);
        for (long r = 3; r <= N - i - 1; ++r) inner += A(r) * Bt(N - i - r + 3);
        c += A(i) * inner;
    }
    B.add(x, x, n - 1, c);
    B.add(x, x, n, B("gamma2"));
}

void tp_r52(Builder& B, size_t n, const std::string& key) {
    long N2 = 2 * long(n);
    const size_t N = 2 * n, x = N + 1;
    long nn = long(n);
    auto a = [&](long t) { return B("a", t); };
    auto b = [&](long t) { return B("b", t); };
    bool tp1 = key.rfind("TP1", 0) == 0;
    bool corrected = key.find("corrected") != std::string::npos;
    bool pattern = corrected || key.find("pattern") != std::string::npos;
    if (tp1) {
        // a4 is normalized to 1; range terms that would involve a4 are the separately printed lines
        B.add(1, 1, 4, 1);
        for (long t = 5; t <= N2; ++t) B.add(1, 1, t, a(t));
        for (long j = 3; j <= N2 - 3; ++j) B.add(1, j, N, Q(j % 2 == 1 ? 1 : -1, 2) * a(N2 + 2 - j));
        B.add(1, N - 2, N, Q(-1, 2));
        B.add(1, x, 3, Q(5 - N2, 2));
        for (long t = 4; t <= N2 - 2; ++t) B.add(1, x, t, Q(2 * t - N2 - 1, 2) * a(t + 1));
        B.add(1, x, N, b(2));
        B.add(2, x, N, b(3));
        for (long j = 4; j <= N2 - 2; ++j)
            B.add(j, x, N, Q((j % 2 == 1 ? 1 : -1) * (N2 + 3 - 2 * j), 4) * a(N2 + 3 - j));
        B.add(N - 1, x, N, pattern ? Q(5 - N2, 4) : Q(-(4 * nn + 1), 4));
        B.add(x, x, 2, Q((3 - N2) * (5 - N2), 4));
        for (long t = 3; t <= N2 - 3; ++t) B.add(x, x, t, Q((2 * t - N2 - 1) * (2 * t - N2 + 1), 4) * a(t + 2));
        B.add(x, x, N - 1, (corrected ? Q(3 - N2) : Q(1)) * b(3));
        B.add(x, x, N, b(4));
    } else {
        Rational f = corrected ? Q(3 - N2) : Q(1);
        for (long t = 5; t <= N2; ++t) B.add(1, 1, t, a(t));
        B.add(1, 2, N, b(1));
        for (long j = 3; j <= N2 - 3; ++j) B.add(1, j, N, Q(j % 2 == 1 ? 1 : -1, 2) * a(N2 + 2 - j));
        for (long t = 4; t <= N2 - 2; ++t) B.add(1, x, t, Q(2 * t - N2 - 1, 2) * a(t + 1));
        B.add(1, x, N - 1, f * b(1));
        B.add(1, x, N, b(2));
        B.add(2, x, N, b(3));
        B.add(3, x, N, Q(1, 2) * f * b(1));
        for (long j = 4; j <= N2 - 2; ++j)
            B.add(j, x, N, Q((j % 2 == 1 ? 1 : -1) * (N2 + 3 - 2 * j), 4) * a(N2 + 3 - j));
        for (long t = 3; t <= N2 - 3; ++t) B.add(x, x, t, Q((2 * t - N2 - 1) * (2 * t - N2 + 1), 4) * a(t + 2));
        B.add(x, x, N - 2, Q(N2 - 5, 2) * f * b(1));
        B.add(x, x, N - 1, f * b(3));
        B.add(x, x, N, b(4));
    }
}

void tp_r2n3(Builder& B, size_t n, int k) {
    const size_t N = 2 * n, x = N + 1;
    Rational c = Q(3 - 2 * long(n));
    auto al = [&] { return B("alpha"); };
    switch (k) {
        case 1: B.add(x, x, N, 1); break;
        case 2: B.add(2, x, N, 1); B.add(x, x, N - 1, c); break;
        case 3: B.add(2, x, N, 1); B.add(x, x, N - 1, c); B.add(x, x, N, 1); break;
        case 4: B.add(2, 2, N, 1); B.add(2, x, N - 1, c); break;
        case 5: B.add(2, 2, N, 1); B.add(2, x, N - 1, c); B.add(x, x, N, 1); break;
        case 6:
            B.add(2, 2, N, 1); B.add(2, x, N - 1, c); B.add(2, x, N, 1);
            B.add(x, x, N - 1, c); B.add(x, x, N, al());
            break;
        case 7: B.add(2, 2, N - 1, 1); break;
        case 8: B.add(2, 2, N - 1, 1); B.add(x, x, N, 1); break;
        case 9:
            B.add(2, 2, N - 1, 1); B.add(2, x, N, 1);
            B.add(x, x, N - 1, c); B.add(x, x, N, al());
            break;
        case 10:
            B.add(2, 2, N - 1, 1); B.add(2, 2, N, 1);
            B.add(2, x, N - 1, c); B.add(2, x, N, al());
            B.add(x, x, N - 1, c * al()); B.add(x, x, N, B("beta"));
            break;
    }
}

}  // namespace

CommutativeProduct make_tp_product(const TPSpec& spec) {
    const FamilySpec& fs = spec.family;
    AlgebraTable bracket = make_algebra(fs);
    const TPVariantInfo& info = tp_variant(fs.family, fs.n, spec.variant);
    for (const auto& k : info.params)
        if (!spec.params.count(k)) throw std::invalid_argument(spec.variant + ": missing parameter " + k);
    for (const auto& [k, v] : spec.params)
        if (std::find(info.params.begin(), info.params.end(), k) == info.params.end())
            throw std::invalid_argument(spec.variant + ": unknown parameter " + k);
    if (!on_branch(fs, spec.variant))
        throw std::invalid_argument(spec.variant + " of " + to_string(fs.family) + " requires " + info.branch);

    std::string label = spec.variant + "[" + bracket.name() + (spec.params.empty() ? "" : "; " + params_to_string(spec.params)) + "]";
    Builder B(bracket, label, spec.params);
    size_t n = fs.n;
    const size_t N = 2 * n;
    Rational c = Q(3 - 2 * long(n));
    switch (fs.family) {
        case Family::s1:
            if (n == 4) tp_s1_n4(B, spec.variant, fs.params.at("beta"));
            else tp_s1(B, n, spec.variant, fs.params.at("beta"));
            break;
        case Family::s2: {
            size_t x = n + 1;
            long Nn = long(n);
            for (long t = 4; t <= Nn; ++t) B.add(1, 1, t, B("alpha", t));
            for (long t = 3; t <= Nn - 1; ++t) B.add(1, x, t, B("alpha", t + 1));
            B.add(1, x, n, B("gamma1"));
            for (long t = 2; t <= Nn - 2; ++t) B.add(x, x, t, B("alpha", t + 2));
            B.add(x, x, n - 1, B("gamma1"));
            B.add(x, x, n, B("gamma2"));
            break;
        }
        case Family::s3: {
            size_t x = n + 1;
            long Nn = long(n);
            for (long t = 3; t <= Nn; ++t) B.add(1, 1, t, B("alpha", t));
            for (long t = 3; t <= Nn - 1; ++t) B.add(1, x, t, Q(t - 2) * B("alpha", t + 1));
            B.add(1, x, n, B("gamma1"));
            for (long t = 3; t <= Nn - 2; ++t) B.add(x, x, t, Q((t - 2) * (t - 1)) * B("alpha", t + 2));
            B.add(x, x, n - 1, Q(Nn - 3) * B("gamma1"));
            B.add(x, x, n, B("gamma2"));
            break;
        }
        case Family::s4: tp_s4(B, n, fs.params); break;
        case Family::s_n2: {
            size_t x1 = n + 1, x2 = n + 2;
            B.add(x1, x1, n, Q((long(n) - 2) * (long(n) - 2)));
            B.add(x2, x1, n, Q(long(n) - 2));
            B.add(x2, x2, n, 1);
            break;
        }
        case Family::r_lambda: {
            size_t x = N + 1;
            const std::string& key = spec.variant;
            if (key == "TP1") B.add(x, x, N, 1);
            else if (key == "TP2" || key == "TP3") {
                B.add(2, x, N, 1);
                B.add(x, x, N - 1, c);
                if (key == "TP3") B.add(x, x, N, 1);
            } else if (key.find("(2n-3)") != std::string::npos) {
                tp_r2n3(B, n, std::stoi(key.substr(2)));
            } else {
                tp_r52(B, n, key);
            }
            break;
        }
        case Family::r_eps: {
            size_t x = N + 1;
            if (spec.variant == "TP1") B.add(x, x, N, 1);
            else {
                B.add(2, x, N, 1);
                B.add(x, x, N - 1, c);
            }
            break;
        }
        case Family::r_lambdas: {
            size_t x = N + 1;
            int k = std::stoi(spec.variant.substr(2));
            bool e22 = k >= 4, e2x = k == 2 || k == 3 || k == 6, xx = k == 1 || k == 3 || k == 5 || k == 6;
            if (e22) B.add(2, 2, N, 1);
            if (e2x) B.add(2, x, N, 1);
            if (xx) B.add(x, x, N, k == 6 ? B("alpha") : Rational(1));
            break;
        }
        case Family::r_2n2: {
            size_t x1 = N + 1, x2 = N + 2;
            long m = 2 * long(n) + 1;
            B.add(x1, x1, N, Q(m * m));
            B.add(x1, x2, N, Q(2 * m));
            B.add(x2, x2, N, 4);
            break;
        }
        default: throw std::invalid_argument("no TP tables for " + to_string(fs.family));
    }
    return B.p;
}

std::vector<CatalogEntry> list_catalog(size_t n_s, size_t n_r) {
    std::vector<CatalogEntry> out;
    auto desc = [](Family f) -> std::string {
        switch (f) {
            case Family::n_n1: return "naturally graded filiform n_{n,1}";
            case Family::Q_2n: return "naturally graded filiform Q_{2n}";
            case Family::s1: return "s^1_{n,1}(beta), nilradical n_{n,1}";
            case Family::s2: return "s^2_{n,1}, nilradical n_{n,1}";
            case Family::s3: return "s^3_{n,1}, nilradical n_{n,1}";
            case Family::s4: return "s^4_{n,1}(alpha_3..alpha_{n-1}), nilradical n_{n,1}";
            case Family::s_n2: return "s_{n,2}, codimension two over n_{n,1}";
            case Family::r_lambda: return "r_{2n+1}(lambda), nilradical Q_{2n}";
            case Family::r_eps: return "r_{2n+1}(2-n,eps), nilradical Q_{2n}";
            case Family::r_lambdas: return "r_{2n+1}(lambda_5..lambda_{2n-1}), nilradical Q_{2n}";
            case Family::r_2n2: return "r_{2n+2}, codimension two over Q_{2n}";
        }
        return "";
    };
    for (Family f : all_families()) {
        size_t n = is_s_family(f) ? n_s : n_r;
        out.push_back({f, desc(f), param_names(f, n), tp_variants(f, n)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// normalization maps

namespace {

Rational root_or_throw(const Rational& q, long k, const std::string& what) {
    auto r = rational_root(q, static_cast<unsigned long>(k));
    if (!r) throw std::invalid_argument("irrational entry: " + std::to_string(k) + "-th root of " + to_string(q) + " in " + what);
    return *r;
}

struct MapBuilder {
    LinearMap m;
    explicit MapBuilder(size_t d) : m(LinearMap::identity(d)) {}
    // phi(e_j) = sum of terms
    void image(size_t j, std::vector<std::pair<size_t, Rational>> terms) {
        for (size_t i = 0; i < m.rows(); ++i) m.at(i, j - 1) = 0;
        for (auto& [i, v] : terms) m.at(i - 1, j - 1) += v;
    }
};

Rational raw_get(const Params& raw, const std::string& k) {
    auto it = raw.find(k);
    return it == raw.end() ? Rational(0) : it->second;
}

void check_raw_keys(const Params& raw, const std::vector<std::string>& allowed) {
    for (const auto& [k, v] : raw)
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
            throw std::invalid_argument("unknown raw parameter " + k);
}

}  // namespace

CommutativeProduct raw_product(const FamilySpec& spec, const Params& raw) {
    AlgebraTable b = make_algebra(spec);
    size_t n = spec.n, N = 2 * n;
    CommutativeProduct p(b.dim(), Symmetry::symmetric, "raw[" + b.name() + "; " + params_to_string(raw) + "]",
                         b.basis_names());
    auto put = [&](size_t i, size_t j, size_t k, const Rational& v) {
        if (v != 0) p.add(i, j, k, v);
    };
    switch (spec.family) {
        case Family::r_lambda:
        case Family::r_eps: {
            if (spec.family == Family::r_lambda) {
                const Rational& l = spec.params.at("lambda");
                if (l == Q(2 * long(n) - 3) || l == Q(5 - 2 * long(n), 2))
                    throw std::invalid_argument("raw normalization form only covers lambda != 2n-3, (5-2n)/2");
            }
            check_raw_keys(raw, {"alpha", "beta"});
            Rational a = raw_get(raw, "alpha"), be = raw_get(raw, "beta");
            size_t x = N + 1;
            put(2, x, N, a);
            put(x, x, N - 1, Q(3 - 2 * long(n)) * a);
            put(x, x, N, be);
            break;
        }
        case Family::r_lambdas: {
            check_raw_keys(raw, {"alpha", "beta", "gamma"});
            size_t x = N + 1;
            put(2, 2, N, raw_get(raw, "alpha"));
            put(2, x, N, raw_get(raw, "beta"));
            put(x, x, N, raw_get(raw, "gamma"));
            break;
        }
        case Family::r_2n2: {
            check_raw_keys(raw, {"alpha"});
            Rational a = raw_get(raw, "alpha");
            long m = 2 * long(n) + 1;
            put(N + 1, N + 1, N, Q(m * m) * a);
            put(N + 1, N + 2, N, Q(2 * m) * a);
            put(N + 2, N + 2, N, 4 * a);
            break;
        }
        default: throw std::invalid_argument("no explicit normalization map for " + to_string(spec.family));
    }
    return p;
}

LinearMap normalization_map(const TPSpec& target, const Params& raw) {
    const FamilySpec& fs = target.family;
    validate(fs);
    size_t n = fs.n, N = 2 * n;
    long nn = long(n);
    size_t dim = basis_names(fs.family, n).size();
    MapBuilder M(dim);
    const std::string& key = target.variant;
    auto bad_case = [&](const std::string& why) {
        return std::invalid_argument("raw parameters do not fall in the case leading to " + key + ": " + why);
    };
    Rational a = raw_get(raw, "alpha"), b = raw_get(raw, "beta"), g = raw_get(raw, "gamma");

    switch (fs.family) {
        case Family::r_lambda: {
            check_raw_keys(raw, {"alpha", "beta"});
            const Rational& lam = fs.params.at("lambda");
            bool special = lam == Q(3 - 2 * nn, 2);
            size_t x = N + 1;
            if (key == "TP1") {
                if (a != 0 || b == 0) throw bad_case("needs alpha=0, beta!=0");
                Rational s = root_or_throw(1 / b, 2, "sqrt(beta^-1)");
                for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, s}});
                M.image(N, {{N, 1 / b}});
            } else if (key == "TP2" && special) {
                if (a == 0 || b != 0) throw bad_case("needs alpha!=0, beta=0 at lambda=(3-2n)/2");
                for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, 1 / a}});
                M.image(N, {{N, 1 / (a * a)}});
            } else if (key == "TP2") {
                if (a == 0) throw bad_case("needs alpha!=0");
                Rational den = 2 * lam - 3 + 2 * nn;
                Rational ia2 = 1 / (a * a);
                M.image(x, {{x, 1}, {2, ia2 * b * lam / den}});
                M.image(1, {{1, 1}, {3, ia2 * b / den}});
                for (size_t i = 2; i <= N - 2; ++i) M.image(i, {{i, 1 / a}});
                M.image(N - 1, {{N - 1, 1 / a}, {N, ia2 / a * b / den}});
                M.image(N, {{N, ia2}});
            } else if (key == "TP3") {
                if (!special || a == 0 || b == 0) throw bad_case("needs lambda=(3-2n)/2, alpha!=0, beta!=0");
                long k = 2 * nn - 3;
                M.image(1, {{1, root_or_throw(rpow(a, -2) * b, k, "phi(e1)")}});
                for (size_t i = 2; i <= N - 1; ++i) {
                    long ii = long(i);
                    M.image(i, {{i, root_or_throw(rpow(a, 2 * nn - 1 - ii) * rpow(b, ii + 1 - 2 * nn), k, "phi(e_i)")}});
                }
                M.image(N, {{N, 1 / b}});
            } else {
                throw std::invalid_argument("no normalization map for " + key);
            }
            break;
        }
        case Family::r_eps: {
            check_raw_keys(raw, {"alpha", "beta"});
            size_t x = N + 1;
            if (key == "TP1") {
                if (a != 0 || b == 0) throw bad_case("needs alpha=0, beta!=0");
                M.image(1, {{1, 1 / b}});
                for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, rpow(b, nn - long(i))}});
                M.image(N, {{N, 1 / b}});
            } else if (key == "TP2") {
                if (a == 0) throw bad_case("needs alpha!=0");
                long k = nn - 1;
                Rational r1 = root_or_throw(1 / a, k, "(n-1)-th root of alpha^-1");
                for (size_t i = 2; i <= N - 2; ++i)
                    M.image(i, {{i, root_or_throw(rpow(a, nn - long(i)), k, "phi(e_i)")}});
                M.image(1, {{1, r1}, {3, b * r1 * r1}});
                M.image(x, {{x, 1}, {2, -Q(nn - 2) * b * r1}});
                // printed form; see the notes on this term
                M.image(N - 1, {{N - 1, 1 / a}, {N, -b / (a * a)}});
                M.image(N, {{N, r1}});
            } else {
                throw std::invalid_argument("no normalization map for " + key);
            }
            break;
        }
        case Family::r_lambdas: {
            check_raw_keys(raw, {"alpha", "beta", "gamma"});
            long k = 2 * nn - 3;
            int c = key.size() == 3 && key.rfind("TP", 0) == 0 ? key[2] - '0' : 0;
            bool az = a == 0, bz = b == 0, gz = g == 0;
            switch (c) {
                case 1:
                    if (!az || !bz || gz) throw bad_case("needs alpha=beta=0, gamma!=0");
                    for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, root_or_throw(1 / g, 2, "sqrt(gamma^-1)")}});
                    M.image(N, {{N, 1 / g}});
                    break;
                case 2:
                    if (!az || bz || !gz) throw bad_case("needs alpha=0, beta!=0, gamma=0");
                    for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, 1 / b}});
                    M.image(N, {{N, 1 / (b * b)}});
                    break;
                case 3: {
                    if (!az || bz || gz) throw bad_case("needs alpha=0, beta!=0, gamma!=0");
                    Rational base = g / (b * b);
                    M.image(1, {{1, root_or_throw(base, k, "phi(e1)")}});
                    for (size_t i = 2; i <= N - 1; ++i)
                        M.image(i, {{i, b / g * root_or_throw(rpow(base, long(i) - 2), k, "phi(e_i)")}});
                    M.image(N, {{N, 1 / g}});
                    break;
                }
                case 4:
                    if (az || !bz || !gz) throw bad_case("needs alpha!=0, beta=gamma=0");
                    M.image(1, {{1, root_or_throw(1 / a, k, "phi(e1)")}});
                    for (size_t i = 2; i <= N - 1; ++i)
                        M.image(i, {{i, root_or_throw(rpow(a, 2 - long(i)), k, "phi(e_i)")}});
                    M.image(N, {{N, 1 / a}});
                    break;
                case 5:
                    if (az || !bz || gz) throw bad_case("needs alpha!=0, beta=0, gamma!=0");
                    M.image(1, {{1, root_or_throw(1 / a, k, "phi(e1)")}});
                    for (size_t i = 2; i <= N - 1; ++i)
                        M.image(i, {{i, root_or_throw(rpow(a, 2 * nn - 2 * long(i) + 1) * rpow(g, 3 - 2 * nn), 2 * k,
                                                      "phi(e_i)")}});
                    M.image(N, {{N, 1 / g}});
                    break;
                case 6:
                    if (az || bz) throw bad_case("needs alpha!=0, beta!=0");
                    M.image(1, {{1, root_or_throw(1 / a, k, "phi(e1)")}});
                    for (size_t i = 2; i <= N - 1; ++i)
                        M.image(i, {{i, root_or_throw(rpow(a, 2 * nn - long(i) - 1), k, "phi(e_i)") / b}});
                    M.image(N, {{N, a / (b * b)}});
                    break;
                default: throw std::invalid_argument("no normalization map for " + key);
            }
            break;
        }
        case Family::r_2n2: {
            check_raw_keys(raw, {"alpha"});
            if (key != "TP") throw std::invalid_argument("no normalization map for " + key);
            if (a == 0) throw bad_case("needs alpha!=0");
            Rational s = root_or_throw(1 / a, 2, "sqrt(alpha^-1)");
            for (size_t i = 2; i <= N - 1; ++i) M.image(i, {{i, s}});
            M.image(N, {{N, 1 / a}});
            break;
        }
        default: throw std::invalid_argument("no explicit normalization map for " + to_string(fs.family));
    }
    if (!inverse(M.m)) throw std::logic_error("normalization map is singular");
    return M.m;
}

std::vector<NormalizationCase> normalization_cases(size_t n) {
    long nn = long(n);
    std::vector<NormalizationCase> out;
    auto rl = [&](const Rational& lam) { return FamilySpec{Family::r_lambda, n, {{"lambda", lam}}}; };
    Rational one = 1, spec_l = Q(3 - 2 * nn, 2);
    Rational p2n3 = rpow(2, 2 * nn - 3);

    out.push_back({"r_lambda case 1", {rl(one), "TP1", {}}, {{"alpha", 0}, {"beta", 4}}});
    out.push_back({"r_lambda case 4", {rl(one), "TP2", {}}, {{"alpha", 1}, {"beta", 0}}});
    out.push_back({"r_lambda case 4", {rl(one), "TP2", {}}, {{"alpha", 2}, {"beta", 5}}});
    out.push_back({"r_lambda case 1", {rl(spec_l), "TP1", {}}, {{"alpha", 0}, {"beta", 9}}});
    out.push_back({"r_lambda case 2", {rl(spec_l), "TP2", {}}, {{"alpha", 2}, {"beta", 0}}});
    out.push_back({"r_lambda case 3", {rl(spec_l), "TP3", {}}, {{"alpha", 1}, {"beta", p2n3}}});

    for (int eps : {1, -1}) {
        FamilySpec fe{Family::r_eps, n, {{"eps", eps}}};
        Rational a = rpow(2, nn - 1);
        out.push_back({"r_eps case 1", {fe, "TP1", {}}, {{"alpha", 0}, {"beta", 3}}});
        out.push_back({"r_eps case 2", {fe, "TP2", {}}, {{"alpha", a}, {"beta", 0}}});
        out.push_back({"r_eps case 2", {fe, "TP2", {}}, {{"alpha", a}, {"beta", 3}}});
    }

    for (int lead : {0, 1}) {
        Params lp = default_params(Family::r_lambdas, n);
        for (auto& [k, v] : lp) v = 0;
        if (!lp.empty()) lp.begin()->second = lead;
        FamilySpec fl{Family::r_lambdas, n, lp};
        out.push_back({"r_lambdas case 1", {fl, "TP1", {}}, {{"alpha", 0}, {"beta", 0}, {"gamma", 4}}});
        out.push_back({"r_lambdas case 2", {fl, "TP2", {}}, {{"alpha", 0}, {"beta", 3}, {"gamma", 0}}});
        out.push_back({"r_lambdas case 3", {fl, "TP3", {}}, {{"alpha", 0}, {"beta", 1}, {"gamma", p2n3}}});
        out.push_back({"r_lambdas case 4", {fl, "TP4", {}}, {{"alpha", p2n3}, {"beta", 0}, {"gamma", 0}}});
        out.push_back({"r_lambdas case 5", {fl, "TP5", {}},
                       {{"alpha", rpow(2, 4 * nn - 6)}, {"beta", 0}, {"gamma", 4}}});
        Rational a6 = p2n3, b6 = 3, g6 = 5;
        out.push_back({"r_lambdas case 6", {fl, "TP6", {{"alpha", g6 * a6 / (b6 * b6)}}},
                       {{"alpha", a6}, {"beta", b6}, {"gamma", g6}}});
    }
    out.push_back({"r_2n2", {{Family::r_2n2, n, {}}, "TP", {}}, {{"alpha", 9}}});
    return out;
}

}  // namespace tpalab

namespace tpalab {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5, 4), den(1, 3);
    long p = num(rng);
    if (p >= 0) ++p;
    Rational r(p, den(rng));
    r.canonicalize();
    return r;
}

std::vector<Params> parameter_grid(Family f, size_t n, std::mt19937_64& rng) {
    std::vector<Params> out;
    auto single = [&](const std::string& key, const std::vector<Rational>& vals) {
        for (const auto& v : vals) out.push_back({{key, v}});
    };
    switch (f) {
        case Family::s1:
            single("beta", generic_values(f, n));
            single("beta", special_values(f, n));
            break;
        case Family::r_lambda:
            single("lambda", generic_values(f, n));
            single("lambda", special_values(f, n));
            break;
        case Family::r_eps: single("eps", special_values(f, n)); break;
        case Family::s4:
        case Family::r_lambdas: {
            Params zero = default_params(f, n), draw = zero;
            for (auto& [k, v] : zero) v = 0;
            for (auto& [k, v] : draw) v = random_rational(rng);
            out.push_back(default_params(f, n));
            out.push_back(zero);
            out.push_back(draw);
            break;
        }
        default: out.push_back({}); break;
    }
    return out;
}

Params random_tp_params(const TPVariantInfo& v, std::mt19937_64& rng) {
    Params p;
    for (const auto& k : v.params) p[k] = random_rational(rng);
    return p;
}

}  // namespace tpalab
