#include "tpalab/tpa.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tpalab {

namespace {

void check_pair(const AlgebraTable& b, const CommutativeProduct& p) {
    if (b.dim() != p.dim()) throw std::invalid_argument("bracket and product dimensions differ");
    if (b.symmetry() != Symmetry::antisymmetric) throw std::invalid_argument("bracket must be antisymmetric");
}

RVector add(RVector a, const RVector& b, const Rational& s = 1) {
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] != 0) a[i] += s * b[i];
    return a;
}

}  // namespace

CommutativeProduct ProductSpace::combine(const std::vector<Rational>& c) const {
    if (c.size() != basis.size()) throw std::invalid_argument("coefficient count differs from space dimension");
    CommutativeProduct out(bracket.dim(), Symmetry::symmetric, "", bracket.basis_names());
    for (size_t a = 0; a < basis.size(); ++a) {
        if (c[a] == 0) continue;
        for (const auto& e : basis[a].entries()) out.add(e.i, e.j, e.k, c[a] * e.value);
    }
    return out;
}

size_t ProductSpace::coordinate(const std::string& name) const {
    auto it = std::find(coordinates.begin(), coordinates.end(), name);
    return it == coordinates.end() ? std::string::npos : static_cast<size_t>(it - coordinates.begin());
}

void QuadraticConstraint::canonicalize() {
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    if (terms.empty()) return;
    mpz_class l = 1, g = 0;
    for (const auto& [m, c] : terms) l = lcm(l, c.get_den());
    for (const auto& [m, c] : terms) g = gcd(g, mpz_class(c.get_num() * (l / c.get_den())));
    Rational scale(l, g);
    if (terms.begin()->second < 0) scale = -scale;
    for (auto& [m, c] : terms) c *= scale;
}

std::string QuadraticConstraint::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational a = c;
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        if (a < 0) a = -a;
        bool unit = a == 1 && !m.empty();
        if (!unit) os << tpalab::to_string(a);
        for (size_t i = 0; i < m.size(); ++i) {
            if (!unit || i > 0) os << "*";
            os << (m[i] < names.size() ? names[m[i]] : "c" + std::to_string(m[i]));
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

ResidualList transposed_leibniz_residual(const AlgebraTable& b, const CommutativeProduct& p) {
    check_pair(b, p);
    size_t d = b.dim();
    ResidualList out;
    for (size_t z = 1; z <= d; ++z) {
        RVector ez = unit_vector(d, z - 1);
        for (size_t x = 1; x <= d; ++x)
            for (size_t y = x + 1; y <= d; ++y) {
                RVector r = apply(p, ez, b.product(x, y));
                for (auto& q : r) q *= 2;
                r = add(r, apply(b, p.product(z, x), unit_vector(d, y - 1)), -1);
                r = add(r, apply(b, unit_vector(d, x - 1), p.product(z, y)), -1);
                if (!is_zero(r)) out.push_back({{z, x, y}, r});
            }
    }
    return out;
}

ResidualList leibniz_residual(const AlgebraTable& b, const CommutativeProduct& p) {
    check_pair(b, p);
    size_t d = b.dim();
    ResidualList out;
    for (size_t x = 1; x <= d; ++x) {
        RVector ex = unit_vector(d, x - 1);
        for (size_t y = 1; y <= d; ++y)
            for (size_t z = y; z <= d; ++z) {
                // [x, y.z] - [x,y].z - y.[x,z]
                RVector r = apply(b, ex, p.product(y, z));
                r = add(r, apply(p, b.product(x, y), unit_vector(d, z - 1)), -1);
                r = add(r, apply(p, unit_vector(d, y - 1), b.product(x, z)), -1);
                if (!is_zero(r)) out.push_back({{x, y, z}, r});
            }
    }
    return out;
}

ResidualList mixed_triviality_residual(const AlgebraTable& b, const CommutativeProduct& p) {
    check_pair(b, p);
    size_t d = b.dim();
    ResidualList out;
    for (size_t x = 1; x <= d; ++x)
        for (size_t y = 1; y <= d; ++y)
            for (size_t z = 1; z <= d; ++z) {
                RVector f1 = apply(p, unit_vector(d, x - 1), b.product(y, z));
                if (!is_zero(f1)) out.push_back({{x, y, z, 1}, f1});
                RVector f2 = apply(b, p.product(x, y), unit_vector(d, z - 1));
                if (!is_zero(f2)) out.push_back({{x, y, z, 2}, f2});
            }
    return out;
}

bool is_poisson(const AlgebraTable& b, const CommutativeProduct& p) { return leibniz_residual(b, p).empty(); }

LinearMap multiplication_operator(const CommutativeProduct& p, const Element& z) {
    size_t d = p.dim();
    LinearMap m(d, d);
    for (size_t j = 0; j < d; ++j) {
        RVector v = apply(p, z, unit_vector(d, j));
        for (size_t i = 0; i < d; ++i) m.at(i, j) = v[i];
    }
    return m;
}

VerificationReport verify_tpa(const AlgebraTable& b, const CommutativeProduct& p) {
    check_pair(b, p);
    VerificationReport r;
    r.commutative = commutativity_residual(p);
    r.associative = associativity_residual(p);
    r.transposed_leibniz = transposed_leibniz_residual(b, p);
    r.leibniz = leibniz_residual(b, p);
    r.mixed = mixed_triviality_residual(b, p);
    r.is_tpa = r.commutative.empty() && r.associative.empty() && r.transposed_leibniz.empty();
    r.is_poisson = r.leibniz.empty();
    r.is_both = r.is_tpa && r.is_poisson;
    r.is_trivial = p.is_zero();

    // the transposed Leibniz rule holds iff every z.(-) is a 1/2-derivation (for commutative p)
    if (r.commutative.empty()) {
        bool all_half = true;
        for (size_t z = 0; z < b.dim() && all_half; ++z)
            all_half = is_delta_derivation(b, multiplication_operator(p, unit_vector(b.dim(), z)), Rational(1, 2))
                           .empty();
        if (all_half != r.transposed_leibniz.empty())
            throw std::logic_error("transposed Leibniz check disagrees with the 1/2-derivation check");
    }
    return r;
}

size_t tpa_unknown(size_t dim, size_t i, size_t j, size_t k) {
    if (i > j) std::swap(i, j);
    // position of (i,j) when pairs are listed (dim,dim), (dim-1,dim), (dim-1,dim-1), ...
    size_t before = 0;
    for (size_t a = dim; a > i; --a) before += dim - a + 1;
    size_t pos = before + (dim - j);
    return pos * dim + (k - 1);
}

namespace {

template <class Sink>
void tpa_equations(const AlgebraTable& b, Sink&& sink) {
    size_t d = b.dim();
    for (size_t z = 1; z <= d; ++z)
        for (size_t x = 1; x <= d; ++x)
            for (size_t y = x + 1; y <= d; ++y)
                for (size_t k = 1; k <= d; ++k) {
                    std::map<size_t, Rational> row;
                    for (size_t q = 1; q <= d; ++q) {
                        const Rational& c = b.coeff(x, y, q);
                        if (c != 0) row[tpa_unknown(d, z, q, k)] += 2 * c;
                    }
                    for (size_t s = 1; s <= d; ++s) {
                        const Rational& u = b.coeff(s, y, k);
                        if (u != 0) row[tpa_unknown(d, z, x, s)] -= u;
                        const Rational& v = b.coeff(x, s, k);
                        if (v != 0) row[tpa_unknown(d, z, y, s)] -= v;
                    }
                    sink(row);
                }
}

}  // namespace

RMatrix tpa_linear_system(const AlgebraTable& b) {
    size_t d = b.dim();
    size_t n = d * d * (d + 1) / 2;
    RMatrix m(0, 0);
    tpa_equations(b, [&](const std::map<size_t, Rational>& row) {
        RVector r(n);
        for (const auto& [c, v] : row) r[c] = v;
        m.push_row(r);
    });
    if (m.rows() == 0) m = RMatrix(0, n);
    return m;
}

ProductSpace tpa_linear_space(const AlgebraTable& b) {
    if (b.symmetry() != Symmetry::antisymmetric) throw std::invalid_argument("bracket must be antisymmetric");
    size_t d = b.dim();
    SparseSystem sys(d * d * (d + 1) / 2);
    tpa_equations(b, [&](const std::map<size_t, Rational>& row) { sys.add_row(row); });

    // invert the unknown numbering once
    std::vector<std::array<size_t, 3>> owner(sys.cols());
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i; j <= d; ++j)
            for (size_t k = 1; k <= d; ++k) owner[tpa_unknown(d, i, j, k)] = {i, j, k};

    ProductSpace space{b, {}, {}};
    const auto& names = b.basis_names();
    auto free = sys.free_columns();
    auto kernel = sys.kernel_basis();
    for (size_t f = 0; f < free.size(); ++f) {
        auto [fi, fj, fk] = owner[free[f]];
        std::string coord = names[fi - 1] + "." + names[fj - 1] + "[" + names[fk - 1] + "]";
        CommutativeProduct p(d, Symmetry::symmetric, coord, names);
        for (size_t c = 0; c < kernel[f].size(); ++c)
            if (kernel[f][c] != 0) {
                auto [i, j, k] = owner[c];
                p.set(i, j, k, kernel[f][c]);
            }
        space.basis.push_back(std::move(p));
        space.coordinates.push_back(coord);
    }
    return space;
}

std::vector<QuadraticConstraint> associativity_constraints(const ProductSpace& space) {
    size_t m = space.basis.size();
    size_t d = space.bracket.dim();
    if (m == 0) return {};
    // prod[a][(i,j)] = P_a(e_i, e_j)
    std::vector<std::vector<RVector>> prod(m, std::vector<RVector>(d * d));
    for (size_t a = 0; a < m; ++a)
        for (size_t i = 1; i <= d; ++i)
            for (size_t j = 1; j <= d; ++j) prod[a][(i - 1) * d + (j - 1)] = space.basis[a].product(i, j);

    std::set<QuadraticConstraint> found;
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 1; j <= d; ++j)
            for (size_t k = 1; k <= d; ++k) {
                std::vector<QuadraticConstraint> polys(d);
                for (size_t a = 0; a < m; ++a)
                    for (size_t bb = 0; bb < m; ++bb) {
                        // P_a(P_b(e_i,e_j), e_k) - P_a(e_i, P_b(e_j,e_k))
                        const RVector& ij = prod[bb][(i - 1) * d + (j - 1)];
                        const RVector& jk = prod[bb][(j - 1) * d + (k - 1)];
                        RVector r(d);
                        for (size_t s = 1; s <= d; ++s) {
                            if (ij[s - 1] != 0) r = add(r, prod[a][(s - 1) * d + (k - 1)], ij[s - 1]);
                            if (jk[s - 1] != 0) r = add(r, prod[a][(i - 1) * d + (s - 1)], -jk[s - 1]);
                        }
                        Monomial mono{std::min(a, bb), std::max(a, bb)};
                        for (size_t l = 0; l < d; ++l)
                            if (r[l] != 0) polys[l].terms[mono] += r[l];
                    }
                for (auto& q : polys) {
                    q.canonicalize();
                    if (!q.terms.empty()) found.insert(q);
                }
            }
    return {found.begin(), found.end()};
}

std::vector<CaseComponent> case_split_solve(const std::vector<QuadraticConstraint>& constraints, size_t max_vars) {
    std::set<size_t> var_set;
    for (const auto& c : constraints)
        for (const auto& [mono, v] : c.terms) var_set.insert(mono.begin(), mono.end());
    std::vector<size_t> vars(var_set.begin(), var_set.end());
    if (vars.size() > max_vars)
        throw TooManyVariables("case split over " + std::to_string(vars.size()) + " variables exceeds the bound of " +
                               std::to_string(max_vars));

    struct Pattern {
        unsigned long mask;
        std::vector<QuadraticConstraint> residual;
    };
    std::vector<Pattern> resolved, unresolved;
    size_t nv = vars.size();
    for (unsigned long mask = 0; mask < (1ul << nv); ++mask) {
        std::set<size_t> zero;
        for (size_t b = 0; b < nv; ++b)
            if (mask & (1ul << b)) zero.insert(vars[b]);
        bool contradiction = false;
        std::set<QuadraticConstraint> residual;
        for (const auto& c : constraints) {
            QuadraticConstraint r;
            for (const auto& [mono, v] : c.terms) {
                bool dead = std::any_of(mono.begin(), mono.end(), [&](size_t x) { return zero.count(x); });
                if (!dead) r.terms[mono] = v;
            }
            if (r.terms.empty()) continue;
            // a lone monomial in nonzero variables (or a nonzero constant) cannot vanish
            if (r.terms.size() == 1) {
                contradiction = true;
                break;
            }
            r.canonicalize();
            residual.insert(r);
        }
        if (contradiction) continue;
        if (residual.empty())
            resolved.push_back({mask, {}});
        else
            unresolved.push_back({mask, {residual.begin(), residual.end()}});
    }

    auto subset = [](unsigned long a, unsigned long b) { return (a & b) == a; };
    std::vector<Pattern> minimal;
    for (const auto& p : resolved) {
        bool has_smaller = std::any_of(resolved.begin(), resolved.end(),
                                       [&](const Pattern& q) { return q.mask != p.mask && subset(q.mask, p.mask); });
        if (!has_smaller) minimal.push_back(p);
    }
    for (const auto& p : unresolved) {
        bool covered = std::any_of(minimal.begin(), minimal.end(), [&](const Pattern& q) { return subset(q.mask, p.mask); });
        if (!covered) minimal.push_back(p);
    }

    std::vector<CaseComponent> out;
    for (const auto& p : minimal) {
        CaseComponent c;
        for (size_t b = 0; b < nv; ++b)
            if (p.mask & (1ul << b)) c.forced_zero.push_back(vars[b]);
        c.residual = p.residual;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const CaseComponent& a, const CaseComponent& b) {
        if (a.forced_zero.size() != b.forced_zero.size()) return a.forced_zero.size() < b.forced_zero.size();
        if (a.forced_zero != b.forced_zero) return a.forced_zero < b.forced_zero;
        return a.residual < b.residual;
    });
    return out;
}

}  // namespace tpalab
