#include "tpalab/derivations.hpp"

#include <map>
#include <stdexcept>

namespace tpalab {

namespace {

void require_antisymmetric(const AlgebraTable& t) {
    if (t.symmetry() != Symmetry::antisymmetric)
        throw std::invalid_argument("bracket table must be antisymmetric");
}

// phi([e_i,e_j])_k - delta([phi e_i, e_j]_k + [e_i, phi e_j]_k), as sparse row
std::map<size_t, Rational> equation(const AlgebraTable& t, const Rational& delta, size_t i, size_t j,
                                    size_t k) {
    size_t d = t.dim();
    std::map<size_t, Rational> row;
    for (size_t l = 1; l <= d; ++l) {
        const Rational& c = t.coeff(i, j, l);
        if (c != 0) row[derivation_unknown(d, k, l)] += c;
    }
    for (size_t p = 1; p <= d; ++p) {
        const Rational& a = t.coeff(p, j, k);
        if (a != 0) row[derivation_unknown(d, p, i)] -= delta * a;
        const Rational& b = t.coeff(i, p, k);
        if (b != 0) row[derivation_unknown(d, p, j)] -= delta * b;
    }
    return row;
}

}  // namespace

LinearMap unknowns_to_map(const RVector& v, size_t dim) {
    LinearMap m(dim, dim);
    for (size_t q = 1; q <= dim; ++q)
        for (size_t p = 1; p <= dim; ++p) m.at(p - 1, q - 1) = v[derivation_unknown(dim, p, q)];
    return m;
}

RMatrix delta_derivation_system(const AlgebraTable& t, const Rational& delta) {
    require_antisymmetric(t);
    size_t d = t.dim();
    size_t pairs = d * (d - (d > 0 ? 1 : 0)) / 2;
    RMatrix m(pairs * d, d * d);
    size_t r = 0;
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i + 1; j <= d; ++j)
            for (size_t k = 1; k <= d; ++k, ++r)
                for (const auto& [c, v] : equation(t, delta, i, j, k)) m.at(r, c) = v;
    return m;
}

DerivationSpace delta_derivation_space(const AlgebraTable& t, const Rational& delta) {
    require_antisymmetric(t);
    size_t d = t.dim();
    SparseSystem sys(d * d);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i + 1; j <= d; ++j)
            for (size_t k = 1; k <= d; ++k) sys.add_row(equation(t, delta, i, j, k));
    DerivationSpace out{t, delta, {}};
    for (const auto& v : sys.kernel_basis()) out.basis.push_back(unknowns_to_map(v, d));
    return out;
}

ResidualList is_delta_derivation(const AlgebraTable& t, const LinearMap& phi, const Rational& delta) {
    size_t d = t.dim();
    if (phi.rows() != d || phi.cols() != d) throw std::invalid_argument("map dimension mismatch");
    ResidualList out;
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i + 1; j <= d; ++j) {
            RVector lhs = phi * t.product(i, j);
            RVector a = apply(t, phi.col(i - 1), unit_vector(d, j - 1));
            RVector b = apply(t, unit_vector(d, i - 1), phi.col(j - 1));
            for (size_t k = 0; k < d; ++k) lhs[k] -= delta * (a[k] + b[k]);
            if (!is_zero(lhs)) out.push_back({{i, j}, lhs});
        }
    return out;
}

ResidualList invariance_report(const DerivationSpace& space) {
    if (space.delta != Rational(1, 2)) throw std::invalid_argument("invariance_report needs delta = 1/2");
    const AlgebraTable& t = space.algebra;
    Subspace der = derived_subalgebra(t);
    Subspace cen = center(t);
    ResidualList out;
    for (size_t b = 0; b < space.basis.size(); ++b) {
        const LinearMap& phi = space.basis[b];
        // indices: (basis map, 1 = derived subalgebra / 2 = center, generator)
        for (size_t v = 0; v < der.size(); ++v) {
            RVector img = phi * der[v];
            if (!in_span(der, img)) out.push_back({{b + 1, 1, v + 1}, img});
        }
        for (size_t v = 0; v < cen.size(); ++v) {
            RVector img = phi * cen[v];
            if (!in_span(cen, img)) out.push_back({{b + 1, 2, v + 1}, img});
        }
    }
    return out;
}

}  // namespace tpalab
