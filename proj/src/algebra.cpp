#include "tpalab/algebra.hpp"

#include <stdexcept>

namespace tpalab {

std::string to_string(Symmetry s) {
    switch (s) {
        case Symmetry::antisymmetric: return "antisymmetric";
        case Symmetry::symmetric: return "symmetric";
        case Symmetry::none: return "none";
    }
    return "none";
}

Symmetry parse_symmetry(const std::string& s) {
    if (s == "antisymmetric") return Symmetry::antisymmetric;
    if (s == "symmetric") return Symmetry::symmetric;
    if (s == "none") return Symmetry::none;
    throw std::invalid_argument("unknown symmetry \"" + s + "\" (antisymmetric, symmetric, none)");
}

AlgebraTable::AlgebraTable(size_t dim, Symmetry sym, std::string name, std::vector<std::string> basis)
    : dim_(dim), sym_(sym), name_(std::move(name)), basis_(std::move(basis)), c_(dim * dim * dim) {
    if (basis_.empty())
        for (size_t i = 1; i <= dim; ++i) basis_.push_back("e" + std::to_string(i));
    if (basis_.size() != dim) throw std::invalid_argument("basis name count differs from dim");
}

void AlgebraTable::check_index(size_t i, size_t j, size_t k) const {
    if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
        throw std::out_of_range("basis index out of range 1.." + std::to_string(dim_));
}

void AlgebraTable::set(size_t i, size_t j, size_t k, const Rational& v) {
    check_index(i, j, k);
    if (sym_ == Symmetry::antisymmetric) {
        if (i == j) {
            if (v != 0) throw std::invalid_argument("antisymmetric table: nonzero diagonal entry");
            return;
        }
        raw(i, j, k) = v;
        raw(j, i, k) = -v;
    } else if (sym_ == Symmetry::symmetric) {
        raw(i, j, k) = v;
        raw(j, i, k) = v;
    } else {
        raw(i, j, k) = v;
    }
}

void AlgebraTable::add(size_t i, size_t j, size_t k, const Rational& v) {
    check_index(i, j, k);
    set(i, j, k, coeff(i, j, k) + v);
}

RVector AlgebraTable::product(size_t i, size_t j) const {
    RVector v(dim_);
    for (size_t k = 1; k <= dim_; ++k) v[k - 1] = coeff(i, j, k);
    return v;
}

bool AlgebraTable::is_zero() const {
    for (const auto& q : c_)
        if (q != 0) return false;
    return true;
}

std::vector<Entry> AlgebraTable::entries() const {
    std::vector<Entry> out;
    for (size_t i = 1; i <= dim_; ++i)
        for (size_t j = 1; j <= dim_; ++j) {
            if (sym_ == Symmetry::antisymmetric && j <= i) continue;
            if (sym_ == Symmetry::symmetric && j < i) continue;
            for (size_t k = 1; k <= dim_; ++k)
                if (coeff(i, j, k) != 0) out.push_back({i, j, k, coeff(i, j, k)});
        }
    return out;
}

Element apply(const AlgebraTable& t, const Element& x, const Element& y) {
    size_t d = t.dim();
    if (x.size() != d || y.size() != d) throw std::invalid_argument("element dimension mismatch");
    Element out(d);
    for (size_t i = 0; i < d; ++i) {
        if (x[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) {
            if (y[j] == 0) continue;
            Rational s = x[i] * y[j];
            for (size_t k = 0; k < d; ++k) {
                const Rational& c = t.coeff(i + 1, j + 1, k + 1);
                if (c != 0) out[k] += s * c;
            }
        }
    }
    return out;
}

ResidualList antisymmetry_residual(const AlgebraTable& t) {
    ResidualList out;
    size_t d = t.dim();
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i; j <= d; ++j) {
            RVector r(d);
            for (size_t k = 1; k <= d; ++k) r[k - 1] = t.coeff(i, j, k) + t.coeff(j, i, k);
            if (!is_zero(r)) out.push_back({{i, j}, r});
        }
    return out;
}

ResidualList jacobi_residual(const AlgebraTable& t) {
    ResidualList out;
    size_t d = t.dim();
    auto e = [d](size_t i) { return unit_vector(d, i - 1); };
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i + 1; j <= d; ++j)
            for (size_t k = j + 1; k <= d; ++k) {
                RVector a = apply(t, t.product(i, j), e(k));
                RVector b = apply(t, t.product(j, k), e(i));
                RVector c = apply(t, t.product(k, i), e(j));
                for (size_t l = 0; l < d; ++l) a[l] += b[l] + c[l];
                if (!is_zero(a)) out.push_back({{i, j, k}, a});
            }
    return out;
}

ResidualList commutativity_residual(const AlgebraTable& t) {
    ResidualList out;
    size_t d = t.dim();
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = i + 1; j <= d; ++j) {
            RVector r(d);
            for (size_t k = 1; k <= d; ++k) r[k - 1] = t.coeff(i, j, k) - t.coeff(j, i, k);
            if (!is_zero(r)) out.push_back({{i, j}, r});
        }
    return out;
}

ResidualList associativity_residual(const AlgebraTable& t) {
    ResidualList out;
    size_t d = t.dim();
    std::vector<RVector> prod(d * d);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 1; j <= d; ++j) prod[(i - 1) * d + (j - 1)] = t.product(i, j);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 1; j <= d; ++j)
            for (size_t k = 1; k <= d; ++k) {
                // (e_i e_j) e_k - e_i (e_j e_k)
                RVector r(d);
                const RVector& ij = prod[(i - 1) * d + (j - 1)];
                const RVector& jk = prod[(j - 1) * d + (k - 1)];
                for (size_t l = 1; l <= d; ++l) {
                    if (ij[l - 1] != 0)
                        for (size_t m = 1; m <= d; ++m) r[m - 1] += ij[l - 1] * t.coeff(l, k, m);
                    if (jk[l - 1] != 0)
                        for (size_t m = 1; m <= d; ++m) r[m - 1] -= jk[l - 1] * t.coeff(i, l, m);
                }
                if (!is_zero(r)) out.push_back({{i, j, k}, r});
            }
    return out;
}

bool lie_axioms_hold(const AlgebraTable& t) {
    return antisymmetry_residual(t).empty() && jacobi_residual(t).empty();
}

AlgebraTable transport(const AlgebraTable& t, const LinearMap& g) {
    size_t d = t.dim();
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("map dimension mismatch");
    auto ginv = inverse(g);
    if (!ginv) throw std::invalid_argument("not a basis change");
    AlgebraTable out(d, t.symmetry(), t.name(), t.basis_names());
    std::vector<RVector> pre(d);
    for (size_t j = 0; j < d; ++j) pre[j] = ginv->col(j);
    for (size_t i = 1; i <= d; ++i)
        for (size_t j = 1; j <= d; ++j) {
            if (t.symmetry() == Symmetry::antisymmetric && j <= i) continue;
            if (t.symmetry() == Symmetry::symmetric && j < i) continue;
            RVector v = g * apply(t, pre[i - 1], pre[j - 1]);
            for (size_t k = 1; k <= d; ++k)
                if (v[k - 1] != 0) out.set(i, j, k, v[k - 1]);
        }
    return out;
}

bool is_bracket_automorphism(const AlgebraTable& bracket, const LinearMap& g) {
    if (!inverse(g)) return false;
    return transport(bracket, g) == bracket;
}

namespace {

Subspace row_space(const std::vector<RVector>& gens) {
    if (gens.empty()) return {};
    RMatrix m(0, 0);
    for (const auto& g : gens) m.push_row(g);
    RrefResult r = rref(m);
    Subspace out;
    for (size_t i = 0; i < r.rank; ++i) out.push_back(r.matrix.row(i));
    return out;
}

}  // namespace

bool in_span(const Subspace& basis, const RVector& v) {
    if (is_zero(v)) return true;
    if (basis.empty()) return false;
    RMatrix m(0, 0);
    for (const auto& b : basis) m.push_row(b);
    size_t r0 = rank(m);
    m.push_row(v);
    return rank(m) == r0;
}

Subspace derived_subalgebra(const AlgebraTable& t) {
    std::vector<RVector> gens;
    for (size_t i = 1; i <= t.dim(); ++i)
        for (size_t j = i + 1; j <= t.dim(); ++j) {
            RVector v = t.product(i, j);
            if (!is_zero(v)) gens.push_back(std::move(v));
        }
    return row_space(gens);
}

std::vector<size_t> lower_central_series(const AlgebraTable& t) {
    size_t d = t.dim();
    Subspace cur;
    for (size_t i = 0; i < d; ++i) cur.push_back(unit_vector(d, i));
    std::vector<size_t> dims{d};
    while (true) {
        std::vector<RVector> gens;
        for (const auto& v : cur)
            for (size_t j = 0; j < d; ++j) {
                RVector w = apply(t, v, unit_vector(d, j));
                if (!is_zero(w)) gens.push_back(std::move(w));
            }
        Subspace next = row_space(gens);
        if (next.size() == cur.size()) break;
        dims.push_back(next.size());
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return dims;
}

bool is_filiform(const AlgebraTable& t) {
    size_t n = t.dim();
    auto lcs = lower_central_series(t);
    if (lcs.back() != 0) return false;
    for (size_t i = 2; i <= n; ++i) {
        size_t got = i - 1 < lcs.size() ? lcs[i - 1] : 0;
        if (got != n - i) return false;
    }
    return true;
}

Subspace center(const AlgebraTable& t) {
    size_t d = t.dim();
    RMatrix m(d * d, d);
    for (size_t j = 1; j <= d; ++j)
        for (size_t k = 1; k <= d; ++k)
            for (size_t a = 1; a <= d; ++a) m.at((j - 1) * d + (k - 1), a - 1) = t.coeff(a, j, k);
    return kernel_basis(m);
}

}  // namespace tpalab
