#pragma once

#include "tpalab/linalg.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace tpalab {

enum class Symmetry { antisymmetric, symmetric, none };

std::string to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& s);

using Element = RVector;
using LinearMap = RMatrix;  // image of e_j is column j
using Subspace = std::vector<RVector>;

struct Violation {
    std::vector<size_t> indices;  // 1-based basis indices
    RVector residual;
};
using ResidualList = std::vector<Violation>;

struct Entry {
    size_t i, j, k;  // 1-based
    Rational value;
};

// Structure constants of a bilinear product. Indices are 1-based in the API.
// For antisymmetric and symmetric tables only the pairs i<=j are free; the
// mirrored entries are synthesized, so the declared symmetry cannot be broken.
class AlgebraTable {
public:
    AlgebraTable() = default;
    AlgebraTable(size_t dim, Symmetry sym, std::string name = "",
                 std::vector<std::string> basis = {});

    size_t dim() const { return dim_; }
    Symmetry symmetry() const { return sym_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<std::string>& basis_names() const { return basis_; }

    // e_i o e_j gets coefficient v on e_k
    void set(size_t i, size_t j, size_t k, const Rational& v);
    void add(size_t i, size_t j, size_t k, const Rational& v);

    const Rational& coeff(size_t i, size_t j, size_t k) const {
        return c_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)];
    }
    RVector product(size_t i, size_t j) const;
    bool is_zero() const;

    // stored entries: i<j (antisymmetric), i<=j (symmetric), all (none)
    std::vector<Entry> entries() const;

    bool operator==(const AlgebraTable& o) const {
        return dim_ == o.dim_ && sym_ == o.sym_ && c_ == o.c_;
    }

private:
    Rational& raw(size_t i, size_t j, size_t k) { return c_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)]; }
    void check_index(size_t i, size_t j, size_t k) const;

    size_t dim_ = 0;
    Symmetry sym_ = Symmetry::none;
    std::string name_;
    std::vector<std::string> basis_;
    std::vector<Rational> c_;
};

Element apply(const AlgebraTable& t, const Element& x, const Element& y);

ResidualList antisymmetry_residual(const AlgebraTable& t);
ResidualList jacobi_residual(const AlgebraTable& t);
ResidualList commutativity_residual(const AlgebraTable& t);
ResidualList associativity_residual(const AlgebraTable& t);
bool lie_axioms_hold(const AlgebraTable& t);

// t'(x,y) = g(t(g^-1 x, g^-1 y)); throws "not a basis change" on singular g
AlgebraTable transport(const AlgebraTable& t, const LinearMap& g);
bool is_bracket_automorphism(const AlgebraTable& bracket, const LinearMap& g);

std::vector<size_t> lower_central_series(const AlgebraTable& t);
bool is_filiform(const AlgebraTable& t);
Subspace center(const AlgebraTable& t);
Subspace derived_subalgebra(const AlgebraTable& t);

// membership of v in span(basis)
bool in_span(const Subspace& basis, const RVector& v);

}  // namespace tpalab
