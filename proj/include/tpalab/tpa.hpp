#pragma once

#include "tpalab/derivations.hpp"

#include <map>
#include <string>
#include <vector>

namespace tpalab {

using CommutativeProduct = AlgebraTable;  // symmetry = symmetric

struct ProductSpace {
    AlgebraTable bracket;
    std::vector<CommutativeProduct> basis;
    std::vector<std::string> coordinates;  // name of the free unknown behind each basis product
    size_t dimension() const { return basis.size(); }
    // sum of c_a * basis_a
    CommutativeProduct combine(const std::vector<Rational>& c) const;
    // coordinate index by name, or npos
    size_t coordinate(const std::string& name) const;
};

// monomial = sorted coordinate indices, degree <= 2
using Monomial = std::vector<size_t>;

struct QuadraticConstraint {
    std::map<Monomial, Rational> terms;
    bool operator==(const QuadraticConstraint&) const = default;
    bool operator<(const QuadraticConstraint& o) const { return terms < o.terms; }
    // integer coefficients, gcd 1, leading monomial positive
    void canonicalize();
    std::string to_string(const std::vector<std::string>& names) const;
};

struct CaseComponent {
    std::vector<size_t> forced_zero;  // variable indices
    std::vector<QuadraticConstraint> residual;
    bool unresolved() const { return !residual.empty(); }
};

struct VerificationReport {
    ResidualList commutative, associative, transposed_leibniz, leibniz, mixed;
    bool is_tpa = false, is_poisson = false, is_both = false, is_trivial = false;
};

ResidualList transposed_leibniz_residual(const AlgebraTable& b, const CommutativeProduct& p);
ResidualList leibniz_residual(const AlgebraTable& b, const CommutativeProduct& p);
// indices (x,y,z,form): form 1 is x.[y,z], form 2 is [x.y,z]
ResidualList mixed_triviality_residual(const AlgebraTable& b, const CommutativeProduct& p);
bool is_poisson(const AlgebraTable& b, const CommutativeProduct& p);
VerificationReport verify_tpa(const AlgebraTable& b, const CommutativeProduct& p);

// left multiplication z.(-) as a linear map
LinearMap multiplication_operator(const CommutativeProduct& p, const Element& z);

// column of the symmetric unknown m_{ij}^k: pairs i<=j in descending order, k ascending
size_t tpa_unknown(size_t dim, size_t i, size_t j, size_t k);
RMatrix tpa_linear_system(const AlgebraTable& b);
ProductSpace tpa_linear_space(const AlgebraTable& b);

std::vector<QuadraticConstraint> associativity_constraints(const ProductSpace& space);

struct TooManyVariables : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
std::vector<CaseComponent> case_split_solve(const std::vector<QuadraticConstraint>& constraints,
                                            size_t max_vars = 12);

}  // namespace tpalab
