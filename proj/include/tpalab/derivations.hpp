#pragma once

#include "tpalab/algebra.hpp"

namespace tpalab {

struct DerivationSpace {
    AlgebraTable algebra;
    Rational delta;
    std::vector<LinearMap> basis;
    size_t dimension() const { return basis.size(); }
};

// column of the unknown phi_{pq} (coefficient of e_p in phi(e_q)), 1-based p, q
inline size_t derivation_unknown(size_t dim, size_t p, size_t q) { return (q - 1) * dim + (p - 1); }

RMatrix delta_derivation_system(const AlgebraTable& t, const Rational& delta);
DerivationSpace delta_derivation_space(const AlgebraTable& t, const Rational& delta);
ResidualList is_delta_derivation(const AlgebraTable& t, const LinearMap& phi, const Rational& delta);
ResidualList invariance_report(const DerivationSpace& space);

LinearMap unknowns_to_map(const RVector& v, size_t dim);

}  // namespace tpalab
