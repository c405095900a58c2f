#include "oracle.hpp"
#include "tpalab/catalog.hpp"

#include <doctest.h>

using namespace tpalab;

namespace {
const Rational half(1, 2);

bool contains_identity(const DerivationSpace& s) {
    size_t d = s.algebra.dim();
    std::vector<RVector> vecs;
    for (const auto& m : s.basis) {
        RVector v;
        for (size_t q = 0; q < d; ++q)
            for (size_t p = 0; p < d; ++p) v.push_back(m.at(p, q));
        vecs.push_back(v);
    }
    RVector id;
    for (size_t q = 0; q < d; ++q)
        for (size_t p = 0; p < d; ++p) id.push_back(p == q ? 1 : 0);
    return in_span(vecs, id);
}
}  // namespace

TEST_CASE("delta derivation system examples") {
    AlgebraTable ab(2, Symmetry::antisymmetric);
    RMatrix sys = delta_derivation_system(ab, half);
    CHECK(sys.cols() == 4);
    CHECK(rank(sys) == 0);

    AlgebraTable t(2, Symmetry::antisymmetric);
    t.set(1, 2, 2, 1);
    CHECK(kernel_basis(delta_derivation_system(t, half)).size() == 2);

    AlgebraTable s52 = make_algebra({Family::s_n2, 5, {}});
    RMatrix big = delta_derivation_system(s52, half);
    CHECK(big.cols() == 49);
    CHECK(kernel_basis(big).size() == 2);
}

TEST_CASE("unknown ordering is column-major") {
    CHECK(derivation_unknown(3, 1, 1) == 0);
    CHECK(derivation_unknown(3, 2, 1) == 1);
    CHECK(derivation_unknown(3, 1, 2) == 3);
}

TEST_CASE("delta derivation space examples") {
    for (size_t n = 1; n <= 3; ++n)
        CHECK(delta_derivation_space(AlgebraTable(n, Symmetry::antisymmetric), half).dimension() == n * n);
    CHECK(delta_derivation_space(make_algebra({Family::s2, 5, {}}), half).dimension() == 5);
    CHECK(delta_derivation_space(make_algebra({Family::r_2n2, 3, {}}), half).dimension() == 2);
    // delta = 1: ordinary derivations; every map on an abelian algebra
    CHECK(delta_derivation_space(AlgebraTable(3, Symmetry::antisymmetric), 1).dimension() == 9);
}

TEST_CASE("sparse space agrees with the dense system") {
    for (Family f : {Family::s3, Family::r_eps, Family::s_n2}) {
        size_t n = has_Q_nilradical(f) ? 3 : 5;
        AlgebraTable t = make_algebra({f, n, default_params(f, n)});
        auto dense = kernel_basis(delta_derivation_system(t, half));
        auto space = delta_derivation_space(t, half);
        REQUIRE(dense.size() == space.dimension());
        for (size_t b = 0; b < dense.size(); ++b) CHECK(unknowns_to_map(dense[b], t.dim()) == space.basis[b]);
    }
}

TEST_CASE("is_delta_derivation examples") {
    AlgebraTable t = make_algebra({Family::s3, 5, {}});
    CHECK(is_delta_derivation(t, RMatrix::identity(6), half).empty());
    LinearMap c = RMatrix::identity(6);
    for (size_t i = 0; i < 6; ++i) c.at(i, i) = Rational(-7, 3);
    CHECK(is_delta_derivation(t, c, half).empty());
    LinearMap r1(6, 6);
    r1.at(1, 0) = 1;  // e1 -> e2
    CHECK_FALSE(is_delta_derivation(t, r1, half).empty());
}

TEST_CASE("invariance report examples") {
    CHECK(invariance_report(delta_derivation_space(make_algebra({Family::s_n2, 5, {}}), half)).empty());
    CHECK(invariance_report(delta_derivation_space(AlgebraTable(3, Symmetry::antisymmetric), half)).empty());
    CHECK(invariance_report(delta_derivation_space(make_algebra({Family::r_lambda, 3, {{"lambda", 3}}}), half)).empty());
    CHECK_THROWS(invariance_report(delta_derivation_space(AlgebraTable(2, Symmetry::antisymmetric), 1)));
}

TEST_CASE("soundness and identity membership over the catalog") {
    std::mt19937_64 rng(2);
    for (Family f : all_families()) {
        size_t n = has_Q_nilradical(f) ? 3 : 5;
        for (const Params& p : parameter_grid(f, n, rng)) {
            AlgebraTable t = make_algebra({f, n, p});
            auto s = delta_derivation_space(t, half);
            for (const auto& phi : s.basis) CHECK(is_delta_derivation(t, phi, half).empty());
            CHECK(contains_identity(s));
            CHECK(invariance_report(s).empty());
        }
    }
}

TEST_CASE("completeness against the naive oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        size_t d = 2 + trial % 3;
        AlgebraTable t = oracle::random_lie(rng, d);
        CHECK(delta_derivation_space(t, half).dimension() == oracle::delta_derivation_dim(t, half));
        CHECK(delta_derivation_space(t, 1).dimension() == oracle::delta_derivation_dim(t, 1));
    }
}

TEST_CASE("JSON-free derivation space reshaping") {
    RVector v(4, 0);
    v[derivation_unknown(2, 2, 1)] = 5;  // phi(e1) = 5 e2
    LinearMap m = unknowns_to_map(v, 2);
    CHECK(m.at(1, 0) == 5);
}
