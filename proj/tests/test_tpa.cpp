#include "oracle.hpp"
#include "tpalab/catalog.hpp"

#include <doctest.h>

using namespace tpalab;

namespace {

const Rational half(1, 2);

AlgebraTable s52() { return make_algebra({Family::s_n2, 5, {}}); }
CommutativeProduct tp_s52() { return make_tp_product({{Family::s_n2, 5, {}}, "TP", {}}); }

QuadraticConstraint mono(std::vector<std::pair<Monomial, long>> terms) {
    QuadraticConstraint q;
    for (auto& [m, c] : terms) q.terms[m] = c;
    return q;
}

std::vector<std::vector<size_t>> zero_sets(const std::vector<CaseComponent>& comps) {
    std::vector<std::vector<size_t>> out;
    for (const auto& c : comps) out.push_back(c.forced_zero);
    return out;
}

CommutativeProduct random_in_space(const ProductSpace& s, std::mt19937_64& rng) {
    std::vector<Rational> c;
    for (size_t i = 0; i < s.dimension(); ++i) c.push_back(random_rational(rng));
    return s.combine(c);
}

bool multiplications_are_half_derivations(const AlgebraTable& b, const CommutativeProduct& p) {
    for (size_t z = 0; z < b.dim(); ++z)
        if (!is_delta_derivation(b, multiplication_operator(p, unit_vector(b.dim(), z)), half).empty()) return false;
    return true;
}

}  // namespace

TEST_CASE("transposed Leibniz residual examples") {
    CHECK(transposed_leibniz_residual(s52(), tp_s52()).empty());
    CHECK(transposed_leibniz_residual(s52(), AlgebraTable(7, Symmetry::symmetric)).empty());
    AlgebraTable b = make_algebra({Family::s1, 4, {{"beta", 3}}});
    CommutativeProduct p(5, Symmetry::symmetric);
    p.set(5, 5, 2, 1);
    CHECK_FALSE(transposed_leibniz_residual(b, p).empty());
}

TEST_CASE("Leibniz residual examples") {
    CHECK(leibniz_residual(s52(), AlgebraTable(7, Symmetry::symmetric)).empty());
    CHECK_FALSE(leibniz_residual(s52(), tp_s52()).empty());
    FamilySpec r7{Family::r_lambda, 3, {{"lambda", 7}}};
    CHECK_FALSE(leibniz_residual(make_algebra(r7), make_tp_product({r7, "TP1", {}})).empty());
}

TEST_CASE("mixed triviality residual examples") {
    CHECK(mixed_triviality_residual(s52(), AlgebraTable(7, Symmetry::symmetric)).empty());
    auto r = mixed_triviality_residual(s52(), tp_s52());
    CHECK_FALSE(r.empty());
    AlgebraTable abelian(3, Symmetry::antisymmetric);
    std::mt19937_64 rng(4);
    CHECK(mixed_triviality_residual(abelian, oracle::random_symmetric(rng, 3, 0.5)).empty());
}

TEST_CASE("verify_tpa examples") {
    auto r = verify_tpa(s52(), tp_s52());
    CHECK(r.is_tpa);
    CHECK_FALSE(r.is_poisson);
    CHECK_FALSE(r.is_both);

    auto z = verify_tpa(s52(), AlgebraTable(7, Symmetry::symmetric));
    CHECK(z.is_tpa);
    CHECK(z.is_poisson);
    CHECK(z.is_trivial);
    CHECK(z.is_both);

    FamilySpec r8{Family::r_2n2, 3, {}};
    CommutativeProduct p = make_tp_product({r8, "TP", {}});
    CHECK(p.coeff(7, 7, 6) == 49);
    CHECK(p.coeff(7, 8, 6) == 14);
    CHECK(p.coeff(8, 8, 6) == 4);
    auto rr = verify_tpa(make_algebra(r8), p);
    CHECK(rr.is_tpa);
    CHECK_FALSE(rr.is_poisson);
    CHECK_FALSE(is_poisson(make_algebra(r8), p));
    CHECK_FALSE(is_poisson(s52(), tp_s52()));
    CHECK(is_poisson(s52(), AlgebraTable(7, Symmetry::symmetric)));
}

TEST_CASE("TPA linear space examples") {
    AlgebraTable r7 = make_algebra({Family::r_lambda, 3, {{"lambda", 1}}});
    ProductSpace s = tpa_linear_space(r7);
    REQUIRE(s.dimension() == 2);
    size_t a = s.coordinate("e2.x[e6]"), b = s.coordinate("x.x[e6]");
    REQUIRE(a != std::string::npos);
    REQUIRE(b != std::string::npos);
    const auto& pa = s.basis[a];
    CHECK(pa.coeff(2, 7, 6) == 1);
    CHECK(pa.coeff(7, 7, 5) == -3);
    CHECK(s.basis[b].coeff(7, 7, 6) == 1);

    CHECK(tpa_linear_space(AlgebraTable(1, Symmetry::antisymmetric)).dimension() == 1);
    CHECK(tpa_linear_space(make_algebra({Family::r_lambda, 4, {{"lambda", 5}}})).dimension() == 4);
}

TEST_CASE("unknown ordering puts the last pair first") {
    CHECK(tpa_unknown(3, 3, 3, 1) == 0);
    CHECK(tpa_unknown(3, 2, 3, 1) == 3);
    CHECK(tpa_unknown(3, 3, 2, 1) == 3);
    CHECK(tpa_unknown(3, 1, 1, 3) == 5 * 3 + 2);
}

TEST_CASE("space soundness and dense oracle") {
    std::mt19937_64 rng(9);
    for (Family f : all_families()) {
        size_t n = has_Q_nilradical(f) ? 3 : 4;
        AlgebraTable t = make_algebra({f, n, default_params(f, n)});
        ProductSpace s = tpa_linear_space(t);
        for (const auto& p : s.basis) CHECK(transposed_leibniz_residual(t, p).empty());
        CHECK(kernel_basis(tpa_linear_system(t)).size() == s.dimension());
        CHECK(oracle::tpa_space_dim(t) == s.dimension());
    }
}

TEST_CASE("associativity constraints") {
    ProductSpace s = tpa_linear_space(make_algebra({Family::s1, 5, {{"beta", 7}}}));
    CHECK(associativity_constraints(s).empty());
    ProductSpace empty{AlgebraTable(2, Symmetry::antisymmetric), {}, {}};
    CHECK(associativity_constraints(empty).empty());
    // s1_5(3): the only surviving relation is alpha4 * beta2
    ProductSpace s3 = tpa_linear_space(make_algebra({Family::s1, 5, {{"beta", 3}}}));
    auto cs = associativity_constraints(s3);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].to_string(s3.coordinates).find("e1.e1[e4]") != std::string::npos);
    CHECK(cs[0].to_string(s3.coordinates).find("e2.e2[e5]") != std::string::npos);
}

TEST_CASE("constraint canonicalization") {
    QuadraticConstraint q = mono({{{0, 1}, -4}, {{2}, 6}});
    q.canonicalize();
    CHECK(q.terms.at({0, 1}) == 2);
    CHECK(q.terms.at({2}) == -3);
    QuadraticConstraint h;
    h.terms[{1}] = Rational(3, 4);
    h.terms[{2, 2}] = Rational(-1, 6);
    h.canonicalize();
    CHECK(h.terms.at({1}) == 9);
    CHECK(h.terms.at({2, 2}) == -2);
}

TEST_CASE("case split examples") {
    auto ab = case_split_solve({mono({{{0, 1}, 1}})});
    CHECK(zero_sets(ab) == std::vector<std::vector<size_t>>{{0}, {1}});

    auto two = case_split_solve({mono({{{0, 1}, 1}}), mono({{{0, 2}, 1}})});
    CHECK(zero_sets(two) == std::vector<std::vector<size_t>>{{0}, {1, 2}});
    for (const auto& c : two) CHECK_FALSE(c.unresolved());

    auto none = case_split_solve({});
    REQUIRE(none.size() == 1);
    CHECK(none[0].forced_zero.empty());

    // a*b - c*d = 0 cannot be settled by a zero pattern
    auto open = case_split_solve({mono({{{0, 1}, 1}, {{2, 3}, -1}})});
    bool has_unresolved = false;
    for (const auto& c : open) has_unresolved = has_unresolved || c.unresolved();
    CHECK(has_unresolved);

    QuadraticConstraint wide;
    for (size_t i = 0; i < 13; ++i) wide.terms[{i}] = 1;
    CHECK_THROWS_AS(case_split_solve({wide}, 12), TooManyVariables);
}

TEST_CASE("lemma equivalence on catalog brackets") {
    std::mt19937_64 rng(31);
    for (Family f : all_families())
        for (size_t n : {4, 5}) {
            if (has_Q_nilradical(f) && n == 5) continue;
            size_t nn = has_Q_nilradical(f) ? n - 1 : n;
            AlgebraTable b = make_algebra({f, nn, default_params(f, nn)});
            ProductSpace s = tpa_linear_space(b);
            for (int trial = 0; trial < 2; ++trial) {
                CommutativeProduct in = random_in_space(s, rng);
                CHECK(transposed_leibniz_residual(b, in).empty());
                CHECK(multiplications_are_half_derivations(b, in));
                CommutativeProduct off = oracle::random_symmetric(rng, b.dim(), 0.05);
                CHECK(transposed_leibniz_residual(b, off).empty() == multiplications_are_half_derivations(b, off));
            }
        }
}

TEST_CASE("proposition equivalence on small random pairs") {
    std::mt19937_64 rng(12);
    std::bernoulli_distribution keep(0.35);
    for (int tested = 0; tested < 40; ++tested) {
        size_t d = 2 + tested % 3;
        AlgebraTable b = oracle::random_lie(rng, d);
        ProductSpace s = tpa_linear_space(b);
        CommutativeProduct p;
        do {
            p = oracle::random_symmetric(rng, d);
            if (tested % 2 && s.dimension()) {
                std::vector<Rational> c;
                for (size_t i = 0; i < s.dimension(); ++i) c.push_back(keep(rng) ? random_rational(rng) : Rational(0));
                p = s.combine(c);
            }
        } while (!oracle::associative_ok(p));
        bool mixed = mixed_triviality_residual(b, p).empty();
        bool both = leibniz_residual(b, p).empty() && transposed_leibniz_residual(b, p).empty();
        CHECK(mixed == both);
    }
}

TEST_CASE("transport invariance along an automorphism") {
    FamilySpec fs{Family::r_lambda, 3, {{"lambda", 1}}};
    AlgebraTable b = make_algebra(fs);
    LinearMap g = normalization_map({fs, "TP1", {}}, {{"alpha", 0}, {"beta", 4}});
    REQUIRE(is_bracket_automorphism(b, g));
    CommutativeProduct p = make_tp_product({fs, "TP2", {}});
    REQUIRE(verify_tpa(b, p).is_tpa);
    CHECK(verify_tpa(transport(b, g), transport(p, g)).is_tpa);
}
