#include "oracle.hpp"
#include "tpalab/linalg.hpp"

#include <doctest.h>

using namespace tpalab;

namespace {
RMatrix M(std::vector<std::vector<Rational>> rows) { return RMatrix::from_rows(rows); }
RVector V(std::vector<Rational> v) { return v; }
}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-0/5")) == "0");
    CHECK(to_string(parse_rational("+7")) == "7");
}

TEST_CASE("rational parse errors") {
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/-1"), std::invalid_argument);
}

TEST_CASE("rational roots and powers") {
    CHECK(*rational_root(Rational(1, 4), 2) == Rational(1, 2));
    CHECK(*rational_root(Rational(-8, 27), 3) == Rational(-2, 3));
    CHECK_FALSE(rational_root(Rational(1, 2), 2).has_value());
    CHECK_FALSE(rational_root(Rational(-4), 2).has_value());
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rpow(Rational(5), 0) == 1);
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-1000, 1000), p(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational a(d(rng), p(rng)), b(d(rng), p(rng));
        a.canonicalize();
        b.canonicalize();
        CHECK((a + b) - b == a);
        if (b != 0) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rref examples") {
    auto r = rref(M({{1, 1}, {2, 2}}));
    CHECK(r.matrix == M({{1, 1}, {0, 0}}));
    CHECK(r.pivots == std::vector<size_t>{0});
    CHECK(r.rank == 1);

    auto id = rref(RMatrix::identity(3));
    CHECK(id.matrix == RMatrix::identity(3));
    CHECK(id.pivots == std::vector<size_t>{0, 1, 2});

    auto sw = rref(M({{0, 1}, {1, 0}}));
    CHECK(sw.matrix == M({{1, 0}, {0, 1}}));
    CHECK(sw.rank == 2);

    CHECK(rref(RMatrix()).rank == 0);
}

TEST_CASE("kernel basis examples") {
    CHECK(kernel_basis(M({{1, 1}})) == std::vector<RVector>{V({-1, 1})});
    CHECK(kernel_basis(RMatrix::identity(2)).empty());
    CHECK(kernel_basis(M({{1, 2, 3}})) == std::vector<RVector>{V({-2, 1, 0}), V({-3, 0, 1})});
}

TEST_CASE("solve_exact examples") {
    CHECK(*solve_exact(RMatrix::identity(2), V({5, 7})) == V({5, 7}));
    CHECK(*solve_exact(M({{1, 1}}), V({3})) == V({3, 0}));
    CHECK_FALSE(solve_exact(M({{1}, {1}}), V({1, 2})).has_value());
}

TEST_CASE("inverse") {
    auto inv = inverse(M({{2, 1}, {1, 1}}));
    REQUIRE(inv);
    CHECK(*inv * M({{2, 1}, {1, 1}}) == RMatrix::identity(2));
    CHECK_FALSE(inverse(M({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("properties on random small matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-3, 3), size(1, 6);
    for (int trial = 0; trial < 150; ++trial) {
        size_t r = size(rng), c = size(rng);
        RMatrix m(r, c);
        oracle::QMatrix q(r, std::vector<Rational>(c));
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.at(i, j) = q[i][j] = entry(rng) * (entry(rng) == 0 ? 0 : 1);
        auto rr = rref(m);
        auto ker = kernel_basis(m);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        CHECK(rr.rank + ker.size() == c);
        CHECK(rref(rr.matrix).matrix == rr.matrix);
        CHECK(rr.rank == oracle::minor_rank(q));
        CHECK(rr.rank == oracle::rank(q));
        CHECK(rr.rank == oracle::bareiss_rank(oracle::integerize(q)));
    }
}

TEST_CASE("sparse system matches dense kernel") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> entry(-2, 2), size(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
        size_t r = size(rng), c = size(rng);
        RMatrix m(r, c);
        SparseSystem s(c);
        for (size_t i = 0; i < r; ++i) {
            std::map<size_t, Rational> row;
            for (size_t j = 0; j < c; ++j) {
                m.at(i, j) = entry(rng);
                if (m.at(i, j) != 0) row[j] = m.at(i, j);
            }
            s.add_row(row);
        }
        CHECK(s.rank() == rank(m));
        CHECK(s.kernel_basis() == kernel_basis(m));
    }
}
