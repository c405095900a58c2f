#pragma once

#include "tpalab/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tpalab {

using RVector = std::vector<Rational>;

bool is_zero(const RVector& v);
RVector zero_vector(size_t n);
RVector unit_vector(size_t n, size_t i);  // 0-based i

class RMatrix {
public:
    RMatrix() = default;
    RMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static RMatrix identity(size_t n);
    static RMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    RVector row(size_t r) const;
    RVector col(size_t c) const;
    RVector operator*(const RVector& v) const;
    RMatrix operator*(const RMatrix& o) const;
    bool operator==(const RMatrix& o) const = default;

    // appended row; cols must match (or matrix is empty with cols 0)
    void push_row(const RVector& r);

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RMatrix matrix;
    std::vector<size_t> pivots;
    size_t rank = 0;
};

RrefResult rref(const RMatrix& m);
std::vector<RVector> kernel_basis(const RMatrix& m);
std::optional<RVector> solve_exact(const RMatrix& m, const RVector& b);
size_t rank(const RMatrix& m);
std::optional<RMatrix> inverse(const RMatrix& m);

// Incremental elimination over sparse rows. Keeps the accepted rows in fully
// reduced echelon form, so the canonical kernel is read off directly.
// Gives the same kernel basis as kernel_basis() on the stacked dense matrix.
class SparseSystem {
public:
    using Row = std::vector<std::pair<size_t, Rational>>;  // sorted by column

    explicit SparseSystem(size_t cols) : cols_(cols) {}

    // returns true if the row increased the rank
    bool add_row(const std::map<size_t, Rational>& row);

    size_t cols() const { return cols_; }
    size_t rank() const { return pivots_.size(); }
    std::vector<size_t> free_columns() const;
    std::vector<RVector> kernel_basis() const;

private:
    size_t cols_;
    std::map<size_t, Row> pivots_;  // pivot column -> row with leading 1
};

}  // namespace tpalab
