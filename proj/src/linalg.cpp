#include "tpalab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tpalab {

bool is_zero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

RVector zero_vector(size_t n) { return RVector(n); }

RVector unit_vector(size_t n, size_t i) {
    RVector v(n);
    v.at(i) = 1;
    return v;
}

RMatrix RMatrix::identity(size_t n) {
    RMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RMatrix RMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return RMatrix();
    RMatrix m(rows.size(), rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

RVector RMatrix::row(size_t r) const {
    return RVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RVector RMatrix::col(size_t c) const {
    RVector v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

RVector RMatrix::operator*(const RVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    RVector out(rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0 && v[c] != 0) out[r] += at(r, c) * v[c];
    return out;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    RMatrix out(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (size_t c = 0; c < o.cols_; ++c)
                if (o.at(k, c) != 0) out.at(r, c) += at(r, k) * o.at(k, c);
        }
    return out;
}

void RMatrix::push_row(const RVector& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

RrefResult rref(const RMatrix& m) {
    RrefResult res{m, {}, 0};
    RMatrix& a = res.matrix;
    size_t lead_row = 0;
    for (size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
        size_t p = lead_row;
        while (p < a.rows() && a.at(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != lead_row)
            for (size_t k = 0; k < a.cols(); ++k) std::swap(a.at(p, k), a.at(lead_row, k));
        Rational inv = 1 / a.at(lead_row, c);
        for (size_t k = c; k < a.cols(); ++k) a.at(lead_row, k) *= inv;
        for (size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || a.at(r, c) == 0) continue;
            Rational f = a.at(r, c);
            for (size_t k = c; k < a.cols(); ++k)
                if (a.at(lead_row, k) != 0) a.at(r, k) -= f * a.at(lead_row, k);
        }
        res.pivots.push_back(c);
        ++lead_row;
    }
    res.rank = res.pivots.size();
    return res;
}

size_t rank(const RMatrix& m) { return rref(m).rank; }

std::vector<RVector> kernel_basis(const RMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : r.pivots) is_pivot[p] = true;
    std::vector<RVector> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVector v(m.cols());
        v[f] = 1;
        for (size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve_exact(const RMatrix& m, const RVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    RMatrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    RVector x(m.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.matrix.at(i, m.cols());
    return x;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    RMatrix aug(n, 2 * n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    RMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < n; ++c) inv.at(i, c) = r.matrix.at(i, n + c);
    return inv;
}

bool SparseSystem::add_row(const std::map<size_t, Rational>& row) {
    std::map<size_t, Rational> acc;
    for (const auto& [c, v] : row) {
        if (c >= cols_) throw std::out_of_range("column out of range");
        if (v != 0) acc[c] += v;
    }
    // one pass suffices: stored rows vanish on every other pivot column
    std::vector<std::pair<size_t, Rational>> hits;
    for (const auto& [c, v] : acc)
        if (v != 0 && pivots_.count(c)) hits.emplace_back(c, v);
    for (const auto& [c, f] : hits)
        for (const auto& [k, v] : pivots_.at(c)) acc[k] -= f * v;
    Row r;
    for (auto& [c, v] : acc)
        if (v != 0) r.emplace_back(c, v);
    if (r.empty()) return false;
    size_t p = r.front().first;
    Rational inv = 1 / r.front().second;
    for (auto& e : r) e.second *= inv;
    for (auto& [pc, other] : pivots_) {
        auto it = std::lower_bound(other.begin(), other.end(), p,
                                   [](const auto& e, size_t col) { return e.first < col; });
        if (it == other.end() || it->first != p) continue;
        Rational f = it->second;
        std::map<size_t, Rational> merged(other.begin(), other.end());
        for (const auto& [k, v] : r) merged[k] -= f * v;
        Row nr;
        for (auto& [k, v] : merged)
            if (v != 0) nr.emplace_back(k, v);
        other = std::move(nr);
    }
    pivots_.emplace(p, std::move(r));
    return true;
}

std::vector<size_t> SparseSystem::free_columns() const {
    std::vector<size_t> out;
    for (size_t c = 0; c < cols_; ++c)
        if (!pivots_.count(c)) out.push_back(c);
    return out;
}

std::vector<RVector> SparseSystem::kernel_basis() const {
    std::vector<RVector> basis;
    for (size_t f : free_columns()) {
        RVector v(cols_);
        v[f] = 1;
        for (const auto& [p, row] : pivots_) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, size_t col) { return e.first < col; });
            if (it != row.end() && it->first == f) v[p] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace tpalab
