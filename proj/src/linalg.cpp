#include "ncdisc/linalg.hpp"

#include "ncdisc/errors.hpp"

namespace ncdisc {

namespace {

// Gauss-Jordan on m in place; applies the same row operations to extra.
std::vector<std::size_t> reduce(Mat& m, std::size_t cols, Mat* extra) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        if (p != row) {
            std::swap(m[p], m[row]);
            if (extra) std::swap((*extra)[p], (*extra)[row]);
        }
        Scalar inv = m[row][c].inverse();
        if (!inv.is_one()) {
            for (std::size_t j = c; j < cols; ++j)
                if (!m[row][j].is_zero()) m[row][j] *= inv;
            if (extra)
                for (auto& v : (*extra)[row])
                    if (!v.is_zero()) v *= inv;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!m[row][j].is_zero()) m[i][j] -= f * m[row][j];
            if (extra) {
                auto& er = (*extra)[row];
                auto& ei = (*extra)[i];
                for (std::size_t j = 0; j < er.size(); ++j)
                    if (!er[j].is_zero()) ei[j] -= f * er[j];
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::vector<Vec> kernel_from(const Mat& rref, const std::vector<std::size_t>& pivots, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Scalar(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rref[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

Echelon row_reduce(Mat m, std::size_t cols) {
    auto pivots = reduce(m, cols, nullptr);
    m.resize(pivots.size());
    return {std::move(m), std::move(pivots)};
}

std::vector<Vec> nullspace(const Mat& m, std::size_t cols) {
    auto e = row_reduce(m, cols);
    return kernel_from(e.rref, e.pivots, cols);
}

std::size_t rank(const Mat& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

Scalar determinant(Mat m) {
    const std::size_t n = m.size();
    Scalar det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Scalar(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        Scalar inv = m[c][c].inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            Scalar f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

std::optional<Mat> inverse(const Mat& m) {
    const std::size_t n = m.size();
    Mat a = m;
    Mat id(n, Vec(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    auto pivots = reduce(a, n, &id);
    if (pivots.size() != n) return std::nullopt;
    return id;
}

LinearSolver::LinearSolver(const Mat& a, std::size_t cols) : rows_(a.size()), cols_(cols) {
    Mat m = a;
    transform_.assign(rows_, Vec(rows_, Scalar(0)));
    for (std::size_t i = 0; i < rows_; ++i) transform_[i][i] = 1;
    pivots_ = reduce(m, cols_, &transform_);
    kernel_ = kernel_from(m, pivots_, cols_);
}

std::optional<Vec> LinearSolver::solve(const Vec& b) const {
    if (b.size() != rows_) throw Error("right-hand side has wrong length");
    Vec y(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar s(0);
        const Vec& row = transform_[i];
        for (std::size_t j = 0; j < rows_; ++j)
            if (!row[j].is_zero() && !b[j].is_zero()) s += row[j] * b[j];
        y[i] = std::move(s);
    }
    for (std::size_t i = pivots_.size(); i < rows_; ++i)
        if (!y[i].is_zero()) return std::nullopt;
    Vec x(cols_, Scalar(0));
    for (std::size_t r = 0; r < pivots_.size(); ++r) x[pivots_[r]] = y[r];
    return x;
}

}  // namespace ncdisc
