#pragma once

#include <optional>
#include <vector>

#include "ncdisc/scalar.hpp"

namespace ncdisc {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major

struct Echelon {
    Mat rref;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; cols is needed when m has no rows.
Echelon row_reduce(Mat m, std::size_t cols);
/// Basis of {v : m v = 0}, one vector per free column, in column order.
std::vector<Vec> nullspace(const Mat& m, std::size_t cols);
Scalar determinant(Mat m);
std::optional<Mat> inverse(const Mat& m);
std::size_t rank(const Mat& m, std::size_t cols);

/// Factors a (rows x cols) matrix once so many right-hand sides can be solved.
class LinearSolver {
   public:
    LinearSolver() = default;
    LinearSolver(const Mat& a, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivots_.size(); }
    bool injective() const { return rank() == cols_; }
    bool surjective() const { return rank() == rows_; }
    /// A solution of a x = b (free variables zero), if consistent.
    std::optional<Vec> solve(const Vec& b) const;
    /// Basis of the kernel of a.
    const std::vector<Vec>& kernel() const { return kernel_; }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    Mat transform_;  // E with E a = rref(a)
    std::vector<std::size_t> pivots_;
    std::vector<Vec> kernel_;
};

}  // namespace ncdisc
