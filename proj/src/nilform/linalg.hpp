#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace nilform {

// dense exact matrix over Q(i)
class QiMatrix {
public:
    QiMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), m_(rows * cols, GaussianRational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& at(std::size_t r, std::size_t c) { return m_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return m_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> m_;
};

enum class PivotStrategy { FirstNonzero, SmallestNorm };

// Fraction-free (Bareiss) rank over Gaussian integers after clearing
// denominators rowwise.
int rank_fraction_free(QiMatrix M, PivotStrategy strategy = PivotStrategy::FirstNonzero);

struct LinearSolve {
    bool solvable = false;
    std::vector<GaussianRational> solution;     // one particular solution when solvable
    std::vector<GaussianRational> certificate;  // y with y^T A = 0, y^T b != 0 otherwise
};

// Solve A x = b exactly; on failure produce the Fredholm certificate.
LinearSolve solve_exact(const QiMatrix& A, const std::vector<GaussianRational>& b);

// Basis of the column space complement: indices of input columns forming a
// maximal independent set after the columns of `fixed`.
std::vector<std::size_t> independent_columns(const QiMatrix& fixed, const QiMatrix& candidates);

}  // namespace nilform
