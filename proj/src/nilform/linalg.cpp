#include "linalg.hpp"

namespace nilform {

namespace {

// Gaussian integer pair (a+bi with integer parts) for the fraction-free path.
struct Zi {
    mpz_class a, b;
    bool is_zero() const { return a == 0 && b == 0; }
};

Zi zi_mul(const Zi& x, const Zi& y) { return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a}; }
Zi zi_sub(const Zi& x, const Zi& y) { return {x.a - y.a, x.b - y.b}; }

// exact division in Z[i] (only called when divisible)
Zi zi_div(const Zi& x, const Zi& y) {
    mpz_class n = y.a * y.a + y.b * y.b;
    mpz_class ra = x.a * y.a + x.b * y.b;
    mpz_class rb = x.b * y.a - x.a * y.b;
    return {ra / n, rb / n};
}

mpz_class zi_norm(const Zi& x) { return x.a * x.a + x.b * x.b; }

}  // namespace

int rank_fraction_free(QiMatrix M, PivotStrategy strategy) {
    std::size_t rows = M.rows(), cols = M.cols();
    if (rows == 0 || cols == 0) return 0;

    // clear denominators rowwise into Z[i]
    std::vector<std::vector<Zi>> A(rows, std::vector<Zi>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class lcm = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            const GaussianRational& v = M.at(r, c);
            mpz_class d1 = v.re().get_den(), d2 = v.im().get_den();
            lcm = lcm / gcd(lcm, d1) * d1;
            lcm = lcm / gcd(lcm, d2) * d2;
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const GaussianRational& v = M.at(r, c);
            A[r][c] = {v.re().get_num() * (lcm / v.re().get_den()),
                       v.im().get_num() * (lcm / v.im().get_den())};
        }
    }

    // Bareiss: entries stay in Z[i]; previous pivot divides exactly
    Zi prev{1, 0};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        if (strategy == PivotStrategy::FirstNonzero) {
            for (std::size_t r = rank; r < rows; ++r)
                if (!A[r][c].is_zero()) {
                    piv = r;
                    break;
                }
        } else {
            mpz_class best;
            for (std::size_t r = rank; r < rows; ++r) {
                if (A[r][c].is_zero()) continue;
                mpz_class nn = zi_norm(A[r][c]);
                if (piv == rows || nn < best) {
                    piv = r;
                    best = nn;
                }
            }
        }
        if (piv == rows) continue;
        std::swap(A[rank], A[piv]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                Zi num = zi_sub(zi_mul(A[rank][c], A[r][k]), zi_mul(A[r][c], A[rank][k]));
                A[r][k] = zi_div(num, prev);
            }
            A[r][c] = {0, 0};
        }
        prev = A[rank][c];
        ++rank;
    }
    return static_cast<int>(rank);
}

LinearSolve solve_exact(const QiMatrix& A, const std::vector<GaussianRational>& b) {
    std::size_t rows = A.rows(), cols = A.cols();
    // augmented [A | b | I] with I tracking the row transform for certificates
    std::size_t width = cols + 1 + rows;
    std::vector<std::vector<GaussianRational>> M(rows, std::vector<GaussianRational>(width, GaussianRational(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) M[r][c] = A.at(r, c);
        M[r][cols] = b[r];
        M[r][cols + 1 + r] = GaussianRational(1);
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(M[rank], M[piv]);
        GaussianRational inv = GaussianRational(1) / M[rank][c];
        for (std::size_t k = 0; k < width; ++k) M[rank][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || M[r][c].is_zero()) continue;
            GaussianRational f = M[r][c];
            for (std::size_t k = 0; k < width; ++k) M[r][k] -= f * M[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    LinearSolve out;
    // inconsistent row: zero A-part with nonzero b-part
    for (std::size_t r = rank; r < rows; ++r) {
        if (!M[r][cols].is_zero()) {
            out.solvable = false;
            out.certificate.assign(rows, GaussianRational(0));
            for (std::size_t k = 0; k < rows; ++k) out.certificate[k] = M[r][cols + 1 + k];
            return out;
        }
    }
    out.solvable = true;
    out.solution.assign(cols, GaussianRational(0));
    for (std::size_t r = 0; r < rank; ++r) out.solution[pivot_col[r]] = M[r][cols];
    return out;
}

std::vector<std::size_t> independent_columns(const QiMatrix& fixed, const QiMatrix& candidates) {
    std::size_t rows = candidates.rows();
    std::vector<std::vector<GaussianRational>> M;  // row space of accumulated columns (transposed view)
    auto rank_of = [&](const std::vector<std::vector<GaussianRational>>& rowsv) {
        auto C = rowsv;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < rows && rk < C.size(); ++c) {
            std::size_t piv = C.size();
            for (std::size_t r = rk; r < C.size(); ++r)
                if (!C[r][c].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv == C.size()) continue;
            std::swap(C[rk], C[piv]);
            GaussianRational inv = GaussianRational(1) / C[rk][c];
            for (std::size_t k = 0; k < rows; ++k) C[rk][k] *= inv;
            for (std::size_t r = 0; r < C.size(); ++r) {
                if (r == rk || C[r][c].is_zero()) continue;
                GaussianRational f = C[r][c];
                for (std::size_t k = 0; k < rows; ++k) C[r][k] -= f * C[rk][k];
            }
            ++rk;
        }
        return rk;
    };

    for (std::size_t c = 0; c < fixed.cols(); ++c) {
        std::vector<GaussianRational> col(rows);
        for (std::size_t r = 0; r < rows; ++r) col[r] = fixed.at(r, c);
        M.push_back(std::move(col));
    }
    std::size_t base_rank = rank_of(M);
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < candidates.cols(); ++c) {
        std::vector<GaussianRational> col(rows);
        for (std::size_t r = 0; r < rows; ++r) col[r] = candidates.at(r, c);
        M.push_back(std::move(col));
        std::size_t rk = rank_of(M);
        if (rk > base_rank) {
            base_rank = rk;
            chosen.push_back(c);
        } else {
            M.pop_back();
        }
    }
    return chosen;
}

}  // namespace nilform
