#include "algebra.hpp"

#include <sstream>

namespace nilform {

ComplexNilAlgebra::ComplexNilAlgebra(int n, RegistryPtr reg, std::vector<InvariantForm> d_eta, bool paper_mode)
    : n_(n), reg_(std::move(reg)), d_eta_(std::move(d_eta)), paper_mode_(paper_mode) {
    if (n < 1 || n > 16) throw DomainError("dimension out of range: " + std::to_string(n));
    if (d_eta_.size() != static_cast<std::size_t>(n))
        throw DomainError("structure table must provide d eta^j for every j");
    for (int j = 1; j <= n_; ++j) {
        const InvariantForm& f = d_eta_[static_cast<std::size_t>(j - 1)];
        if (f.dimension() != n_ && !f.is_zero()) throw DimensionMismatch(n_, f.dimension());
        for (const auto& [m, c] : f.terms()) {
            bool ok = (m.p() == 2 && m.q() == 0) || (m.p() == 1 && m.q() == 1);
            if (!ok)
                throw DomainError("d eta^" + std::to_string(j) +
                                  " must have bidegree (2,0)+(1,1); found " + monomial_str(m));
        }
        d_etabar_.push_back(f.conj());
    }
}

bool ComplexNilAlgebra::is_numeric() const {
    for (const auto& f : d_eta_)
        if (!f.is_numeric()) return false;
    return true;
}

InvariantForm ComplexNilAlgebra::d(const InvariantForm& a) const {
    if (a.dimension() != n_ && !a.is_zero()) throw DimensionMismatch(n_, a.dimension());
    InvariantForm r(n_);
    for (const auto& [m, c] : a.terms()) {
        // Leibniz over the factors in canonical order; the replacement d(factor)
        // has even degree, so it commutes to the front and the remaining factors
        // keep their canonical order.
        int pos = 0;
        for (int i : mask_indices(m.holo)) {
            FormMonomial rest{m.holo & ~(1u << (i - 1)), m.anti};
            InvariantForm t = wedge(d_eta(i), InvariantForm::monomial(n_, rest, c));
            r += (pos & 1) ? -t : t;
            ++pos;
        }
        for (int j : mask_indices(m.anti)) {
            FormMonomial rest{m.holo, m.anti & ~(1u << (j - 1))};
            InvariantForm t = wedge(d_etabar(j), InvariantForm::monomial(n_, rest, c));
            r += (pos & 1) ? -t : t;
            ++pos;
        }
    }
    return r;
}

InvariantForm ComplexNilAlgebra::del(const InvariantForm& a) const {
    InvariantForm r(n_);
    for (auto [p, q] : a.bidegrees()) r += d(a.project(p, q)).project(p + 1, q);
    return r;
}

InvariantForm ComplexNilAlgebra::delbar(const InvariantForm& a) const {
    InvariantForm r(n_);
    for (auto [p, q] : a.bidegrees()) r += d(a.project(p, q)).project(p, q + 1);
    return r;
}

namespace {

// complexified frame vector: index 0..n-1 = Z_{i+1}, n..2n-1 = conj Z
struct FrameVec {
    std::vector<GaussianRational> c;
};

// evaluate a numeric 2-form on a pair of frame basis vectors
GaussianRational eval2(const InvariantForm& f, int n, int u, int v) {
    GaussianRational acc(0);
    bool ubar = u >= n, vbar = v >= n;
    int ui = (u % n) + 1, vi = (v % n) + 1;
    for (const auto& [m, c] : f.terms()) {
        GaussianRational val(0);
        if (m.p() == 2 && !ubar && !vbar) {
            auto idx = mask_indices(m.holo);
            if (idx[0] == ui && idx[1] == vi) val = GaussianRational(1);
            if (idx[0] == vi && idx[1] == ui) val = GaussianRational(-1);
        } else if (m.p() == 1 && m.q() == 1) {
            int hi = mask_indices(m.holo)[0], ai = mask_indices(m.anti)[0];
            if (!ubar && vbar && hi == ui && ai == vi) val = GaussianRational(1);
            if (ubar && !vbar && hi == vi && ai == ui) val = GaussianRational(-1);
        } else if (m.q() == 2 && ubar && vbar) {
            auto idx = mask_indices(m.anti);
            if (idx[0] == ui && idx[1] == vi) val = GaussianRational(1);
            if (idx[0] == vi && idx[1] == ui) val = GaussianRational(-1);
        }
        if (!val.is_zero()) acc += c.constant_value() * val;
    }
    return acc;
}

// row-reduce in place, return rank
int rref(std::vector<std::vector<GaussianRational>>& M) {
    if (M.empty()) return 0;
    std::size_t rows = M.size(), cols = M[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(M[r], M[piv]);
        GaussianRational inv = GaussianRational(1) / M[r][c];
        for (std::size_t k = c; k < cols; ++k) M[r][k] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            GaussianRational f = M[i][c];
            for (std::size_t k = c; k < cols; ++k) M[i][k] -= f * M[r][k];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

ValidationReport ComplexNilAlgebra::validate(const std::map<int, GaussianRational>& assignment) const {
    ValidationReport rep;
    rep.paper_mode = paper_mode_;
    rep.d_squared_zero.resize(static_cast<std::size_t>(n_));
    rep.d_squared_all_zero = true;
    for (int j = 1; j <= n_; ++j) {
        InvariantForm dd = d(d_eta(j));
        bool zero = dd.is_zero();
        rep.d_squared_zero[static_cast<std::size_t>(j - 1)] = zero;
        if (!zero) {
            rep.d_squared_all_zero = false;
            rep.failures.push_back("d^2 eta^" + std::to_string(j) + " = " + dd.str());
        }
    }

    if (paper_mode_) {
        rep.constants_in_Qi = is_numeric();
        if (!rep.constants_in_Qi)
            rep.failures.push_back("paper mode requires structure constants in Q(i); table is symbolic");
    }

    if (!rep.d_squared_all_zero) return rep;

    Classification cls = classify();
    if (cls.nilpotent_coframe) {
        // triangular table: the lower central series strictly drops indices
        rep.nilpotent = true;
        rep.nilpotency_method = NilpotencyCheck::TriangularStructural;
        return rep;
    }

    ComplexNilAlgebra g = *this;
    if (!is_numeric()) {
        if (assignment.empty()) {
            rep.nilpotency_method = NilpotencyCheck::NotChecked;
            rep.failures.push_back(
                "nilpotency not decided: non-triangular symbolic table (supply a numeric specialization)");
            return rep;
        }
        for (const auto& [k, v] : assignment) g = g.substituted(k, v);
        if (!g.is_numeric()) {
            rep.nilpotency_method = NilpotencyCheck::NotChecked;
            rep.failures.push_back("nilpotency not decided: specialization left symbolic constants");
            return rep;
        }
    }

    // brackets of the complexified frame from the structure equations via
    // eta([X,Y]) = -d eta(X,Y)
    int N = 2 * n_;
    auto bracket = [&](int u, int v) {
        std::vector<GaussianRational> out(static_cast<std::size_t>(N), GaussianRational(0));
        for (int j = 1; j <= n_; ++j) {
            out[static_cast<std::size_t>(j - 1)] = -eval2(g.d_eta(j), n_, u, v);
            out[static_cast<std::size_t>(n_ + j - 1)] = -eval2(g.d_etabar(j), n_, u, v);
        }
        return out;
    };

    // lower central series over the complexification
    std::vector<std::vector<GaussianRational>> span;
    for (int u = 0; u < N; ++u) {
        std::vector<GaussianRational> e(static_cast<std::size_t>(N), GaussianRational(0));
        e[static_cast<std::size_t>(u)] = GaussianRational(1);
        span.push_back(std::move(e));
    }
    int prev_rank = N;
    for (int depth = 0; depth <= N + 1; ++depth) {
        // [g, span]
        std::vector<std::vector<GaussianRational>> next;
        for (int u = 0; u < N; ++u) {
            for (const auto& w : span) {
                std::vector<GaussianRational> acc(static_cast<std::size_t>(N), GaussianRational(0));
                for (int v = 0; v < N; ++v) {
                    if (w[static_cast<std::size_t>(v)].is_zero()) continue;
                    auto bw = bracket(u, v);
                    for (int k = 0; k < N; ++k) acc[static_cast<std::size_t>(k)] += w[static_cast<std::size_t>(v)] * bw[static_cast<std::size_t>(k)];
                }
                next.push_back(std::move(acc));
            }
        }
        int rank = rref(next);
        next.resize(static_cast<std::size_t>(rank));
        if (rank == 0) {
            rep.nilpotent = true;
            rep.nilpotency_method = NilpotencyCheck::NumericLowerCentralSeries;
            return rep;
        }
        if (rank == prev_rank) {
            rep.nilpotent = false;
            rep.nilpotency_method = NilpotencyCheck::NumericLowerCentralSeries;
            rep.failures.push_back("lower central series stalls at rank " + std::to_string(rank));
            return rep;
        }
        prev_rank = rank;
        span = std::move(next);
    }
    rep.nilpotency_method = NilpotencyCheck::NumericLowerCentralSeries;
    return rep;
}

Classification ComplexNilAlgebra::classify() const {
    Classification c;
    c.abelian = true;
    c.holomorphically_parallelizable = true;
    c.nilpotent_coframe = true;
    c.complex_torus = true;
    for (int j = 1; j <= n_; ++j) {
        for (const auto& [m, coeff] : d_eta(j).terms()) {
            c.complex_torus = false;
            if (m.p() == 2) c.abelian = false;
            if (m.q() == 1) c.holomorphically_parallelizable = false;
            uint32_t used = m.holo | m.anti;
            // every index in the term must be < j
            if (used >> (j - 1)) c.nilpotent_coframe = false;
        }
    }
    return c;
}

ComplexNilAlgebra ComplexNilAlgebra::substituted(int param, const GaussianRational& value) const {
    std::vector<InvariantForm> d;
    d.reserve(d_eta_.size());
    for (const auto& f : d_eta_) d.push_back(f.substituted(param, value));
    return ComplexNilAlgebra(n_, reg_, std::move(d), paper_mode_);
}

std::string ComplexNilAlgebra::fingerprint() const {
    std::ostringstream os;
    os << "n=" << n_ << ";";
    for (int j = 1; j <= n_; ++j) os << "d" << j << ":" << d_eta(j).str() << ";";
    return os.str();
}

}  // namespace nilform
