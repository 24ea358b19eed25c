#include "cohomology.hpp"

#include <algorithm>
#include <functional>

namespace nilform {

void require_numeric(const ComplexNilAlgebra& g) {
    if (!g.is_numeric())
        throw RefusedError(
            "rank computation over symbolic parameters refused; specialize the structure constants first");
}

std::vector<FormMonomial> monomial_basis(int n, int p, int q) {
    std::vector<FormMonomial> out;
    if (p < 0 || q < 0 || p > n || q > n) return out;
    std::vector<uint32_t> holo, anti;
    uint32_t full = (1u << n) - 1;
    for (uint32_t m = 0; m <= full; ++m) {
        if (__builtin_popcount(m) == p) holo.push_back(m);
        if (__builtin_popcount(m) == q) anti.push_back(m);
    }
    for (uint32_t h : holo)
        for (uint32_t a : anti) out.push_back(FormMonomial{h, a});
    // match the form-term ordering for deterministic bases
    std::sort(out.begin(), out.end(), [](const FormMonomial& x, const FormMonomial& y) {
        MonomialOrder lt;
        return lt(x, y);
    });
    return out;
}

namespace {

std::vector<GaussianRational> coords(const InvariantForm& f, const std::vector<FormMonomial>& basis) {
    std::vector<GaussianRational> v(basis.size(), GaussianRational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (const ParamScalar* c = f.coefficient(basis[i])) {
            v[i] = c->constant_value();
            ++found;
        }
    }
    if (found != f.term_count()) throw DomainError("form has terms outside the expected bidegree");
    return v;
}

InvariantForm from_coords(int n, const std::vector<GaussianRational>& v, const std::vector<FormMonomial>& basis,
                          const RegistryPtr& reg) {
    InvariantForm f(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) f.add_term(basis[i], ParamScalar::constant(reg, v[i]));
    return f;
}

// matrix of a linear map between monomial bases
QiMatrix operator_matrix(const ComplexNilAlgebra& g, const std::vector<FormMonomial>& src,
                         const std::vector<FormMonomial>& dst,
                         const std::function<InvariantForm(const InvariantForm&)>& op) {
    QiMatrix M(dst.size(), src.size());
    RegistryPtr reg = g.registry();
    for (std::size_t c = 0; c < src.size(); ++c) {
        InvariantForm img = op(InvariantForm::monomial(g.dimension(), src[c],
                                                       ParamScalar::constant(reg, GaussianRational(1))));
        auto v = coords(img, dst);
        for (std::size_t r = 0; r < dst.size(); ++r) M.at(r, c) = v[r];
    }
    return M;
}

}  // namespace

CohomologySpace bc_space(const ComplexNilAlgebra& g, int p, int q, PivotStrategy strategy) {
    require_numeric(g);
    int n = g.dimension();
    if (p < 0 || q < 0 || p > n || q > n) throw DomainError("bidegree out of range");
    CohomologySpace out;
    out.p = p;
    out.q = q;
    out.algebra_fingerprint = g.fingerprint();

    auto src = monomial_basis(n, p, q);
    std::vector<FormMonomial> dst = monomial_basis(n, p + 1, q);
    for (auto m : monomial_basis(n, p, q + 1)) dst.push_back(m);

    QiMatrix D = operator_matrix(g, src, dst, [&](const InvariantForm& f) { return g.d(f); });
    int rank_d = rank_fraction_free(D, strategy);
    int ker_dim = static_cast<int>(src.size()) - rank_d;

    int rank_im = 0;
    QiMatrix IM(src.size(), 0);
    if (p >= 1 && q >= 1) {
        auto below = monomial_basis(n, p - 1, q - 1);
        IM = operator_matrix(g, below, src, [&](const InvariantForm& f) { return g.del(g.delbar(f)); });
        rank_im = rank_fraction_free(IM, strategy);
    }
    out.dimension = ker_dim - rank_im;

    // representatives: kernel basis vectors independent modulo the image
    // kernel basis via RREF of D
    std::size_t rows = D.rows(), cols = D.cols();
    std::vector<std::vector<GaussianRational>> M(rows, std::vector<GaussianRational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) M[r][c] = D.at(r, c);
    std::vector<int> pivot_of_col(cols, -1);
    std::size_t rk = 0;
    for (std::size_t c = 0; c < cols && rk < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = rk; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        std::swap(M[rk], M[piv]);
        GaussianRational inv = GaussianRational(1) / M[rk][c];
        for (std::size_t k = 0; k < cols; ++k) M[rk][k] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rk || M[r][c].is_zero()) continue;
            GaussianRational f = M[r][c];
            for (std::size_t k = 0; k < cols; ++k) M[r][k] -= f * M[rk][k];
        }
        pivot_of_col[c] = static_cast<int>(rk);
        ++rk;
    }
    QiMatrix kernel(src.size(), static_cast<std::size_t>(ker_dim));
    std::size_t kc = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        // free column -> kernel vector
        kernel.at(c, kc) = GaussianRational(1);
        for (std::size_t c2 = 0; c2 < cols; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            kernel.at(c2, kc) = -M[static_cast<std::size_t>(pivot_of_col[c2])][c];
        }
        ++kc;
    }
    auto chosen = independent_columns(IM, kernel);
    for (std::size_t c : chosen) {
        std::vector<GaussianRational> v(src.size());
        for (std::size_t r = 0; r < src.size(); ++r) v[r] = kernel.at(r, c);
        out.representatives.push_back(from_coords(n, v, src, g.registry()));
    }
    if (static_cast<int>(out.representatives.size()) != out.dimension)
        throw DomainError("internal: representative count disagrees with dimension");
    return out;
}

std::string ClassVerdict::str() const {
    switch (kind) {
        case NotClosed: return "NotClosed";
        case Exact: return "Exact";
        case NonzeroClass: return "NonzeroClass";
    }
    return "?";
}

ClassVerdict bc_class_vanishes(const ComplexNilAlgebra& g, const InvariantForm& alpha) {
    require_numeric(g);
    if (!alpha.is_numeric()) throw RefusedError("class verdicts over symbolic coefficients refused");
    ClassVerdict v;
    int n = g.dimension();
    if (alpha.is_zero()) {
        v.kind = ClassVerdict::Exact;
        v.witness = InvariantForm(n);
        return v;
    }
    auto pqs = alpha.bidegrees();
    if (pqs.size() != 1) throw DomainError("class verdicts require homogeneous forms");
    auto [p, q] = pqs[0];
    if (!g.d(alpha).is_zero()) {
        v.kind = ClassVerdict::NotClosed;
        return v;
    }
    if (p < 1 || q < 1) {
        // no del delbar image below; nonzero closed form has nonzero class
        v.kind = ClassVerdict::NonzeroClass;
        return v;
    }
    auto src = monomial_basis(n, p - 1, q - 1);
    auto dst = monomial_basis(n, p, q);
    QiMatrix M(dst.size(), src.size());
    RegistryPtr reg = g.registry();
    for (std::size_t c = 0; c < src.size(); ++c) {
        InvariantForm img = g.del(g.delbar(
            InvariantForm::monomial(n, src[c], ParamScalar::constant(reg, GaussianRational(1)))));
        auto vv = coords(img, dst);
        for (std::size_t r = 0; r < dst.size(); ++r) M.at(r, c) = vv[r];
    }
    auto b = coords(alpha, dst);
    LinearSolve s = solve_exact(M, b);
    if (s.solvable) {
        v.kind = ClassVerdict::Exact;
        v.witness = from_coords(n, s.solution, src, reg);
        // re-substitution check
        if (!(g.del(g.delbar(*v.witness)) == alpha)) throw DomainError("internal: witness verification failed");
    } else {
        v.kind = ClassVerdict::NonzeroClass;
        v.certificate = s.certificate;
    }
    return v;
}

bool is_bc_harmonic(const ComplexNilAlgebra& g, const HermitianMetric& m, const InvariantForm& alpha) {
    require_numeric(g);
    if (!m.is_unit_diagonal()) throw DomainError("harmonicity requires the diagonal unit metric");
    if (!g.d(alpha).is_zero()) return false;
    return g.del(g.delbar(hodge_star(m, alpha))).is_zero();
}

}  // namespace nilform
