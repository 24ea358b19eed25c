#include "vectorform.hpp"

#include <sstream>

namespace nilform {

VectorForm01::VectorForm01(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {
    m_.assign(static_cast<std::size_t>(n_ * n_), ParamScalar(reg_));
}

const ParamScalar& VectorForm01::entry(int k, int j) const {
    return m_[static_cast<std::size_t>((k - 1) * n_ + (j - 1))];
}

void VectorForm01::set_entry(int k, int j, ParamScalar v) {
    if (k < 1 || k > n_ || j < 1 || j > n_) throw DomainError("vector form entry out of range");
    m_[static_cast<std::size_t>((k - 1) * n_ + (j - 1))] = std::move(v);
}

bool VectorForm01::is_zero() const {
    for (const auto& v : m_)
        if (!v.is_zero()) return false;
    return true;
}

bool VectorForm01::is_numeric() const {
    for (const auto& v : m_)
        if (!v.is_numeric()) return false;
    return true;
}

VectorForm01 VectorForm01::substituted(int param, const GaussianRational& value) const {
    VectorForm01 r(n_, reg_);
    for (int k = 1; k <= n_; ++k)
        for (int j = 1; j <= n_; ++j) r.set_entry(k, j, entry(k, j).substituted(param, value));
    return r;
}

VectorForm01 VectorForm01::derivative(int param) const {
    VectorForm01 r(n_, reg_);
    for (int k = 1; k <= n_; ++k)
        for (int j = 1; j <= n_; ++j) r.set_entry(k, j, entry(k, j).derivative(param));
    return r;
}

VectorForm01 VectorForm01::scaled(const ParamScalar& c) const {
    VectorForm01 r(n_, reg_);
    for (int k = 1; k <= n_; ++k)
        for (int j = 1; j <= n_; ++j) r.set_entry(k, j, entry(k, j) * c);
    return r;
}

std::string VectorForm01::str() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 1; k <= n_; ++k) {
        for (int j = 1; j <= n_; ++j) {
            if (entry(k, j).is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << entry(k, j).str() << ")*eb" << j << "(x)Z" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

InvariantForm interior_product(int k, const InvariantForm& a) {
    InvariantForm r(a.dimension());
    uint32_t bit = 1u << (k - 1);
    for (const auto& [m, c] : a.terms()) {
        if (!(m.holo & bit)) continue;
        // position of k among the holomorphic factors
        int r_pos = __builtin_popcount(m.holo & (bit - 1));
        FormMonomial out{m.holo & ~bit, m.anti};
        r.add_term(out, (r_pos & 1) ? -c : c);
    }
    return r;
}

InvariantForm interior_product_conj(int k, const InvariantForm& a) {
    InvariantForm r(a.dimension());
    uint32_t bit = 1u << (k - 1);
    for (const auto& [m, c] : a.terms()) {
        if (!(m.anti & bit)) continue;
        // crosses the p holomorphic factors, then its position among the
        // antiholomorphic ones
        int r_pos = m.p() + __builtin_popcount(m.anti & (bit - 1));
        FormMonomial out{m.holo, m.anti & ~bit};
        r.add_term(out, (r_pos & 1) ? -c : c);
    }
    return r;
}

InvariantForm contract(const VectorForm01& phi, const InvariantForm& a) {
    if (phi.dimension() != a.dimension() && !a.is_zero())
        throw DimensionMismatch(phi.dimension(), a.dimension());
    int n = phi.dimension();
    InvariantForm r(n);
    for (int k = 1; k <= n; ++k) {
        InvariantForm inner = interior_product(k, a);
        if (inner.is_zero()) continue;
        for (int j = 1; j <= n; ++j) {
            const ParamScalar& co = phi.entry(k, j);
            if (co.is_zero()) continue;
            InvariantForm ebj = InvariantForm::monomial(n, FormMonomial{0, 1u << (j - 1)}, co);
            r += wedge(ebj, inner);
        }
    }
    return r;
}

InvariantForm contract_conj(const VectorForm01& phi, const InvariantForm& a) {
    if (phi.dimension() != a.dimension() && !a.is_zero())
        throw DimensionMismatch(phi.dimension(), a.dimension());
    int n = phi.dimension();
    InvariantForm r(n);
    for (int k = 1; k <= n; ++k) {
        InvariantForm inner = interior_product_conj(k, a);
        if (inner.is_zero()) continue;
        for (int j = 1; j <= n; ++j) {
            ParamScalar co = phi.entry(k, j).conj();
            if (co.is_zero()) continue;
            InvariantForm ej = InvariantForm::monomial(n, FormMonomial{1u << (j - 1), 0}, co);
            r += wedge(ej, inner);
        }
    }
    return r;
}

CoframeOperator::CoframeOperator(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {
    m_.assign(static_cast<std::size_t>(4 * n_ * n_), ParamScalar(reg_));
}

CoframeOperator CoframeOperator::identity(int n, RegistryPtr reg) {
    CoframeOperator E(n, std::move(reg));
    ParamScalar one = ParamScalar::constant(E.reg_, GaussianRational(1));
    for (int c = 0; c < 2 * n; ++c) E.at(c, c) = one;
    return E;
}

CoframeOperator CoframeOperator::extension_of(const VectorForm01& phi) {
    int n = phi.dimension();
    CoframeOperator E = identity(n, phi.registry());
    for (int k = 1; k <= n; ++k) {
        for (int j = 1; j <= n; ++j) {
            const ParamScalar& co = phi.entry(k, j);
            if (co.is_zero()) continue;
            // eta^k gains co * etabar^j ; etabar^k gains conj(co) * eta^j
            E.at(n + j - 1, k - 1) += co;
            E.at(j - 1, n + k - 1) += co.conj();
        }
    }
    return E;
}

CoframeOperator CoframeOperator::one_minus_phi_phibar(const VectorForm01& phi) {
    int n = phi.dimension();
    CoframeOperator E = identity(n, phi.registry());
    // (phi phibar) eta^j = sum_l (sum_m phi^j_m conj(phi^m_l)) eta^l
    for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= n; ++l) {
            ParamScalar acc(phi.registry());
            for (int m = 1; m <= n; ++m) acc += phi.entry(j, m) * phi.entry(m, l).conj();
            if (!acc.is_zero()) E.at(l - 1, j - 1) -= acc;
        }
    }
    return E;
}

CoframeOperator CoframeOperator::one_minus_phibar_phi(const VectorForm01& phi) {
    int n = phi.dimension();
    CoframeOperator E = identity(n, phi.registry());
    for (int j = 1; j <= n; ++j) {
        for (int l = 1; l <= n; ++l) {
            ParamScalar acc(phi.registry());
            for (int m = 1; m <= n; ++m) acc += phi.entry(j, m).conj() * phi.entry(m, l);
            if (!acc.is_zero()) E.at(n + l - 1, n + j - 1) -= acc;
        }
    }
    return E;
}

InvariantForm CoframeOperator::image_hol(int j) const {
    InvariantForm f(n_);
    for (int r = 0; r < 2 * n_; ++r) {
        const ParamScalar& c = at(r, j - 1);
        if (c.is_zero()) continue;
        FormMonomial m = r < n_ ? FormMonomial{1u << r, 0} : FormMonomial{0, 1u << (r - n_)};
        f.add_term(m, c);
    }
    return f;
}

InvariantForm CoframeOperator::image_anti(int j) const {
    InvariantForm f(n_);
    for (int r = 0; r < 2 * n_; ++r) {
        const ParamScalar& c = at(r, n_ + j - 1);
        if (c.is_zero()) continue;
        FormMonomial m = r < n_ ? FormMonomial{1u << r, 0} : FormMonomial{0, 1u << (r - n_)};
        f.add_term(m, c);
    }
    return f;
}

void CoframeOperator::set_image_hol(int j, const InvariantForm& f) {
    for (int r = 0; r < 2 * n_; ++r) at(r, j - 1) = ParamScalar(reg_);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 1) throw DomainError("operator image must be a 1-form");
        int r = m.p() == 1 ? __builtin_ctz(m.holo) : n_ + __builtin_ctz(m.anti);
        at(r, j - 1) = c;
    }
}

void CoframeOperator::set_image_anti(int j, const InvariantForm& f) {
    for (int r = 0; r < 2 * n_; ++r) at(r, n_ + j - 1) = ParamScalar(reg_);
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 1) throw DomainError("operator image must be a 1-form");
        int r = m.p() == 1 ? __builtin_ctz(m.holo) : n_ + __builtin_ctz(m.anti);
        at(r, n_ + j - 1) = c;
    }
}

ParamScalar CoframeOperator::determinant() const {
    // fraction-field Gaussian elimination with determinant tracking
    int N = 2 * n_;
    std::vector<ParamScalar> M = m_;
    auto idx = [N](int r, int c) { return static_cast<std::size_t>(r * N + c); };
    ParamScalar det = ParamScalar::constant(reg_, GaussianRational(1));
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int r = c; r < N; ++r) {
            if (!M[idx(r, c)].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) return ParamScalar(reg_);
        if (piv != c) {
            for (int k = 0; k < N; ++k) std::swap(M[idx(piv, k)], M[idx(c, k)]);
            det = -det;
        }
        det *= M[idx(c, c)];
        ParamScalar inv = ParamScalar::constant(reg_, GaussianRational(1)) / M[idx(c, c)];
        for (int r = c + 1; r < N; ++r) {
            if (M[idx(r, c)].is_zero()) continue;
            ParamScalar f = M[idx(r, c)] * inv;
            for (int k = c; k < N; ++k) M[idx(r, k)] -= f * M[idx(c, k)];
        }
    }
    return det;
}

CoframeOperator CoframeOperator::inverse() const {
    int N = 2 * n_;
    // Gauss-Jordan on [M | I]
    std::vector<ParamScalar> M = m_;
    CoframeOperator R = identity(n_, reg_);
    auto idx = [N](int r, int c) { return static_cast<std::size_t>(r * N + c); };
    for (int c = 0; c < N; ++c) {
        int piv = -1;
        for (int r = c; r < N; ++r) {
            if (!M[idx(r, c)].is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0)
            throw DomainError("singular coframe operator", determinant().str());
        if (piv != c) {
            for (int k = 0; k < N; ++k) {
                std::swap(M[idx(piv, k)], M[idx(c, k)]);
                std::swap(R.m_[idx(piv, k)], R.m_[idx(c, k)]);
            }
        }
        ParamScalar inv = ParamScalar::constant(reg_, GaussianRational(1)) / M[idx(c, c)];
        for (int k = 0; k < N; ++k) {
            M[idx(c, k)] *= inv;
            R.m_[idx(c, k)] *= inv;
        }
        for (int r = 0; r < N; ++r) {
            if (r == c || M[idx(r, c)].is_zero()) continue;
            ParamScalar f = M[idx(r, c)];
            for (int k = 0; k < N; ++k) {
                M[idx(r, k)] -= f * M[idx(c, k)];
                R.m_[idx(r, k)] -= f * R.m_[idx(c, k)];
            }
        }
    }
    return R;
}

CoframeOperator operator*(const CoframeOperator& a, const CoframeOperator& b) {
    if (a.n_ != b.n_) throw DimensionMismatch(a.n_, b.n_);
    int N = 2 * a.n_;
    CoframeOperator r(a.n_, a.reg_);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            ParamScalar acc(a.reg_);
            for (int k = 0; k < N; ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(acc);
        }
    }
    return r;
}

CoframeOperator CoframeOperator::substituted(int param, const GaussianRational& value) const {
    CoframeOperator r(n_, reg_);
    for (std::size_t k = 0; k < m_.size(); ++k) r.m_[k] = m_[k].substituted(param, value);
    return r;
}

InvariantForm simultaneous_contract(const CoframeOperator& E, const InvariantForm& a) {
    if (E.dimension() != a.dimension() && !a.is_zero())
        throw DimensionMismatch(E.dimension(), a.dimension());
    int n = E.dimension();
    InvariantForm r(n);
    for (const auto& [m, c] : a.terms()) {
        InvariantForm acc = InvariantForm::scalar(n, c);
        for (int i : mask_indices(m.holo)) acc = wedge(acc, E.image_hol(i));
        for (int j : mask_indices(m.anti)) acc = wedge(acc, E.image_anti(j));
        r += acc;
    }
    return r;
}

InvariantForm extension_map(const VectorForm01& phi, const InvariantForm& a) {
    return simultaneous_contract(CoframeOperator::extension_of(phi), a);
}

InvariantForm extension_map_series(const VectorForm01& phi, const InvariantForm& a) {
    // per monomial: (sum_k iota_phi^k / k!) on the holomorphic block wedged with
    // (sum_k iota_phibar^k / k!) on the antiholomorphic block
    int n = phi.dimension();
    InvariantForm r(n);
    for (const auto& [m, c] : a.terms()) {
        InvariantForm holo = InvariantForm::monomial(n, FormMonomial{m.holo, 0},
                                                     ParamScalar::constant(phi.registry(), GaussianRational(1)));
        InvariantForm eh(n);
        {
            InvariantForm cur = holo;
            long fact = 1;
            for (int k = 0; !cur.is_zero(); ++k) {
                if (k > 0) fact *= k;
                eh += cur.scaled(ParamScalar::constant(phi.registry(), GaussianRational(Rational(1, fact))));
                cur = contract(phi, cur);
            }
        }
        InvariantForm anti = InvariantForm::monomial(n, FormMonomial{0, m.anti},
                                                     ParamScalar::constant(phi.registry(), GaussianRational(1)));
        InvariantForm ea(n);
        {
            InvariantForm cur = anti;
            long fact = 1;
            for (int k = 0; !cur.is_zero(); ++k) {
                if (k > 0) fact *= k;
                ea += cur.scaled(ParamScalar::constant(phi.registry(), GaussianRational(Rational(1, fact))));
                cur = contract_conj(phi, cur);
            }
        }
        r += wedge(eh, ea).scaled(c);
    }
    return r;
}

}  // namespace nilform
