#pragma once

#include "algebra.hpp"

namespace nilform {

// phi = sum_{j,k} phi^k_j etabar^j (x) Z_k : a (0,1)-form valued in the
// holomorphic tangent space. entry(k, j) = phi^k_j.
class VectorForm01 {
public:
    VectorForm01(int n, RegistryPtr reg);

    int dimension() const { return n_; }
    const RegistryPtr& registry() const { return reg_; }

    const ParamScalar& entry(int k, int j) const;
    void set_entry(int k, int j, ParamScalar v);

    bool is_zero() const;
    bool is_numeric() const;
    VectorForm01 substituted(int param, const GaussianRational& value) const;
    // entrywise derivative with respect to a (real) parameter
    VectorForm01 derivative(int param) const;
    VectorForm01 scaled(const ParamScalar& c) const;

    std::string str() const;

private:
    int n_;
    RegistryPtr reg_;
    std::vector<ParamScalar> m_;  // row-major (k-1)*n + (j-1)
};

// Z_k contraction: removes eta^k, sign (-1)^{r-1} for the r-th holomorphic slot.
InvariantForm interior_product(int k, const InvariantForm& a);
// conj Z_k contraction: removes etabar^k; crosses the whole holomorphic block.
InvariantForm interior_product_conj(int k, const InvariantForm& a);

// iota_phi: (p,q) -> (p-1,q+1), alpha |-> sum phi^k_j etabar^j ^ (Z_k _| alpha)
InvariantForm contract(const VectorForm01& phi, const InvariantForm& a);
// iota_{conj phi}: (p,q) -> (p+1,q-1)
InvariantForm contract_conj(const VectorForm01& phi, const InvariantForm& a);

// Linear operator on the covector space span{eta^j, etabar^j}; four n x n
// blocks give the images of eta^j and etabar^j.
class CoframeOperator {
public:
    explicit CoframeOperator(int n, RegistryPtr reg);

    static CoframeOperator identity(int n, RegistryPtr reg);
    // I + phi + conj(phi) as a covector substitution (the extension map's operator)
    static CoframeOperator extension_of(const VectorForm01& phi);
    // I - phi phibar (acts on the holomorphic block only)
    static CoframeOperator one_minus_phi_phibar(const VectorForm01& phi);
    // I - phibar phi (acts on the antiholomorphic block only)
    static CoframeOperator one_minus_phibar_phi(const VectorForm01& phi);

    int dimension() const { return n_; }
    const RegistryPtr& registry() const { return reg_; }

    // the 1-form images
    InvariantForm image_hol(int j) const;
    InvariantForm image_anti(int j) const;
    void set_image_hol(int j, const InvariantForm& f);
    void set_image_anti(int j, const InvariantForm& f);

    // exact inverse over the coefficient field; throws DomainError carrying the
    // vanishing determinant when singular
    CoframeOperator inverse() const;
    ParamScalar determinant() const;
    // composition: (a * b) applies b first
    friend CoframeOperator operator*(const CoframeOperator& a, const CoframeOperator& b);

    CoframeOperator substituted(int param, const GaussianRational& value) const;

private:
    // 2n x 2n matrix, row-major; basis order eta^1..eta^n, etabar^1..etabar^n;
    // column c = image of basis covector c in rows.
    int n_;
    RegistryPtr reg_;
    std::vector<ParamScalar> m_;
    ParamScalar& at(int r, int c) { return m_[static_cast<std::size_t>(r * 2 * n_ + c)]; }
    const ParamScalar& at(int r, int c) const { return m_[static_cast<std::size_t>(r * 2 * n_ + c)]; }
};

// Simultaneous contraction: replace every covector factor of every monomial by
// its image under E, expanding multilinearly.
InvariantForm simultaneous_contract(const CoframeOperator& E, const InvariantForm& a);

// e^{iota_phi | iota_phibar} = (I + phi + phibar) applied slotwise.
InvariantForm extension_map(const VectorForm01& phi, const InvariantForm& a);

// Finite-sum form of the extension map, kept as an independent route:
// sum_k iota_phi^k on the holomorphic block times sum_k iota_phibar^k on the
// antiholomorphic block, per monomial.
InvariantForm extension_map_series(const VectorForm01& phi, const InvariantForm& a);

}  // namespace nilform
