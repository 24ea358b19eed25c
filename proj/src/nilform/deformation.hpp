#pragma once

#include "vectorform.hpp"

namespace nilform {

// A curve of deformations: phi entries are rational functions of one real
// curve parameter (and possibly other parameters), with phi(0) = 0.
class DeformationCurve {
public:
    DeformationCurve(VectorForm01 phi, int t_param);

    const VectorForm01& phi() const { return phi_; }
    int t_param() const { return t_param_; }

    VectorForm01 phi_at(const GaussianRational& t0) const { return phi_.substituted(t_param_, t0); }
    // phi'(0), entrywise derivative at t = 0
    VectorForm01 derivative_at_zero() const;

private:
    VectorForm01 phi_;
    int t_param_;
};

struct DeformedCoframe {
    std::vector<InvariantForm> eta_t;       // forward images eta_t^j = (I+phi+phibar) eta^j
    std::vector<InvariantForm> eta_in_t;    // eta^j expanded in the eta_t basis
    CoframeOperator change;                 // the operator itself
    CoframeOperator change_inverse;
};

DeformedCoframe deformed_coframe(const ComplexNilAlgebra& g, const VectorForm01& phi);

// Re-express a central-fiber form in the deformed basis (monomials then mean
// eta_t^{I|J}) and back.
InvariantForm to_deformed_basis(const DeformedCoframe& cf, const InvariantForm& a);
InvariantForm from_deformed_basis(const DeformedCoframe& cf, const InvariantForm& a);

struct IntegrabilityResidual {
    int j;
    InvariantForm residual;  // (0,2) part of d eta_t^j, in the eta_t basis
};

// Maurer-Cartan in coframe form: every (d eta_t^j)^{0,2} = 0.
std::vector<IntegrabilityResidual> integrability_residual(const ComplexNilAlgebra& g, const VectorForm01& phi);

// Normalized scalar conditions whose common vanishing is the residual's
// vanishing (denominators are invertible coframe-change factors).
std::vector<Poly> integrability_conditions(const ComplexNilAlgebra& g, const VectorForm01& phi);

// Operators along the deformation, via the closed formulas
//   del_t(e alpha)    = e((I-phi phibar)^{-1} F ([delbar, i_phibar] + del)(I-phi phibar) F alpha)
//   delbar_t(e alpha) = e((I-phibar phi)^{-1} F ([del, i_phi] + delbar)(I-phibar phi) F alpha)
// Input and output are forms on the central fiber; the result is the value of
// the deformed operator on e^{iota_phi|iota_phibar}(alpha).
InvariantForm del_t(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha);
InvariantForm delbar_t(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha);

// The same composites with the outer extension left off, i.e. the
// central-fiber payload beta with  op_t(e alpha) = e(beta); used to chain
// del_t after delbar_t.
InvariantForm del_t_payload(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha);
InvariantForm delbar_t_payload(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha);

// Structure-constant table of (M, J_t) at an integrable numeric point:
// expresses d eta_t^j in the eta_t basis. Errors: NotIntegrableAt, singular
// coframe change.
ComplexNilAlgebra pullback_structure(const ComplexNilAlgebra& g, const DeformationCurve& curve,
                                     const GaussianRational& t0,
                                     const std::map<int, GaussianRational>& extra = {});

}  // namespace nilform
