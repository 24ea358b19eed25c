#include "deformation.hpp"

#include <algorithm>

#include "metric.hpp"

namespace nilform {

DeformationCurve::DeformationCurve(VectorForm01 phi, int t_param)
    : phi_(std::move(phi)), t_param_(t_param) {
    const RegistryPtr& reg = phi_.registry();
    if (!reg->is_real(t_param_))
        throw DomainError("curve parameter '" + reg->name(t_param_) + "' must be declared real");
    VectorForm01 at0 = phi_.substituted(t_param_, GaussianRational(0));
    if (!at0.is_zero()) throw DomainError("curve must satisfy phi(0) = 0");
}

VectorForm01 DeformationCurve::derivative_at_zero() const {
    return phi_.derivative(t_param_).substituted(t_param_, GaussianRational(0));
}

DeformedCoframe deformed_coframe(const ComplexNilAlgebra& g, const VectorForm01& phi) {
    if (g.dimension() != phi.dimension()) throw DimensionMismatch(g.dimension(), phi.dimension());
    DeformedCoframe cf{{}, {}, CoframeOperator::extension_of(phi), CoframeOperator::identity(phi.dimension(), phi.registry())};
    cf.change_inverse = cf.change.inverse();
    for (int j = 1; j <= g.dimension(); ++j) {
        cf.eta_t.push_back(cf.change.image_hol(j));
        cf.eta_in_t.push_back(cf.change_inverse.image_hol(j));
    }
    return cf;
}

InvariantForm to_deformed_basis(const DeformedCoframe& cf, const InvariantForm& a) {
    return simultaneous_contract(cf.change_inverse, a);
}

InvariantForm from_deformed_basis(const DeformedCoframe& cf, const InvariantForm& a) {
    return simultaneous_contract(cf.change, a);
}

std::vector<IntegrabilityResidual> integrability_residual(const ComplexNilAlgebra& g, const VectorForm01& phi) {
    DeformedCoframe cf = deformed_coframe(g, phi);
    std::vector<IntegrabilityResidual> out;
    for (int j = 1; j <= g.dimension(); ++j) {
        InvariantForm d_eta_t = g.d(cf.eta_t[static_cast<std::size_t>(j - 1)]);
        InvariantForm in_t = to_deformed_basis(cf, d_eta_t);
        out.push_back({j, in_t.project(0, 2)});
    }
    return out;
}

std::vector<Poly> integrability_conditions(const ComplexNilAlgebra& g, const VectorForm01& phi) {
    std::vector<Poly> all;
    for (const auto& r : integrability_residual(g, phi)) {
        for (const Poly& p : condition_list(r.residual)) {
            bool seen = false;
            for (const auto& q : all)
                if (Poly::compare(q, p) == 0) seen = true;
            if (!seen) all.push_back(p);
        }
    }
    std::sort(all.begin(), all.end(), [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    return all;
}

InvariantForm del_t_payload(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha) {
    CoframeOperator A = CoframeOperator::one_minus_phi_phibar(phi);
    CoframeOperator Ainv = A.inverse();
    InvariantForm x = simultaneous_contract(A, alpha);
    // [delbar, iota_phibar] + del
    InvariantForm y = g.delbar(contract_conj(phi, x)) - contract_conj(phi, g.delbar(x)) + g.del(x);
    return simultaneous_contract(Ainv, y);
}

InvariantForm delbar_t_payload(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha) {
    CoframeOperator B = CoframeOperator::one_minus_phibar_phi(phi);
    CoframeOperator Binv = B.inverse();
    InvariantForm x = simultaneous_contract(B, alpha);
    InvariantForm y = g.del(contract(phi, x)) - contract(phi, g.del(x)) + g.delbar(x);
    return simultaneous_contract(Binv, y);
}

InvariantForm del_t(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha) {
    return extension_map(phi, del_t_payload(g, phi, alpha));
}

InvariantForm delbar_t(const ComplexNilAlgebra& g, const VectorForm01& phi, const InvariantForm& alpha) {
    return extension_map(phi, delbar_t_payload(g, phi, alpha));
}

ComplexNilAlgebra pullback_structure(const ComplexNilAlgebra& g, const DeformationCurve& curve,
                                     const GaussianRational& t0,
                                     const std::map<int, GaussianRational>& extra) {
    ComplexNilAlgebra gs = g;
    VectorForm01 phi = curve.phi_at(t0);
    for (const auto& [k, v] : extra) {
        gs = gs.substituted(k, v);
        phi = phi.substituted(k, v);
    }
    for (const auto& r : integrability_residual(gs, phi)) {
        if (!r.residual.is_zero())
            throw DomainError("structure not integrable at t0 = " + t0.str(),
                              "(d eta_t^" + std::to_string(r.j) + ")^{0,2} = " + r.residual.str());
    }
    DeformedCoframe cf = deformed_coframe(gs, phi);
    std::vector<InvariantForm> dtable;
    for (int j = 1; j <= gs.dimension(); ++j) {
        InvariantForm in_t = to_deformed_basis(cf, gs.d(cf.eta_t[static_cast<std::size_t>(j - 1)]));
        dtable.push_back(in_t);
    }
    ComplexNilAlgebra out(gs.dimension(), gs.registry(), std::move(dtable), gs.paper_mode());
    ValidationReport rep = out.validate();
    if (!rep.d_squared_all_zero) throw DomainError("internal: pulled-back structure fails d^2 = 0");
    return out;
}

}  // namespace nilform
