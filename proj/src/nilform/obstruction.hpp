#pragma once

#include "cohomology.hpp"
#include "deformation.hpp"

namespace nilform {

// Theta = del( phi'(0) _| del(omega^{n-2}) ), bidegree (n-1,n-1).
InvariantForm obstruction_form(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0);

// Theta as scalar * (signed sum of monomials), when it has that shape:
// every nonzero coefficient is +-C for one scalar C.
struct ScalarPattern {
    ParamScalar scalar;         // C
    InvariantForm combination;  // nu with integer +-1 coefficients; Theta = C * nu
    int conj_sign = 0;          // conj(nu) = conj_sign * nu; 0 if neither
};
std::optional<ScalarPattern> scalar_monomial_pattern(const InvariantForm& theta, const RegistryPtr& reg);

struct CorollaryReport {
    std::string route;  // "vacuous" | "numeric" | "symbolic-dichotomy"
    bool vacuous = false;
    // numeric route: class verdicts for Theta and for Im(Theta)
    std::optional<ClassVerdict> theta_class;
    std::optional<ClassVerdict> im_theta_class;
    // symbolic route: normalized necessary-condition polynomial
    std::optional<Poly> condition;
    std::vector<std::string> hypotheses;
};

CorollaryReport corollary_check(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0);

struct TheoremReport {
    bool omega_prime_supplied = false;
    bool holds = false;                    // when omega' supplied: 2i Im Theta == del delbar omega'
    std::optional<bool> solvable;          // otherwise: solvability of del delbar X = 2i Im Theta
    std::optional<InvariantForm> witness;  // a solution X
    std::vector<GaussianRational> certificate;  // unsolvability functional
};

TheoremReport theorem_check(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0,
                            const std::optional<InvariantForm>& omega_prime);

struct ObstructionReport {
    InvariantForm theta;
    InvariantForm two_i_im_theta;  // theta - conj(theta)
    std::optional<ScalarPattern> pattern;
    std::optional<std::pair<FormMonomial, ParamScalar>> monomial_scalar;  // single-monomial case
    CorollaryReport corollary;
    std::optional<TheoremReport> theorem;  // numeric structures only
};

ObstructionReport obstruction_report(const ComplexNilAlgebra& g, const HermitianMetric& m,
                                     const VectorForm01& phi0);

struct JetCheck {
    bool holds = false;
    InvariantForm value_part;       // t^0 coefficient of the composite
    InvariantForm deriv_part;       // t^1 coefficient of the composite
    InvariantForm expected_value;   // del delbar omega^{n-2}
    InvariantForm expected_deriv;   // first-order expansion of the composite
};

// First-order consistency of the deformed-operator composite along
// phi(t) = t phi0 with omega^{n-2}(t) = omega^{n-2} + t omega_prime:
// the t-coefficient of  del_t delbar_t (e(omega^{n-2}(t)))  equals
//   -del(phi0 _| del w) + delbar(conj phi0 _| delbar w) + del delbar omega'
//   + (iota_{phi0} + iota_{conj phi0})(del delbar w),      w = omega^{n-2};
// the last term vanishes exactly when the metric is astheno-Kaehler.
JetCheck taylor_consistency_check(const ComplexNilAlgebra& g, const HermitianMetric& m,
                                  const VectorForm01& phi0, const InvariantForm& omega_prime, int t_param);

}  // namespace nilform
