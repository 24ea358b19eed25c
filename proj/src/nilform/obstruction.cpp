#include "obstruction.hpp"

#include <algorithm>

namespace nilform {

InvariantForm obstruction_form(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0) {
    if (g.dimension() != m.dimension()) throw DimensionMismatch(g.dimension(), m.dimension());
    if (g.dimension() != phi0.dimension()) throw DimensionMismatch(g.dimension(), phi0.dimension());
    InvariantForm w = m.fundamental_power(g.dimension() - 2);
    return g.del(contract(phi0, g.del(w)));
}

std::optional<ScalarPattern> scalar_monomial_pattern(const InvariantForm& theta, const RegistryPtr& reg) {
    if (theta.is_zero()) return std::nullopt;
    ScalarPattern pat;
    pat.scalar = theta.terms().begin()->second;
    pat.combination = InvariantForm(theta.dimension());
    ParamScalar one = ParamScalar::constant(reg, GaussianRational(1));
    for (const auto& [m, c] : theta.terms()) {
        ParamScalar r = c / pat.scalar;
        if (r == one) {
            pat.combination.add_term(m, one);
        } else if (r == -one) {
            pat.combination.add_term(m, -one);
        } else {
            return std::nullopt;
        }
    }
    InvariantForm cc = pat.combination.conj();
    if (cc == pat.combination) pat.conj_sign = 1;
    else if (cc == -pat.combination) pat.conj_sign = -1;
    return pat;
}

namespace {

// is p in the Q(i)-linear span of basis polynomials?
bool in_linear_span(const Poly& p, const std::vector<Poly>& basis) {
    if (p.is_zero()) return true;
    // collect monomials
    std::map<Expo, std::size_t, GradedLex> index;
    auto touch = [&](const Poly& q) {
        for (const auto& [e, c] : q.terms())
            if (!index.count(e)) index.emplace(e, index.size());
    };
    touch(p);
    for (const auto& b : basis) touch(b);
    QiMatrix A(index.size(), basis.size());
    std::vector<GaussianRational> rhs(index.size(), GaussianRational(0));
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (const auto& [e, v] : basis[c].terms()) A.at(index.at(e), c) = v;
    for (const auto& [e, v] : p.terms()) rhs[index.at(e)] = v;
    return solve_exact(A, rhs).solvable;
}

// single twisted top row: d eta^j = 0 for j < n and d eta^n supported on
// indices below n (a torus factor times a rank-one extension)
bool single_top_row(const ComplexNilAlgebra& g) {
    int n = g.dimension();
    for (int j = 1; j < n; ++j)
        if (!g.d_eta(j).is_zero()) return false;
    uint32_t top = 1u << (n - 1);
    for (const auto& [m, c] : g.d_eta(n).terms())
        if ((m.holo | m.anti) & top) return false;
    return !g.d_eta(n).is_zero();
}

std::vector<std::string> poly_strings(const std::vector<Poly>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

}  // namespace

CorollaryReport corollary_check(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0) {
    CorollaryReport rep;
    InvariantForm theta = obstruction_form(g, m, phi0);
    if (theta.is_zero()) {
        rep.route = "vacuous";
        rep.vacuous = true;
        rep.condition = Poly(g.registry());
        return rep;
    }

    if (g.is_numeric() && theta.is_numeric()) {
        rep.route = "numeric";
        rep.theta_class = bc_class_vanishes(g, theta);
        // Im Theta = (Theta - conj Theta) / 2i
        ParamScalar inv_2i =
            ParamScalar::constant(g.registry(), GaussianRational(Rational(0), Rational(-1, 2)));
        InvariantForm im_theta = (theta - theta.conj()).scaled(inv_2i);
        rep.im_theta_class = bc_class_vanishes(g, im_theta);
        return rep;
    }

    // symbolic route: Theta = C * nu with nu a signed monomial combination whose
    // class-nonvanishing is certified under the metric hypotheses
    auto pat = scalar_monomial_pattern(theta, g.registry());
    if (!pat || pat->conj_sign == 0)
        throw RefusedError("symbolic corollary verdict refused: no scalar*combination dichotomy pattern applies");

    // necessary condition for [Im Theta] = 0 given [nu] != 0
    ParamScalar cond_scalar = pat->conj_sign < 0 ? pat->scalar.realpart() : pat->scalar.imagpart();
    rep.condition = normalize_condition(cond_scalar);
    rep.route = "symbolic-dichotomy";

    std::vector<Poly> astheno = check_special_metric(g, m, MetricMode::Astheno).conditions;
    for (const auto& p : astheno)
        if (p.is_constant() && !p.is_zero())
            throw DomainError(
                "the metric is not astheno-Kahler for any parameter values; the obstruction hypotheses fail");
    rep.hypotheses.push_back("astheno-Kahler hypothesis: the following conditions vanish");
    for (const auto& s : poly_strings(astheno)) rep.hypotheses.push_back("  " + s);
    // a vanishing condition vanishes together with its conjugate
    std::vector<Poly> astheno_span = astheno;
    for (const auto& p : astheno) astheno_span.push_back(p.conj().monic());

    // certify [nu] != 0
    if (!g.d(pat->combination).is_zero())
        throw RefusedError("symbolic corollary verdict refused: the monomial combination is not d-closed");
    bool justified = false;
    if (m.is_unit_diagonal()) {
        InvariantForm harm = g.del(g.delbar(hodge_star(m, pat->combination)));
        bool member = true;
        for (const auto& [mm, c] : harm.terms())
            if (!in_linear_span(normalize_condition(c), astheno_span)) member = false;
        if (member) {
            justified = true;
            rep.hypotheses.push_back(
                "class nonvanishing: the combination is Bott-Chern harmonic under the astheno hypothesis "
                "(d-closed, and del delbar * of it lies in the span of the astheno conditions)");
        }
    }
    if (!justified && single_top_row(g)) {
        std::vector<Poly> skt = check_special_metric(g, m, MetricMode::SKT).conditions;
        rep.hypotheses.push_back("SKT dichotomy: the class of the top combination is nonzero iff the SKT residual vanishes");
        bool skt_impossible = false;
        for (const auto& p : skt)
            if (p.is_constant() && !p.is_zero()) skt_impossible = true;
        if (skt_impossible) {
            // the SKT residual is nonzero identically, so the class vanishes
            // and the corollary imposes nothing
            rep.condition = Poly(g.registry());
            rep.hypotheses.push_back("the SKT residual is nonzero for this structure: the class vanishes and no condition arises");
            return rep;
        }
        bool skt_from_astheno = true;
        for (const auto& p : skt)
            if (!in_linear_span(p, astheno_span)) skt_from_astheno = false;
        if (skt_from_astheno) {
            rep.hypotheses.push_back("SKT follows from the astheno hypothesis for this family");
            justified = true;
        } else {
            rep.hypotheses.push_back("SKT hypothesis (additional): the following conditions vanish");
            for (const auto& s : poly_strings(skt)) rep.hypotheses.push_back("  " + s);
            justified = true;
        }
    }
    if (!justified)
        throw RefusedError("symbolic corollary verdict refused: class nonvanishing not certified by a known pattern");

    if (!pat->scalar.den().is_constant())
        rep.hypotheses.push_back("cleared nonvanishing denominator: " + pat->scalar.den().str());
    return rep;
}

TheoremReport theorem_check(const ComplexNilAlgebra& g, const HermitianMetric& m, const VectorForm01& phi0,
                            const std::optional<InvariantForm>& omega_prime) {
    require_numeric(g);
    if (!phi0.is_numeric()) throw RefusedError("theorem check requires a numeric phi'(0)");
    int n = g.dimension();
    InvariantForm theta = obstruction_form(g, m, phi0);
    InvariantForm rhs = theta - theta.conj();  // 2i Im Theta
    TheoremReport rep;
    if (omega_prime) {
        rep.omega_prime_supplied = true;
        if (!omega_prime->is_zero() && !omega_prime->homogeneous(n - 2, n - 2))
            throw DomainError("omega' must be an invariant (n-2,n-2)-form");
        rep.holds = (g.del(g.delbar(*omega_prime)) == rhs);
        return rep;
    }
    // decide solvability of del delbar X = 2i Im Theta over invariant (n-2,n-2) forms
    auto src = monomial_basis(n, n - 2, n - 2);
    auto dst = monomial_basis(n, n - 1, n - 1);
    QiMatrix M(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        InvariantForm img = g.del(g.delbar(InvariantForm::monomial(
            n, src[c], ParamScalar::constant(g.registry(), GaussianRational(1)))));
        for (std::size_t r = 0; r < dst.size(); ++r) {
            const ParamScalar* v = img.coefficient(dst[r]);
            M.at(r, c) = v ? v->constant_value() : GaussianRational(0);
        }
    }
    std::vector<GaussianRational> b(dst.size(), GaussianRational(0));
    for (std::size_t r = 0; r < dst.size(); ++r) {
        const ParamScalar* v = rhs.coefficient(dst[r]);
        if (v) b[r] = v->constant_value();
    }
    LinearSolve s = solve_exact(M, b);
    rep.solvable = s.solvable;
    if (s.solvable) {
        InvariantForm x(n);
        for (std::size_t c = 0; c < src.size(); ++c)
            if (!s.solution[c].is_zero())
                x.add_term(src[c], ParamScalar::constant(g.registry(), s.solution[c]));
        if (!(g.del(g.delbar(x)) == rhs)) throw DomainError("internal: theorem witness verification failed");
        rep.witness = x;
    } else {
        rep.certificate = s.certificate;
    }
    return rep;
}

ObstructionReport obstruction_report(const ComplexNilAlgebra& g, const HermitianMetric& m,
                                     const VectorForm01& phi0) {
    ObstructionReport rep;
    rep.theta = obstruction_form(g, m, phi0);
    rep.two_i_im_theta = rep.theta - rep.theta.conj();
    rep.pattern = scalar_monomial_pattern(rep.theta, g.registry());
    if (rep.theta.term_count() == 1) {
        const auto& [mm, c] = *rep.theta.terms().begin();
        rep.monomial_scalar = std::make_pair(mm, c);
    }
    rep.corollary = corollary_check(g, m, phi0);
    if (g.is_numeric() && phi0.is_numeric()) rep.theorem = theorem_check(g, m, phi0, std::nullopt);
    return rep;
}

namespace {

// Forms over the jet ring (value + t * deriv, t^2 = 0). Along phi(t) = t phi0
// every ingredient of the deformed-operator composites is polynomial in t, so
// computing in this quotient is exact and cheap: the operators (I - phi phibar)
// and their inverses are the identity here since phi phibar = O(t^2).
struct JetForm {
    InvariantForm value, deriv;

    JetForm operator+(const JetForm& o) const { return {value + o.value, deriv + o.deriv}; }
    JetForm operator-(const JetForm& o) const { return {value - o.value, deriv - o.deriv}; }
};

struct JetPipeline {
    const ComplexNilAlgebra& g;
    const VectorForm01& phi0;  // phi(t) = t phi0

    JetForm d(const JetForm& a) const { return {g.d(a.value), g.d(a.deriv)}; }
    JetForm del(const JetForm& a) const { return {g.del(a.value), g.del(a.deriv)}; }
    JetForm delbar(const JetForm& a) const { return {g.delbar(a.value), g.delbar(a.deriv)}; }
    // contraction by t phi0 and its conjugate
    JetForm iota(const JetForm& a) const { return {InvariantForm(g.dimension()), contract(phi0, a.value)}; }
    JetForm iota_bar(const JetForm& a) const {
        return {InvariantForm(g.dimension()), contract_conj(phi0, a.value)};
    }
    // e^{iota_phi | iota_phibar} = (I + t(phi0 + conj phi0)) slotwise; the
    // t-linear slot replacement is exactly iota_{phi0} + iota_{conj phi0}
    JetForm extend(const JetForm& a) const {
        return {a.value, a.deriv + contract(phi0, a.value) + contract_conj(phi0, a.value)};
    }

    // del_t payload: (I-phi phibar)^{-1} F ([delbar, iota_phibar] + del) (I-phi phibar) F,
    // with both outer factors the identity mod t^2
    JetForm del_t_payload(const JetForm& a) const {
        JetForm commutator = delbar(iota_bar(a)) - iota_bar(delbar(a));
        return commutator + del(a);
    }
    JetForm delbar_t_payload(const JetForm& a) const {
        JetForm commutator = del(iota(a)) - iota(del(a));
        return commutator + delbar(a);
    }
};

}  // namespace

JetCheck taylor_consistency_check(const ComplexNilAlgebra& g, const HermitianMetric& m,
                                  const VectorForm01& phi0, const InvariantForm& omega_prime, int t_param) {
    const RegistryPtr& reg = g.registry();
    if (!reg->is_real(t_param))
        throw DomainError("jet check requires a real curve parameter");
    int n = g.dimension();
    InvariantForm w = m.fundamental_power(n - 2);
    if (!omega_prime.is_zero() && !omega_prime.homogeneous(n - 2, n - 2))
        throw DomainError("omega' must be an invariant (n-2,n-2)-form");

    JetPipeline jp{g, phi0};
    JetForm w_t{w, omega_prime};
    JetForm full = jp.extend(jp.del_t_payload(jp.delbar_t_payload(w_t)));

    JetCheck out;
    out.value_part = full.value;
    out.deriv_part = full.deriv;

    out.expected_value = g.del(g.delbar(w));
    InvariantForm ddw = out.expected_value;
    out.expected_deriv = -g.del(contract(phi0, g.del(w))) + g.delbar(contract_conj(phi0, g.delbar(w))) +
                         g.del(g.delbar(omega_prime)) + contract(phi0, ddw) + contract_conj(phi0, ddw);
    out.holds = (out.value_part == out.expected_value) && (out.deriv_part == out.expected_deriv);
    return out;
}

}  // namespace nilform
