#include "session.hpp"

#include "obstruction.hpp"
#include "parse.hpp"

namespace nilform {

namespace {

std::vector<std::string> strings_of(const std::vector<Poly>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& p : v) out.push_back(p.str());
    return out;
}

struct Inputs {
    std::shared_ptr<ParamRegistry> registry;
    ComplexNilAlgebra algebra;
    std::map<int, GaussianRational> subs;
    const Json& request;

    explicit Inputs(const Json& req, LoadedAlgebra la)
        : registry(la.registry), algebra(*la.algebra), request(req) {}

    HermitianMetric metric() const {
        Json m = request.contains("metric") ? request.at("metric") : Json{{"metric", "diagonal"}};
        HermitianMetric hm = load_metric(m, registry, algebra.dimension());
        for (const auto& [k, v] : subs) hm = hm.substituted(k, v);
        return hm;
    }
    VectorForm01 phi_family() const {
        if (!request.contains("phi")) throw ParseError("request: missing \"phi\"", 0);
        VectorForm01 phi = load_phi(request.at("phi"), registry, algebra.dimension());
        for (const auto& [k, v] : subs) phi = phi.substituted(k, v);
        return phi;
    }
    DeformationCurve curve() const {
        if (!request.contains("curve")) throw ParseError("request: missing \"curve\"", 0);
        DeformationCurve c = load_curve(request.at("curve"), registry, algebra.dimension());
        VectorForm01 phi = c.phi();
        for (const auto& [k, v] : subs) {
            if (k == c.t_param()) throw DomainError("cannot substitute the curve parameter");
            phi = phi.substituted(k, v);
        }
        return DeformationCurve(phi, c.t_param());
    }
    // phi'(0) from an explicit "phi" or from the curve
    VectorForm01 phi0() const {
        if (request.contains("phi")) return phi_family();
        DeformationCurve c = curve();
        return c.derivative_at_zero();
    }
    InvariantForm form(const char* key) const {
        if (!request.contains(key)) throw ParseError(std::string("request: missing \"") + key + "\"", 0);
        InvariantForm f = load_form(request.at(key), registry, algebra.dimension());
        for (const auto& [k, v] : subs) f = f.substituted(k, v);
        return f;
    }
    int t_param() const {
        if (request.contains("curve") && request.at("curve").contains("curve_param")) {
            return registry->require(request.at("curve").at("curve_param").get<std::string>());
        }
        int t = registry->find("t");
        if (t < 0 || !registry->is_real(t))
            throw DomainError("jet mode needs a real curve parameter (declare \"t\" in real_params)");
        return t;
    }
};

Json classification_json(const Classification& c) {
    Json out;
    out["abelian"] = c.abelian;
    out["holomorphically_parallelizable"] = c.holomorphically_parallelizable;
    out["nilpotent_coframe"] = c.nilpotent_coframe;
    out["complex_torus"] = c.complex_torus;
    return out;
}

Json validation_json(const ValidationReport& rep) {
    Json out;
    Json d2 = Json::object();
    for (std::size_t j = 0; j < rep.d_squared_zero.size(); ++j)
        d2[std::to_string(j + 1)] = static_cast<bool>(rep.d_squared_zero[j]);
    out["d_squared_zero"] = d2;
    out["d_squared_all_zero"] = rep.d_squared_all_zero;
    switch (rep.nilpotency_method) {
        case NilpotencyCheck::TriangularStructural:
            out["nilpotency_method"] = "triangular-structural";
            out["nilpotent"] = rep.nilpotent;
            break;
        case NilpotencyCheck::NumericLowerCentralSeries:
            out["nilpotency_method"] = "numeric-lower-central-series";
            out["nilpotent"] = rep.nilpotent;
            break;
        case NilpotencyCheck::NotChecked:
            out["nilpotency_method"] = "not-checked";
            break;
    }
    if (rep.paper_mode) {
        out["paper_mode"] = true;
        out["constants_in_Qi"] = rep.constants_in_Qi;
    }
    out["failures"] = rep.failures;
    out["ok"] = rep.ok();
    return out;
}

// a certificate functional is indexed by the monomial basis of the target
// bidegree; only nonzero components are shown
Json functional_json(const std::vector<GaussianRational>& v, int n, int p, int q) {
    Json out = Json::object();
    auto basis = monomial_basis(n, p, q);
    for (std::size_t k = 0; k < v.size() && k < basis.size(); ++k)
        if (!v[k].is_zero()) out[monomial_str(basis[k])] = v[k].str();
    return out;
}

Json class_verdict_json(const ClassVerdict& v, int n, int p, int q) {
    Json out;
    out["verdict"] = v.str();
    if (v.witness) out["witness"] = v.witness->str();
    if (!v.certificate.empty()) out["certificate"] = functional_json(v.certificate, n, p, q);
    return out;
}

Json corollary_json(const CorollaryReport& c, int n) {
    Json out;
    out["route"] = c.route;
    out["vacuous"] = c.vacuous;
    if (c.theta_class) out["theta_class"] = class_verdict_json(*c.theta_class, n, n - 1, n - 1);
    if (c.im_theta_class) out["im_theta_class"] = class_verdict_json(*c.im_theta_class, n, n - 1, n - 1);
    if (c.condition) {
        out["condition"] = c.condition->str();
        out["condition_is_zero"] = c.condition->is_zero();
    }
    if (!c.hypotheses.empty()) out["hypotheses"] = c.hypotheses;
    return out;
}

Json theorem_json(const TheoremReport& t, int n) {
    Json out;
    if (t.omega_prime_supplied) {
        out["omega_prime_supplied"] = true;
        out["holds"] = t.holds;
        return out;
    }
    out["solvable"] = *t.solvable;
    if (t.witness) out["witness"] = t.witness->str();
    if (!t.certificate.empty()) out["certificate"] = functional_json(t.certificate, n, n - 1, n - 1);
    return out;
}

}  // namespace

Json run_request(const Json& request) {
    if (!request.is_object() || !request.contains("command"))
        throw ParseError("request: missing \"command\"", 0);
    std::string command = request.at("command").get<std::string>();
    if (!request.contains("algebra")) throw ParseError("request: missing \"algebra\"", 0);

    Inputs in(request, load_algebra(request.at("algebra")));
    if (request.contains("subs")) {
        for (const auto& [name, val] : request.at("subs").items()) {
            int k = in.registry->require(name);
            in.subs[k] = parse_gaussian(val.get<std::string>());
        }
    }
    for (const auto& [k, v] : in.subs) in.algebra = in.algebra.substituted(k, v);

    Json out;
    out["command"] = command;
    out["invariant_level"] = true;  // every verdict is about invariant forms only

    if (command == "validate") {
        out["validation"] = validation_json(in.algebra.validate());
        out["classification"] = classification_json(in.algebra.classify());
        return out;
    }
    if (command == "classify") {
        out["classification"] = classification_json(in.algebra.classify());
        out["validation_ok"] = in.algebra.validate().ok();
        return out;
    }
    if (command == "metric-check") {
        std::string mode = request.value("mode", "astheno");
        HermitianMetric m = in.metric();
        MetricCheck chk = check_special_metric(in.algebra, m, metric_mode_of(mode));
        out["mode"] = mode;
        out["residual"] = chk.residual.str();
        out["satisfied_identically"] = chk.residual.is_zero();
        out["conditions"] = strings_of(chk.conditions);
        try {
            out["positive_definite"] = m.positive_definite();
        } catch (const RefusedError&) {
            // symbolic metric entries: positivity left undecided
        }
        return out;
    }
    if (command == "integrability") {
        VectorForm01 phi = request.contains("phi") ? in.phi_family() : in.curve().phi();
        Json residuals = Json::array();
        for (const auto& r : integrability_residual(in.algebra, phi)) {
            Json e;
            e["j"] = r.j;
            e["residual"] = r.residual.str();
            residuals.push_back(e);
        }
        out["residuals"] = residuals;
        out["conditions"] = strings_of(integrability_conditions(in.algebra, phi));
        return out;
    }
    if (command == "bc") {
        if (!request.contains("p") || !request.contains("q"))
            throw ParseError("bc: missing \"p\"/\"q\"", 0);
        CohomologySpace sp = bc_space(in.algebra, request.at("p").get<int>(), request.at("q").get<int>());
        out["p"] = sp.p;
        out["q"] = sp.q;
        out["dimension"] = sp.dimension;
        out["algebra_fingerprint"] = sp.algebra_fingerprint;
        Json reps = Json::array();
        for (const auto& r : sp.representatives) reps.push_back(r.str());
        out["representatives"] = reps;
        return out;
    }
    if (command == "bc-class") {
        InvariantForm alpha = in.form("form");
        out["form"] = alpha.str();
        int vp = 0, vq = 0;
        if (!alpha.is_zero()) {
            vp = alpha.terms().begin()->first.p();
            vq = alpha.terms().begin()->first.q();
        }
        out["class"] = class_verdict_json(bc_class_vanishes(in.algebra, alpha), in.algebra.dimension(), vp, vq);
        return out;
    }
    if (command == "harmonic") {
        InvariantForm alpha = in.form("form");
        HermitianMetric m = in.metric();
        bool d_closed = in.algebra.d(alpha).is_zero();
        bool star_cond = in.algebra.del(in.algebra.delbar(hodge_star(m, alpha))).is_zero();
        out["form"] = alpha.str();
        out["d_closed"] = d_closed;
        out["del_delbar_star_zero"] = star_cond;
        out["harmonic"] = d_closed && star_cond;
        return out;
    }
    if (command == "obstruct") {
        HermitianMetric m = in.metric();
        VectorForm01 phi0 = in.phi0();
        ObstructionReport rep = obstruction_report(in.algebra, m, phi0);
        out["phi0"] = phi0.str();
        out["theta"] = rep.theta.str();
        out["theta_is_zero"] = rep.theta.is_zero();
        out["two_i_im_theta"] = rep.two_i_im_theta.str();
        if (rep.monomial_scalar) {
            Json ms;
            ms["monomial"] = monomial_str(rep.monomial_scalar->first);
            ms["scalar"] = rep.monomial_scalar->second.str();
            out["monomial_scalar"] = ms;
        }
        if (rep.pattern) {
            Json p;
            p["scalar"] = rep.pattern->scalar.str();
            p["combination"] = rep.pattern->combination.str();
            p["conj_sign"] = rep.pattern->conj_sign;
            out["pattern"] = p;
        }
        out["corollary"] = corollary_json(rep.corollary, in.algebra.dimension());
        if (rep.theorem) out["theorem"] = theorem_json(*rep.theorem, in.algebra.dimension());
        return out;
    }
    if (command == "theorem-check") {
        HermitianMetric m = in.metric();
        VectorForm01 phi0 = in.phi0();
        std::optional<InvariantForm> omega_prime;
        if (request.contains("omega_prime")) omega_prime = in.form("omega_prime");
        out["theorem"] = theorem_json(theorem_check(in.algebra, m, phi0, omega_prime), in.algebra.dimension());
        return out;
    }
    if (command == "jet-check") {
        HermitianMetric m = in.metric();
        VectorForm01 phi0 = in.phi0();
        InvariantForm omega_prime(in.algebra.dimension());
        if (request.contains("omega_prime")) omega_prime = in.form("omega_prime");
        JetCheck jc = taylor_consistency_check(in.algebra, m, phi0, omega_prime, in.t_param());
        out["holds"] = jc.holds;
        out["value_part"] = jc.value_part.str();
        out["deriv_part"] = jc.deriv_part.str();
        out["expected_value"] = jc.expected_value.str();
        out["expected_deriv"] = jc.expected_deriv.str();
        return out;
    }
    if (command == "pullback") {
        if (!request.contains("at")) throw ParseError("pullback: missing \"at\"", 0);
        GaussianRational t0 = parse_gaussian(request.at("at").get<std::string>());
        DeformationCurve c = in.curve();
        ComplexNilAlgebra g2 = pullback_structure(in.algebra, c, t0);
        out["at"] = t0.str();
        out["algebra"] = algebra_to_json(g2);
        out["validation"] = validation_json(g2.validate());
        return out;
    }
    throw ParseError("unknown command '" + command + "'", 0);
}

std::pair<Status, Json> run_request_caught(const Json& request) {
    try {
        return {Status::Ok, run_request(request)};
    } catch (const ParseError& e) {
        Json err;
        err["status"] = "error";
        err["kind"] = "parse";
        err["message"] = e.what();
        err["position"] = e.position();
        return {Status::ParseFailure, err};
    } catch (const RefusedError& e) {
        Json err;
        err["status"] = "error";
        err["kind"] = "refused";
        err["message"] = e.what();
        return {Status::Refused, err};
    } catch (const DomainError& e) {
        Json err;
        err["status"] = "error";
        err["kind"] = "domain";
        err["message"] = e.what();
        if (!e.detail().empty()) err["detail"] = e.detail();
        return {Status::MathDomain, err};
    } catch (const Json::exception& e) {
        Json err;
        err["status"] = "error";
        err["kind"] = "parse";
        err["message"] = e.what();
        return {Status::ParseFailure, err};
    }
}

}  // namespace nilform
