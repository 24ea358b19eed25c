// Acceptance suite: runs every acceptance criterion at its stated tolerance
// (all checks are exact, zero tolerance) and prints one pass/fail line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "nilform/obstruction.hpp"
#include "nilform/session.hpp"
#include "test_support.hpp"

using namespace nftest;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& note = "") {
    std::printf("%s  criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
                note.empty() ? "" : ("  [" + note + "]").c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Json fixture_request(const std::string& command, const std::string& fixture,
                     std::initializer_list<std::pair<std::string, std::string>> files = {}) {
    Json req;
    req["command"] = command;
    req["algebra"] = load_fixture_json(fixture + "/algebra.json");
    for (const auto& [key, file] : files) req[key] = load_fixture_json(fixture + "/" + file);
    return req;
}

bool same_condition(const RegistryPtr& reg, const std::string& emitted, const ParamScalar& expected) {
    Poly a = normalize_condition(parse_scalar(emitted, reg));
    Poly b = normalize_condition(expected);
    return Poly::compare(a, b) == 0;
}

// --- criterion 1: Example-1 obstruction formula through the CLI surface -----
void criterion1() {
    auto start = Clock::now();
    Json req = fixture_request("obstruct", "ex1_case2", {{"metric", "metric.json"}, {"curve", "curve.json"}});
    auto [status, out] = run_request_caught(req);
    bool ok = status == Status::Ok;
    Fixture f = load_fixture("ex1_case2");
    auto reg = f.registry;
    std::string note;
    if (ok) {
        // Theta is a single multiple of eta^{123|123}
        ok = out["monomial_scalar"]["monomial"] == "e[1,2,3|1,2,3]";
        InvariantForm theta = parse_form(out["theta"].get<std::string>(), reg, 4);
        ok = ok && theta.term_count() == 1;
        // canonical normalization of the emitted defining scalar agrees with
        // the published one: 2(|a7|^2-|a4|^2)(a1 u2/a4)
        ParamScalar emitted = theta.terms().begin()->second;
        ParamScalar published = sc(reg, "2*(a7*conj(a7) - a4*conj(a4))*a1*u2/a4");
        ok = ok && Poly::compare(normalize_condition(emitted), normalize_condition(published)) == 0;
        // the exact ratio between the published display and the composite
        // del(phi'(0) _| del omega^2) is -2, pinned here so nothing hides
        ok = ok && (published == emitted * sc(reg, "-2"));
        note = "published display = -2 * exact composite; scalar pinned";
        // condition exactly as published: (|a4|^2-|a7|^2) Re(a1 u2/a4) = 0
        ParamScalar cond = sc(reg, "(a4*conj(a4) - a7*conj(a7))") * sc(reg, "a1*u2/a4").realpart();
        ok = ok && same_condition(reg, out["corollary"]["condition"].get<std::string>(), cond);
    }
    double secs = seconds_since(start);
    ok = ok && secs < 5.0;
    report(1, "Example-1 obstruction formula and condition (exact, < 5 s)", ok, note);
}

// --- criterion 2: Example-2 obstruction ------------------------------------
void criterion2() {
    auto start = Clock::now();
    Json req = fixture_request("obstruct", "ex2_case2", {{"metric", "metric.json"}, {"curve", "curve.json"}});
    auto [status, out] = run_request_caught(req);
    bool ok = status == Status::Ok;
    Fixture f = load_fixture("ex2_case2");
    auto reg = f.registry;
    if (ok) {
        InvariantForm theta = parse_form(out["theta"].get<std::string>(), reg, 4);
        ParamScalar C = sc(reg, "(b3*conj(b3) - b4*conj(b4))*b1*u2/b4");
        InvariantForm expected(4);
        expected.add_term(FormMonomial{0b0111, 0b0111}, C);
        expected.add_term(FormMonomial{0b0111, 0b1011}, -C);
        expected.add_term(FormMonomial{0b1011, 0b0111}, -C);
        expected.add_term(FormMonomial{0b1011, 0b1011}, C);
        ok = theta == expected;
        ParamScalar cond = sc(reg, "(b3*conj(b3) - b4*conj(b4))") * sc(reg, "b1*u2/b4").realpart();
        ok = ok && same_condition(reg, out["corollary"]["condition"].get<std::string>(), cond);
    }
    double secs = seconds_since(start);
    ok = ok && secs < 5.0;
    report(2, "Example-2 four-term obstruction and condition (exact, < 5 s)", ok);
}

// --- criterion 3: case-(i) vanishing ----------------------------------------
void criterion3() {
    bool ok = true;
    for (const char* name : {"ex1_case1", "ex2_case1"}) {
        Fixture f = load_fixture(name);
        DeformationCurve c = load_curve(load_fixture_json(std::string(name) + "/curve.json"), f.registry, 4);
        InvariantForm theta = obstruction_form(*f.algebra, HermitianMetric::diagonal(4, f.registry),
                                               c.derivative_at_zero());
        ok = ok && theta.is_zero();
    }
    report(3, "case-(i) fixtures give Theta = 0 exactly", ok);
}

// --- criterion 4: astheno condition recovery --------------------------------
void criterion4() {
    bool ok = true;
    {
        Json req = fixture_request("metric-check", "ex1_general", {{"metric", "metric.json"}});
        req["mode"] = "astheno";
        auto [status, out] = run_request_caught(req);
        ok = status == Status::Ok && out["conditions"].size() == 1;
        Fixture f = load_fixture("ex1_general");
        ParamScalar expected =
            sc(f.registry,
               "a1*conj(a1) + a2*conj(a2) + a4*conj(a4) + a5*conj(a5) + a6*conj(a6) + a7*conj(a7) + "
               "a9*conj(a9) + a10*conj(a10) + a11*conj(a11) "
               "- (a3*conj(a8) + conj(a3)*a8 + a3*conj(a12) + conj(a3)*a12 + a8*conj(a12) + conj(a8)*a12)");
        ok = ok && same_condition(f.registry, out["conditions"][0].get<std::string>(), expected);
    }
    {
        Json req = fixture_request("metric-check", "ex2_general", {{"metric", "metric.json"}});
        req["mode"] = "astheno";
        auto [status, out] = run_request_caught(req);
        Fixture f = load_fixture("ex2_general");
        auto reg = f.registry;
        ok = ok && status == Status::Ok && out["conditions"].size() == 3;
        std::vector<ParamScalar> expected = {
            sc(reg, "b5*conj(b2) + conj(b5)*b2 - b1*conj(b1) - b3*conj(b3) - b4*conj(b4)"),
            sc(reg, "b1*conj(b1) + b3*conj(b3) + b4*conj(b4) - b5*conj(a2) - b2*conj(a5)"),
            sc(reg, "a5*conj(a2) + conj(a5)*a2 - b1*conj(b1) - b3*conj(b3) - b4*conj(b4)")};
        if (ok) {
            for (const auto& e : expected) {
                Poly p = normalize_condition(e);
                Poly pc = p.conj().monic();
                Poly want = Poly::compare(p, pc) <= 0 ? p : pc;
                bool found = false;
                for (const auto& c : out["conditions"])
                    if (Poly::compare(normalize_condition(parse_scalar(c.get<std::string>(), reg)), want) == 0)
                        found = true;
                ok = ok && found;
            }
        }
    }
    report(4, "astheno conditions: Example-1 identity and the three Example-2 conditions", ok);
}

// --- criterion 5: integrability systems --------------------------------------
void criterion5() {
    bool ok = true;
    {
        Json req = fixture_request("integrability", "ex1_general", {{"phi", "family.json"}});
        auto [status, out] = run_request_caught(req);
        Fixture f = load_fixture("ex1_general");
        ok = status == Status::Ok && out["conditions"].size() == 3;
        const char* polys[] = {"a1*t1*t2 - a4*t1 + a7*t2", "a2*t1*t3 - a5*t1 + a10*t3",
                               "a6*t2*t3 - a9*t2 + a11*t3"};
        for (const char* p : polys) {
            Poly want = normalize_condition(sc(f.registry, p));
            Poly wc = want.conj().monic();
            if (Poly::compare(wc, want) < 0) want = wc;
            bool found = false;
            if (ok)
                for (const auto& c : out["conditions"])
                    if (Poly::compare(normalize_condition(parse_scalar(c.get<std::string>(), f.registry)),
                                      want) == 0)
                        found = true;
            ok = ok && found;
        }
    }
    {
        Json req = fixture_request("integrability", "ex2_general", {{"phi", "family.json"}});
        auto [status, out] = run_request_caught(req);
        Fixture f = load_fixture("ex2_general");
        ok = ok && status == Status::Ok && out["conditions"].size() == 1;
        if (ok) {
            Poly want = normalize_condition(sc(f.registry, "b1*t1*t2 - b3*t1 + b4*t2"));
            Poly wc = want.conj().monic();
            if (Poly::compare(wc, want) < 0) want = wc;
            ok = Poly::compare(
                     normalize_condition(parse_scalar(out["conditions"][0].get<std::string>(), f.registry)),
                     want) == 0;
        }
    }
    report(5, "integrability systems: three Example-1 polynomials, one for Example-2", ok);
}

// --- criterion 6: the Lemma suite --------------------------------------------
void criterion6() {
    bool ok = true;
    // (1) single top monomial, symbolically
    {
        Fixture f = load_fixture("ex1_general");
        auto reg = f.registry;
        VectorForm01 phi0(4, reg);
        phi0.set_entry(1, 1, sc(reg, "u1"));
        phi0.set_entry(2, 2, sc(reg, "u2"));
        phi0.set_entry(3, 3, sc(reg, "u3"));
        InvariantForm theta = obstruction_form(*f.algebra, HermitianMetric::diagonal(4, reg), phi0);
        ok = theta.term_count() == 1 && theta.terms().begin()->first == FormMonomial{0b0111, 0b0111};
    }
    // (1) 50 random numeric 5-dimensional analogues
    {
        Rng rng(5150);
        auto reg = make_registry({});
        for (int k = 0; k < 50 && ok; ++k) {
            InvariantForm d5(5);
            for (int a = 1; a <= 4; ++a) {
                for (int b = a + 1; b <= 4; ++b)
                    if (rng.uniform(0, 1))
                        d5.add_term(FormMonomial{(1u << (a - 1)) | (1u << (b - 1)), 0},
                                    ParamScalar::constant(reg, rng.rational()));
                for (int b = 1; b <= 4; ++b)
                    if (rng.uniform(0, 1))
                        d5.add_term(FormMonomial{1u << (a - 1), 1u << (b - 1)},
                                    ParamScalar::constant(reg, rng.rational()));
            }
            std::vector<InvariantForm> d(5, InvariantForm(5));
            d[4] = d5;
            ComplexNilAlgebra g(5, reg, d);
            VectorForm01 phi0(5, reg);
            for (int j = 1; j <= 5; ++j) phi0.set_entry(j, j, ParamScalar::constant(reg, rng.rational()));
            InvariantForm theta = obstruction_form(g, HermitianMetric::diagonal(5, reg), phi0);
            for (const auto& [m, c] : theta.terms())
                ok = ok && m == FormMonomial{0b01111, 0b01111};
        }
    }
    // (2) abelian implies Theta = 0, symbolically
    {
        Fixture f = load_fixture("ex1_general");
        auto reg = f.registry;
        ComplexNilAlgebra ab = f.algebra->substituted(reg->require("a1"), GaussianRational(0))
                                   .substituted(reg->require("a2"), GaussianRational(0))
                                   .substituted(reg->require("a6"), GaussianRational(0));
        VectorForm01 phi0(4, reg);
        phi0.set_entry(1, 1, sc(reg, "u1"));
        phi0.set_entry(2, 2, sc(reg, "u2"));
        phi0.set_entry(3, 3, sc(reg, "u3"));
        ok = ok && obstruction_form(ab, HermitianMetric::diagonal(4, reg), phi0).is_zero();
    }
    // (3) 30 random numeric instances: nonzero class iff SKT
    {
        Rng rng(33);
        int agree = 0;
        for (int k = 0; k < 30; ++k) {
            Json j;
            j["n"] = 4;
            std::string a4 = rng.rational().str(), a7 = rng.rational().str();
            GaussianRational n2 = GaussianRational(1) + parse_gaussian(a4) * parse_gaussian(a4).conj() +
                                  parse_gaussian(a7) * parse_gaussian(a7).conj();
            std::string a8;
            if (k % 2 == 0) {
                a8 = GaussianRational(n2.re() / 2, Rational(rng.uniform(-2, 2))).str();  // SKT
            } else {
                a8 = GaussianRational(n2.re() / 2 + 1).str();  // not SKT
            }
            j["d"] = {{"4", "e[1,2|] + e[1|1] + (" + a4 + ")*e[1|2] + (" + a7 + ")*e[2|1] + (" + a8 +
                               ")*e[2|2]"}};
            LoadedAlgebra la = load_algebra(j);
            HermitianMetric m = HermitianMetric::diagonal(4, la.registry);
            bool skt = check_special_metric(*la.algebra, m, MetricMode::SKT).residual.is_zero();
            ClassVerdict v = bc_class_vanishes(
                *la.algebra, parse_form("e[1,2,3|1,2,3]", la.registry, 4));
            if ((v.kind == ClassVerdict::NonzeroClass) == skt) ++agree;
        }
        ok = ok && agree == 30;
    }
    report(6, "Lemma suite: top-monomial shape (n=4 symbolic, 50x n=5), abelian vanishing, 30/30 SKT dichotomy",
           ok);
}

// --- criterion 7: jet identity ------------------------------------------------
void criterion7() {
    bool ok = true;
    // every fixture that carries a curve
    for (const char* name : {"ex1_case1", "ex1_case2", "ex1_case2_numeric", "ex2_case1", "ex2_case2",
                             "ex2_case2_numeric", "torus_n4"}) {
        Fixture f = load_fixture(name);
        auto reg = f.registry;
        DeformationCurve c = load_curve(load_fixture_json(std::string(name) + "/curve.json"), reg, 4);
        JetCheck jc = taylor_consistency_check(*f.algebra, HermitianMetric::diagonal(4, reg),
                                               c.derivative_at_zero(), InvariantForm(4), c.t_param());
        ok = ok && jc.holds;
    }
    // 100 randomized numeric (structure, phi'(0), omega') triples
    Rng rng(777);
    for (int trial = 0; trial < 100 && ok; ++trial) {
        Json j;
        j["n"] = 4;
        j["real_params"] = {"t"};
        auto rnd_form = [&](int top) {
            std::string s = "(" + rng.rational().str() + ")*e[1,2|]";
            for (int a = 1; a <= top; ++a)
                for (int b = 1; b <= top; ++b)
                    s += " + (" + rng.rational().str() + ")*e[" + std::to_string(a) + "|" +
                         std::to_string(b) + "]";
            return s;
        };
        if (trial % 2 == 0) j["d"] = {{"4", rnd_form(3)}};
        else j["d"] = {{"3", rnd_form(2)}, {"4", rnd_form(2)}};
        LoadedAlgebra la = load_algebra(j);
        auto reg = la.registry;
        VectorForm01 phi0(4, reg);
        for (int a = 1; a <= 4; ++a)
            for (int b = 1; b <= 4; ++b)
                if (rng.uniform(0, 2) == 0) phi0.set_entry(a, b, ParamScalar::constant(reg, rng.rational()));
        InvariantForm omega_prime = rng.form(reg, 4, 2, 2, 4, true);
        JetCheck jc = taylor_consistency_check(*la.algebra, HermitianMetric::diagonal(4, reg), phi0,
                                               omega_prime, reg->require("t"));
        ok = ok && jc.holds;
    }
    report(7, "jet identity on every fixture and 100 randomized triples (exact)", ok);
}

// --- criterion 8: operator laws ------------------------------------------------
void criterion8() {
    bool ok = true;
    std::vector<std::string> names = {"ex1_general", "ex1_case1", "ex1_case2", "ex1_case2_numeric",
                                      "ex2_general", "ex2_case1", "ex2_case2", "ex2_case2_numeric",
                                      "torus_n3",   "torus_n4"};
    Rng rng(88);
    for (const auto& name : names) {
        Fixture f = load_fixture(name);
        auto reg = f.registry;
        const ComplexNilAlgebra& g = *f.algebra;
        int n = g.dimension();
        for (int p = 0; p <= n && ok; ++p) {
            for (int q = 0; q <= n && ok; ++q) {
                for (const auto& m : monomial_basis(n, p, q)) {
                    InvariantForm a =
                        InvariantForm::monomial(n, m, ParamScalar::constant(reg, GaussianRational(1)));
                    ok = ok && g.del(g.del(a)).is_zero() && g.delbar(g.delbar(a)).is_zero() &&
                         (g.del(g.delbar(a)) + g.delbar(g.del(a))).is_zero() &&
                         g.d(a.conj()) == g.d(a).conj();
                }
            }
        }
        // 50 random Leibniz pairs per fixture (500 across the corpus)
        for (int k = 0; k < 50 && ok; ++k) {
            int p1 = rng.uniform(0, 2), q1 = rng.uniform(0, 2);
            InvariantForm a = rng.form(reg, n, p1, q1, 2, true);
            InvariantForm b = rng.form(reg, n, rng.uniform(0, 2), rng.uniform(0, 2), 2, true);
            InvariantForm tail = wedge(a, g.d(b));
            if ((p1 + q1) % 2 != 0) tail = -tail;
            ok = ok && g.d(wedge(a, b)) == wedge(g.d(a), b) + tail;
        }
    }
    report(8, "operator laws on all fixtures and 500 random forms (exact)", ok);
}

// --- criterion 9: torus baseline -------------------------------------------------
void criterion9() {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    bool ok = true;
    for (const char* name : {"torus_n3", "torus_n4"}) {
        Fixture f = load_fixture(name);
        int n = f.algebra->dimension();
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q)
                ok = ok && bc_space(*f.algebra, p, q).dimension == binom(n, p) * binom(n, q);
    }
    report(9, "torus Bott-Chern dimensions C(n,p)C(n,q), n = 3,4 (exact)", ok);
}

// --- criterion 10: oracle equivalence for the deformed operators ----------------
void criterion10() {
    Rng rng(1010);
    auto reg = make_registry({});
    int checked = 0;
    bool ok = true;
    while (checked < 200 && ok) {
        // random reduced Example-1 instance and an exact integrable point
        GaussianRational a1 = rng.rational(), a4 = rng.rational_nonzero(), a7 = rng.rational();
        GaussianRational a3 = rng.rational(), a8 = rng.rational();
        Json j;
        j["n"] = 4;
        j["d"] = {{"4", "(" + a1.str() + ")*e[1,2|] + (" + a3.str() + ")*e[1|1] + (" + a4.str() +
                            ")*e[1|2] + (" + a7.str() + ")*e[2|1] + (" + a8.str() + ")*e[2|2]"}};
        LoadedAlgebra la = load_algebra(j);
        auto lreg = la.registry;

        GaussianRational t2(Rational(rng.uniform(-1, 1), rng.uniform(2, 4)));
        GaussianRational den = a4 - a1 * t2;
        if (den.is_zero()) continue;
        GaussianRational t1 = a7 * t2 / den;
        if (t1.norm() >= 1) continue;  // keep the coframe change invertible
        GaussianRational t3(Rational(rng.uniform(-1, 1), rng.uniform(2, 5)));
        VectorForm01 phi(4, lreg);
        phi.set_entry(1, 1, ParamScalar::constant(lreg, t1));
        phi.set_entry(2, 2, ParamScalar::constant(lreg, t2));
        phi.set_entry(3, 3, ParamScalar::constant(lreg, t3));
        bool integrable = true;
        for (const auto& r : integrability_residual(*la.algebra, phi)) integrable = integrable && r.residual.is_zero();
        if (!integrable) continue;

        DeformedCoframe cf = deformed_coframe(*la.algebra, phi);
        int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
        InvariantForm alpha = rng.form(lreg, 4, p, q, 2, true);

        InvariantForm lhs = del_t(*la.algebra, phi, alpha);
        InvariantForm d_ext = la.algebra->d(extension_map(phi, alpha));
        InvariantForm rhs = from_deformed_basis(cf, to_deformed_basis(cf, d_ext).project(p + 1, q));
        ok = ok && lhs == rhs;

        InvariantForm lhsb = delbar_t(*la.algebra, phi, alpha);
        InvariantForm rhsb = from_deformed_basis(cf, to_deformed_basis(cf, d_ext).project(p, q + 1));
        ok = ok && lhsb == rhsb;
        ++checked;
    }
    report(10, "deformed-operator formulas equal the projection route at 200 integrable points (exact)",
           ok && checked == 200);
}

// --- criterion 11: theorem and corollary consistency ------------------------------
void criterion11() {
    Fixture f = load_fixture("ex1_case2_numeric");
    auto reg = f.registry;
    HermitianMetric m = HermitianMetric::diagonal(4, reg);
    DeformationCurve c = load_curve(load_fixture_json("ex1_case2_numeric/curve.json"), reg, 4);

    VectorForm01 phi_1 = c.derivative_at_zero()
                             .substituted(reg->require("u2"), GaussianRational(1))
                             .substituted(reg->require("u3"), GaussianRational(0));
    TheoremReport t1 = theorem_check(*f.algebra, m, phi_1, std::nullopt);
    CorollaryReport c1 = corollary_check(*f.algebra, m, phi_1);
    bool ok = t1.solvable.has_value() && !*t1.solvable && c1.im_theta_class &&
              c1.im_theta_class->kind == ClassVerdict::NonzeroClass;

    VectorForm01 phi_i = c.derivative_at_zero()
                             .substituted(reg->require("u2"), GaussianRational::i())
                             .substituted(reg->require("u3"), GaussianRational(0));
    TheoremReport t2 = theorem_check(*f.algebra, m, phi_i, std::nullopt);
    ok = ok && t2.solvable.has_value() && *t2.solvable && t2.witness.has_value();
    if (ok) {
        InvariantForm theta = obstruction_form(*f.algebra, m, phi_i);
        ok = f.algebra->del(f.algebra->delbar(*t2.witness)) == theta - theta.conj();
    }
    report(11, "theorem UNSOLVABLE at u2=1 with NonzeroClass Im-part; SOLVABLE at u2=i with verified witness",
           ok);
}

}  // namespace

int main() {
    auto start = Clock::now();
    std::vector<std::pair<int, std::function<void()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
        {9, criterion9}, {10, criterion10}, {11, criterion11}};
    for (auto& [index, run] : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(index, std::string("unexpected exception: ") + e.what(), false);
        }
    }
    std::printf("%d/11 criteria passed in %.2f s\n", 11 - failures, seconds_since(start));
    return failures == 0 ? 0 : 1;
}
