#include <doctest.h>

#include "nilform/cohomology.hpp"
#include "nilform/metric.hpp"
#include "test_support.hpp"

using namespace nftest;

namespace {

// linear-change oracle for pullback: solve for the structure constants of
// d eta_t^j by expanding candidate eta_t-monomials in the eta basis
InvariantForm solve_pullback(const ComplexNilAlgebra& g, const DeformedCoframe& cf, int j) {
    int n = g.dimension();
    const RegistryPtr& reg = g.registry();
    std::vector<FormMonomial> candidates;
    for (const auto& m : monomial_basis(n, 2, 0)) candidates.push_back(m);
    for (const auto& m : monomial_basis(n, 1, 1)) candidates.push_back(m);
    std::vector<FormMonomial> target;
    for (const auto& m : monomial_basis(n, 2, 0)) target.push_back(m);
    for (const auto& m : monomial_basis(n, 1, 1)) target.push_back(m);
    for (const auto& m : monomial_basis(n, 0, 2)) target.push_back(m);

    QiMatrix A(target.size(), candidates.size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        // candidate monomial written in the eta_t symbols, expanded into eta
        InvariantForm expanded = from_deformed_basis(
            cf, InvariantForm::monomial(n, candidates[c], ParamScalar::constant(reg, GaussianRational(1))));
        for (std::size_t r = 0; r < target.size(); ++r) {
            const ParamScalar* v = expanded.coefficient(target[r]);
            A.at(r, c) = v ? v->constant_value() : GaussianRational(0);
        }
    }
    InvariantForm d_eta_t = g.d(cf.eta_t[static_cast<std::size_t>(j - 1)]);
    std::vector<GaussianRational> b(target.size(), GaussianRational(0));
    for (std::size_t r = 0; r < target.size(); ++r) {
        const ParamScalar* v = d_eta_t.coefficient(target[r]);
        if (v) b[r] = v->constant_value();
    }
    LinearSolve s = solve_exact(A, b);
    REQUIRE(s.solvable);
    InvariantForm out(n);
    for (std::size_t c = 0; c < candidates.size(); ++c)
        if (!s.solution[c].is_zero())
            out.add_term(candidates[c], ParamScalar::constant(reg, s.solution[c]));
    return out;
}

}  // namespace

TEST_CASE("deformed coframe: Example 1 family") {
    Fixture f = load_fixture("ex1_general");
    auto reg = f.registry;
    VectorForm01 phi = load_phi(load_fixture_json("ex1_general/family.json"), reg, 4);
    DeformedCoframe cf = deformed_coframe(*f.algebra, phi);

    CHECK(cf.eta_t[0] == fm(reg, 4, "e[1|] + t1*e[|1]"));
    CHECK(cf.eta_t[1] == fm(reg, 4, "e[2|] + t2*e[|2]"));
    CHECK(cf.eta_t[2] == fm(reg, 4, "e[3|] + t3*e[|3]"));
    CHECK(cf.eta_t[3] == fm(reg, 4, "e[4|]"));

    // inverse: eta^1 = (eta_t^1 - t1 etabar_t^1)/(1 - |t1|^2); the scale factor
    // arises from the matrix inverse, not as an independent symbol
    ParamScalar T1 = sc(reg, "1/(1 - t1*conj(t1))");
    CHECK(cf.eta_in_t[0] == fm(reg, 4, "e[1|] - t1*e[|1]").scaled(T1));
    CHECK(cf.eta_in_t[3] == fm(reg, 4, "e[4|]"));

    // composing forward and inverse is the identity
    Rng rng(31);
    for (int k = 0; k < 30; ++k) {
        InvariantForm a = rng.form(reg, 4, rng.uniform(0, 2), rng.uniform(0, 2), 2, true);
        CHECK(from_deformed_basis(cf, to_deformed_basis(cf, a)) == a);
    }

    // phi = 0: the coframe is unchanged
    DeformedCoframe cf0 = deformed_coframe(*f.algebra, VectorForm01(4, reg));
    for (int j = 0; j < 4; ++j) CHECK(cf0.eta_t[static_cast<std::size_t>(j)] == cf0.eta_in_t[static_cast<std::size_t>(j)]);

    // the coframe-change determinant is the product of the diagonal factors
    CHECK(cf.change.determinant() ==
          sc(reg, "(1 - t1*conj(t1))*(1 - t2*conj(t2))*(1 - t3*conj(t3))"));
}

TEST_CASE("deformed coframe: Example 2 family keeps eta^3, eta^4") {
    Fixture f = load_fixture("ex2_general");
    VectorForm01 phi = load_phi(load_fixture_json("ex2_general/family.json"), f.registry, 4);
    DeformedCoframe cf = deformed_coframe(*f.algebra, phi);
    CHECK(cf.eta_t[2] == fm(f.registry, 4, "e[3|]"));
    CHECK(cf.eta_t[3] == fm(f.registry, 4, "e[4|]"));
}

TEST_CASE("integrability residuals") {
    Fixture f = load_fixture("ex1_general");
    auto reg = f.registry;
    VectorForm01 phi = load_phi(load_fixture_json("ex1_general/family.json"), reg, 4);
    auto residuals = integrability_residual(*f.algebra, phi);
    REQUIRE(residuals.size() == 4);
    for (int j = 0; j < 3; ++j) CHECK(residuals[static_cast<std::size_t>(j)].residual.is_zero());

    // the three coefficient polynomials of the j = 4 residual
    std::vector<Poly> conds = integrability_conditions(*f.algebra, phi);
    std::vector<Poly> expected;
    for (const char* s : {"a1*t1*t2 - a4*t1 + a7*t2", "a2*t1*t3 - a5*t1 + a10*t3",
                          "a6*t2*t3 - a9*t2 + a11*t3"}) {
        Poly p = normalize_condition(sc(reg, s));
        Poly pc = p.conj().monic();
        expected.push_back(Poly::compare(p, pc) <= 0 ? p : pc);
    }
    std::sort(expected.begin(), expected.end(),
              [](const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; });
    REQUIRE(conds.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(Poly::compare(conds[i], expected[i]) == 0);

    // the denominators of the residual coefficients are the coframe factors
    const InvariantForm& r4 = residuals[3].residual;
    const ParamScalar* c12 = r4.coefficient(FormMonomial{0, 0b0011});
    REQUIRE(c12 != nullptr);
    CHECK(*c12 == sc(reg, "(a1*t1*t2 - a4*t1 + a7*t2)/((1 - t1*conj(t1))*(1 - t2*conj(t2)))"));

    // torus: any family is integrable
    Fixture t4 = load_fixture("torus_n4");
    VectorForm01 tphi(4, t4.registry);
    tphi.set_entry(1, 2, sc(t4.registry, "u1"));
    tphi.set_entry(3, 1, sc(t4.registry, "u2"));
    for (const auto& r : integrability_residual(*t4.algebra, tphi)) CHECK(r.residual.is_zero());

    // Example 2: a single condition
    Fixture f2 = load_fixture("ex2_general");
    VectorForm01 phi2 = load_phi(load_fixture_json("ex2_general/family.json"), f2.registry, 4);
    std::vector<Poly> conds2 = integrability_conditions(*f2.algebra, phi2);
    REQUIRE(conds2.size() == 1);
    Poly e2 = normalize_condition(sc(f2.registry, "b1*t1*t2 - b3*t1 + b4*t2"));
    Poly e2c = e2.conj().monic();
    CHECK(Poly::compare(conds2[0], Poly::compare(e2, e2c) <= 0 ? e2 : e2c) == 0);
}

TEST_CASE("curves: phi(0) = 0, derivative at zero, parameter realness") {
    Fixture f = load_fixture("ex1_case2");
    auto reg = f.registry;
    DeformationCurve c = load_curve(load_fixture_json("ex1_case2/curve.json"), reg, 4);
    VectorForm01 d0 = c.derivative_at_zero();
    CHECK(d0.entry(1, 1) == sc(reg, "a7*u2/a4"));
    CHECK(d0.entry(2, 2) == sc(reg, "u2"));
    CHECK(d0.entry(3, 3) == sc(reg, "u3"));

    // phi(0) != 0 rejected
    VectorForm01 bad(4, reg);
    bad.set_entry(1, 1, sc(reg, "1 + t"));
    CHECK_THROWS_AS(DeformationCurve(bad, reg->require("t")), DomainError);
    // non-real curve parameter rejected
    VectorForm01 ok(4, reg);
    ok.set_entry(1, 1, sc(reg, "u2"));
    CHECK_THROWS_AS(DeformationCurve(ok, reg->require("u2")), DomainError);
}

TEST_CASE("del_t and delbar_t reduce to del and delbar at phi = 0") {
    Fixture f = load_fixture("ex1_general");
    auto reg = f.registry;
    VectorForm01 zero(4, reg);
    Rng rng(13);
    for (int k = 0; k < 40; ++k) {
        InvariantForm a = rng.form(reg, 4, rng.uniform(0, 3), rng.uniform(0, 3), 2);
        CHECK(del_t(*f.algebra, zero, a) == f.algebra->del(a));
        CHECK(delbar_t(*f.algebra, zero, a) == f.algebra->delbar(a));
    }
}

TEST_CASE("del_t vanishes twice along an integrable curve point") {
    // case (i) shape: a4 = a7 = 0, diagonal curve is integrable everywhere
    Json j;
    j["n"] = 4;
    j["d"] = {{"4", "e[1,2|] + e[1|1] + e[2|2]"}};
    LoadedAlgebra la = load_algebra(j);
    auto reg = la.registry;
    VectorForm01 phi(4, reg);
    phi.set_entry(1, 1, ParamScalar::constant(reg, GaussianRational(Rational(1, 10))));
    phi.set_entry(3, 3, ParamScalar::constant(reg, GaussianRational(Rational(1, 10))));
    for (const auto& r : integrability_residual(*la.algebra, phi)) CHECK(r.residual.is_zero());
    Rng rng(17);
    for (int k = 0; k < 25; ++k) {
        InvariantForm a = rng.form(reg, 4, rng.uniform(0, 2), rng.uniform(1, 2), 2, true);
        InvariantForm once = del_t_payload(*la.algebra, phi, a);
        CHECK(del_t_payload(*la.algebra, phi, once).is_zero());
        InvariantForm once2 = delbar_t_payload(*la.algebra, phi, a);
        CHECK(delbar_t_payload(*la.algebra, phi, once2).is_zero());
    }
}

TEST_CASE("pullback structure") {
    Fixture f = load_fixture("ex1_case2_numeric");
    auto reg = f.registry;
    DeformationCurve c = load_curve(load_fixture_json("ex1_case2_numeric/curve.json"), reg, 4);

    // t0 = 0 returns the original table
    ComplexNilAlgebra g0 = pullback_structure(
        *f.algebra, c, GaussianRational(0),
        {{reg->require("u2"), GaussianRational(1)}, {reg->require("u3"), GaussianRational(Rational(1, 3))}});
    for (int j = 1; j <= 4; ++j) CHECK(g0.d_eta(j) == f.algebra->d_eta(j));

    // pinned instance at t0 = 1/10 (u2 = 1, u3 = 1/3)
    ComplexNilAlgebra g1 = pullback_structure(
        *f.algebra, c, GaussianRational(Rational(1, 10)),
        {{reg->require("u2"), GaussianRational(1)}, {reg->require("u3"), GaussianRational(Rational(1, 3))}});
    CHECK(g1.d_eta(4) ==
          fm(reg, 4, "10/11*e[1,2|] + e[1|1] + 10/11*e[1|2] + 100/99*e[2|2]"));
    CHECK(g1.validate().ok());

    // independent recomputation by solving the linear change of basis
    VectorForm01 phi_t0 = c.phi_at(GaussianRational(Rational(1, 10)))
                              .substituted(reg->require("u2"), GaussianRational(1))
                              .substituted(reg->require("u3"), GaussianRational(Rational(1, 3)));
    DeformedCoframe cf = deformed_coframe(*f.algebra, phi_t0);
    for (int j = 1; j <= 4; ++j) CHECK(solve_pullback(*f.algebra, cf, j) == g1.d_eta(j));

    // torus pulls back to the torus
    Fixture t4 = load_fixture("torus_n4");
    DeformationCurve tc = load_curve(load_fixture_json("torus_n4/curve.json"), t4.registry, 4);
    ComplexNilAlgebra tg = pullback_structure(
        *t4.algebra, tc, GaussianRational(Rational(1, 5)),
        {{t4.registry->require("u1"), GaussianRational(1)},
         {t4.registry->require("u2"), GaussianRational::i()},
         {t4.registry->require("u3"), GaussianRational(2)}});
    for (int j = 1; j <= 4; ++j) CHECK(tg.d_eta(j).is_zero());

    // a non-integrable point is a hard error
    Fixture fx = load_fixture("ex1_case2");
    auto reg2 = fx.registry;
    ComplexNilAlgebra gnum = fx.algebra->substituted(reg2->require("a1"), GaussianRational(1))
                                 .substituted(reg2->require("a3"), GaussianRational(1))
                                 .substituted(reg2->require("a4"), GaussianRational(1))
                                 .substituted(reg2->require("a7"), GaussianRational(0))
                                 .substituted(reg2->require("a8"), GaussianRational(1));
    VectorForm01 badphi(4, reg2);
    badphi.set_entry(1, 1, sc(reg2, "t"));  // violates a1 t1 t2 - a4 t1 + a7 t2 = 0
    DeformationCurve bad(badphi, reg2->require("t"));
    CHECK_THROWS_AS(pullback_structure(gnum, bad, GaussianRational(Rational(1, 10))), DomainError);
}
