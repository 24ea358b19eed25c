#include <doctest.h>

#include "test_support.hpp"

using namespace nftest;

namespace {

// independent sign oracle: build a monomial from an explicit factor sequence
// by counting inversions directly
int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

TEST_CASE("wedge basics") {
    auto reg = make_registry({"c"});
    int n = 4;
    CHECK(wedge(fm(reg, n, "e[1|]"), fm(reg, n, "e[1|]")).is_zero());
    CHECK(wedge(fm(reg, n, "e[|2]"), fm(reg, n, "e[1|]")) == fm(reg, n, "-e[1|2]"));
    // eta^1^etabar^1^eta^3^etabar^3 reorders to -eta^{13|13}: one transposition
    // (this is the sign the fundamental-form powers are built on)
    CHECK(wedge(fm(reg, n, "e[1|1] + e[2|2]"), fm(reg, n, "e[3|3]")) ==
          fm(reg, n, "-e[1,3|1,3] - e[2,3|2,3]"));
    CHECK_THROWS_AS(wedge(fm(reg, 4, "e[1|]"), fm(reg, 3, "e[2|]")), DimensionMismatch);
}

TEST_CASE("wedge is associative and graded-commutative") {
    auto reg = make_registry({"x"});
    Rng rng(21);
    int n = 4;
    for (int k = 0; k < 500; ++k) {
        int p1 = rng.uniform(0, 2), q1 = rng.uniform(0, 2);
        int p2 = rng.uniform(0, 2), q2 = rng.uniform(0, 1);
        int p3 = rng.uniform(0, 1), q3 = rng.uniform(0, 2);
        InvariantForm a = rng.form(reg, n, p1, q1, 2);
        InvariantForm b = rng.form(reg, n, p2, q2, 2);
        InvariantForm c = rng.form(reg, n, p3, q3, 2);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        InvariantForm ab = wedge(a, b), ba = wedge(b, a);
        if (((p1 + q1) * (p2 + q2)) % 2 != 0) ba = -ba;
        CHECK(ab == ba);
    }
}

TEST_CASE("conjugation: antilinear involution, swaps bidegree") {
    auto reg = make_registry({"x"});
    int n = 4;
    CHECK(fm(reg, n, "e[1|]").conj() == fm(reg, n, "e[|1]"));
    CHECK(fm(reg, n, "i*e[1|2]").conj() == fm(reg, n, "i*e[2|1]"));

    // the fundamental form of the diagonal metric is real
    InvariantForm omega = fm(reg, n, "i/2*e[1|1] + i/2*e[2|2] + i/2*e[3|3] + i/2*e[4|4]");
    CHECK(omega.conj() == omega);

    Rng rng(8);
    for (int k = 0; k < 300; ++k) {
        int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
        InvariantForm a = rng.form(reg, n, p, q, 3);
        CHECK(a.conj().homogeneous(q, p));
        CHECK(a.conj().conj() == a);
        InvariantForm b = rng.form(reg, n, rng.uniform(0, 1), rng.uniform(0, 1), 2);
        CHECK(wedge(a, b).conj() == wedge(a.conj(), b.conj()));
    }
}

TEST_CASE("bidegree projection") {
    auto reg = make_registry({"x"});
    int n = 4;
    CHECK(fm(reg, n, "e[1|2] + e[1,2|]").project(1, 1) == fm(reg, n, "e[1|2]"));
    CHECK(fm(reg, n, "e[1|2]").project(2, 0).is_zero());

    Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        InvariantForm a = rng.form(reg, n, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        InvariantForm b = rng.form(reg, n, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        InvariantForm s = a + b;
        InvariantForm back(n);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n; ++q) back += s.project(p, q);
        CHECK(back == s);
    }
}

TEST_CASE("monomial sign normal form matches the permutation sign") {
    auto reg = make_registry({"x"});
    int n = 4;
    Rng rng(77);
    for (int k = 0; k < 400; ++k) {
        // random sequence of distinct holomorphic indices, then antiholomorphic
        int p = rng.uniform(1, 3), q = rng.uniform(0, 3);
        FormMonomial target = rng.monomial(n, p, q);
        std::vector<int> hseq = mask_indices(target.holo), aseq = mask_indices(target.anti);
        // shuffle
        for (int s = 0; s < 8; ++s) {
            if (hseq.size() > 1) std::swap(hseq[static_cast<std::size_t>(rng.uniform(0, p - 1))],
                                           hseq[static_cast<std::size_t>(rng.uniform(0, p - 1))]);
            if (aseq.size() > 1) std::swap(aseq[static_cast<std::size_t>(rng.uniform(0, q - 1))],
                                           aseq[static_cast<std::size_t>(rng.uniform(0, q - 1))]);
        }
        ParamScalar one = ParamScalar::constant(reg, GaussianRational(1));
        InvariantForm built = InvariantForm::scalar(n, one);
        for (int i : hseq) built = wedge(built, InvariantForm::monomial(n, FormMonomial{1u << (i - 1), 0}, one));
        for (int j : aseq) built = wedge(built, InvariantForm::monomial(n, FormMonomial{0, 1u << (j - 1)}, one));
        int sign = permutation_sign(hseq) * permutation_sign(aseq);
        InvariantForm expected = InvariantForm::monomial(
            n, target, ParamScalar::constant(reg, GaussianRational(sign)));
        CHECK(built == expected);
    }
}

TEST_CASE("monomial parsing rejects bad index lists") {
    auto reg = make_registry({});
    CHECK_THROWS_AS(fm(reg, 4, "e[1,5|]"), ParseError);    // out of range
    CHECK_THROWS_AS(fm(reg, 4, "e[2,1|]"), ParseError);    // not ascending
    CHECK_THROWS_AS(fm(reg, 4, "e[1,1|]"), ParseError);    // repeated
    CHECK_THROWS_AS(fm(reg, 4, "e[1,2]"), ParseError);     // missing bar
    CHECK(fm(reg, 4, "e[|]") == fm(reg, 4, "1"));          // empty monomial is the unit
}

TEST_CASE("serialization is deterministic and round-trips") {
    auto reg = make_registry({"x", "y"});
    int n = 4;
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        InvariantForm a = rng.form(reg, n, rng.uniform(0, 3), rng.uniform(0, 3), 3);
        a += rng.form(reg, n, rng.uniform(0, 2), rng.uniform(0, 2), 2);
        CHECK(fm(reg, n, a.str()) == a);
        CHECK(a.str() == (a + InvariantForm(n)).str());
    }
    // ordering: lower degree first, then holomorphic block, then index lists
    InvariantForm f = fm(reg, n, "e[2|3] + e[1|4] + e[1,2|] + 3");
    CHECK(f.str() == "3 + e[1,2|] + e[1|4] + e[2|3]");
}
