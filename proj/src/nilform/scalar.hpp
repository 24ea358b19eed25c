#pragma once

#include <map>
#include <string>

#include "poly.hpp"

namespace nilform {

// Element of the fraction field of Q(i)[x_1, conj(x_1), ...]: a reduced
// numerator/denominator pair. The denominator is monic under graded lex, so
// representations are canonical and equality is componentwise.
class ParamScalar {
public:
    ParamScalar() = default;
    explicit ParamScalar(RegistryPtr reg) : num_(Poly(reg)), den_(Poly::constant(reg, GaussianRational(1))) {}
    ParamScalar(Poly num, Poly den);
    /* implicit */ ParamScalar(Poly p);

    static ParamScalar constant(RegistryPtr reg, GaussianRational c) {
        return ParamScalar(Poly::constant(std::move(reg), std::move(c)));
    }
    static ParamScalar parameter(RegistryPtr reg, int k, bool conjugated = false) {
        return ParamScalar(Poly::variable(std::move(reg), k, conjugated));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RegistryPtr& registry() const { return num_.registry(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussianRational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    ParamScalar operator-() const;
    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
    friend ParamScalar operator/(const ParamScalar& a, const ParamScalar& b);
    ParamScalar& operator+=(const ParamScalar& o) { return *this = *this + o; }
    ParamScalar& operator-=(const ParamScalar& o) { return *this = *this - o; }
    ParamScalar& operator*=(const ParamScalar& o) { return *this = *this * o; }
    ParamScalar& operator/=(const ParamScalar& o) { return *this = *this / o; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }

    ParamScalar conj() const;
    // (s + conj(s))/2 and (s - conj(s))/(2i), both fixed by conjugation
    ParamScalar realpart() const;
    ParamScalar imagpart() const;

    // Exact evaluation at a full assignment (by parameter name resolution done
    // by the caller; keys are registry indices). Errors: missing parameter,
    // vanishing denominator.
    GaussianRational specialize(const std::map<int, GaussianRational>& assignment) const;

    // Partial substitution of one parameter.
    ParamScalar substituted(int param, const GaussianRational& value) const;

    // d/d(parameter k) by the quotient rule; only meaningful for real
    // parameters (used for curve parameters), where the conjugate slot is
    // identified with the parameter itself.
    ParamScalar derivative(int param) const;

    bool uses_param(int param) const { return num_.uses_param(param) || den_.uses_param(param); }
    std::vector<int> params_used() const;
    bool is_numeric() const { return is_constant(); }

    std::string str() const;

private:
    void reduce();

    Poly num_, den_;
};

// The class a + b*t modulo t^2 for a real curve parameter t; a commutative
// ring with componentwise conjugation.
struct FirstOrderJet {
    ParamScalar value;
    ParamScalar deriv;

    friend FirstOrderJet operator+(const FirstOrderJet& a, const FirstOrderJet& b) {
        return {a.value + b.value, a.deriv + b.deriv};
    }
    friend FirstOrderJet operator-(const FirstOrderJet& a, const FirstOrderJet& b) {
        return {a.value - b.value, a.deriv - b.deriv};
    }
    friend FirstOrderJet operator*(const FirstOrderJet& a, const FirstOrderJet& b) {
        return {a.value * b.value, a.value * b.deriv + a.deriv * b.value};
    }
    friend FirstOrderJet operator/(const FirstOrderJet& a, const FirstOrderJet& b);
    FirstOrderJet conj() const { return {value.conj(), deriv.conj()}; }
    friend bool operator==(const FirstOrderJet& a, const FirstOrderJet& b) {
        return a.value == b.value && a.deriv == b.deriv;
    }
};

// Jet of a rational function of the real parameter t at t = 0; requires the
// denominator not to vanish there.
FirstOrderJet jet_at_zero(const ParamScalar& s, int t_param);

}  // namespace nilform
