#include "scalar.hpp"

#include <algorithm>

namespace nilform {

ParamScalar::ParamScalar(Poly p) : num_(std::move(p)) {
    den_ = Poly::constant(num_.registry(), GaussianRational(1));
}

ParamScalar::ParamScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("zero denominator");
    reduce();
}

void ParamScalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.registry(), GaussianRational(1));
        return;
    }
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.div_exact(g);
            den_ = den_.div_exact(g);
        }
    }
    // canonical form: monic denominator
    GaussianRational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        den_ = den_.monic();
        num_ = num_.scaled(GaussianRational(1) / lc);
    }
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_ == b.den_) return ParamScalar(a.num_ + b.num_, a.den_);
    return ParamScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_ == b.den_) return ParamScalar(a.num_ - b.num_, a.den_);
    return ParamScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
    return ParamScalar(a.num_ * b.num_, a.den_ * b.den_);
}

ParamScalar operator/(const ParamScalar& a, const ParamScalar& b) {
    if (b.is_zero()) throw DomainError("division by zero scalar");
    return ParamScalar(a.num_ * b.den_, a.den_ * b.num_);
}

ParamScalar ParamScalar::conj() const {
    ParamScalar r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    // conjugation can break denominator monicity
    GaussianRational lc = r.den_.leading_coefficient();
    if (!lc.is_one()) {
        r.den_ = r.den_.monic();
        r.num_ = r.num_.scaled(GaussianRational(1) / lc);
    }
    return r;
}

ParamScalar ParamScalar::realpart() const {
    ParamScalar half = ParamScalar::constant(registry(), GaussianRational(Rational(1, 2)));
    return (*this + conj()) * half;
}

ParamScalar ParamScalar::imagpart() const {
    ParamScalar den = ParamScalar::constant(registry(), GaussianRational(Rational(0), Rational(2)));
    return (*this - conj()) / den;
}

GaussianRational ParamScalar::specialize(const std::map<int, GaussianRational>& assignment) const {
    GaussianRational d = den_.evaluated(assignment);
    if (d.is_zero()) throw DomainError("denominator vanishes at the given assignment: " + den_.str());
    return num_.evaluated(assignment) / d;
}

ParamScalar ParamScalar::substituted(int param, const GaussianRational& value) const {
    Poly d = den_.substituted(param, value);
    if (d.is_zero()) throw DomainError("denominator vanishes under substitution: " + den_.str());
    return ParamScalar(num_.substituted(param, value), std::move(d));
}

ParamScalar ParamScalar::derivative(int param) const {
    // formal d/dx: conj(x) counts as an independent variable. Curve
    // derivatives use a real parameter, whose conjugate slot never occurs.
    int v = ParamRegistry::var_of(param);
    Poly dn = num_.derivative_var(v);
    Poly dd = den_.derivative_var(v);
    return ParamScalar(dn * den_ - num_ * dd, den_ * den_);
}

std::vector<int> ParamScalar::params_used() const {
    std::vector<int> r = num_.params_used();
    for (int k : den_.params_used())
        if (std::find(r.begin(), r.end(), k) == r.end()) r.push_back(k);
    std::sort(r.begin(), r.end());
    return r;
}

std::string ParamScalar::str() const {
    if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    // a one-term denominator still needs parens when it is a product of
    // distinct variables ("x*y"), since '/' and '*' associate left
    bool dparens = den_.term_count() > 1 || den_.vars_used().size() > 1;
    std::string d = dparens ? "(" + den_.str() + ")" : den_.str();
    return n + "/" + d;
}

FirstOrderJet operator/(const FirstOrderJet& a, const FirstOrderJet& b) {
    if (b.value.is_zero()) throw DomainError("jet division by a jet with vanishing value part");
    ParamScalar v = a.value / b.value;
    return {v, (a.deriv * b.value - a.value * b.deriv) / (b.value * b.value)};
}

FirstOrderJet jet_at_zero(const ParamScalar& s, int t_param) {
    ParamScalar at0 = s.substituted(t_param, GaussianRational(0));
    ParamScalar d = s.derivative(t_param).substituted(t_param, GaussianRational(0));
    return {at0, d};
}

}  // namespace nilform
