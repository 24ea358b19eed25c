#include "rational.hpp"

#include <ostream>
#include <sstream>

namespace nilform {

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DomainError("division by zero in Q(i)");
    Rational n = o.norm();
    Rational r = (re_ * o.re_ + im_ * o.im_) / n;
    Rational m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    canonical();
    return *this;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

namespace {
// imaginary part as "i", "-i", "2/3i", ...
std::string imag_str(const Rational& im) {
    if (im == 1) return "i";
    if (im == -1) return "-i";
    return rational_str(im) + "i";
}
}  // namespace

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    if (re_ == 0) return imag_str(im_);
    std::string s = rational_str(re_);
    if (im_ > 0) s += "+";
    s += imag_str(im_);
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.str(); }

}  // namespace nilform
