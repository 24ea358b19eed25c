#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "errors.hpp"

namespace nilform {

using Rational = mpq_class;

// Element of Q(i): exact rational real and imaginary parts, always canonical
// (lowest terms, positive denominator; gmp maintains this through arithmetic).
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { canonical(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) { canonical(); }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }
    static GaussianRational of(long num, long den) { return GaussianRational(Rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    // |z|^2 as a rational; zero iff z == 0.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order used for canonical term ordering; not a numeric order.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    // Canonical text form: "3/2+1/2i", "-i", "0", "2"; parse/print round-trips.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v);

private:
    void canonical() {
        re_.canonicalize();
        im_.canonicalize();
    }

    Rational re_, im_;
};

std::string rational_str(const Rational& r);

}  // namespace nilform
