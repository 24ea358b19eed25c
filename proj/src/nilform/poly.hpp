#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rational.hpp"
#include "registry.hpp"

namespace nilform {

// Exponent vector over the registry's variable slots.
using Expo = std::vector<uint16_t>;

// Graded lexicographic order: higher total degree first, ties broken
// lexicographically (larger exponent on the lowest-index variable wins).
struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const;
};

int total_degree(const Expo& e);

// Sparse multivariate polynomial over Q(i) in the registry's variables.
// Terms are kept in descending graded-lex order (std::map with reversed
// comparator semantics handled at iteration sites); no zero coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static Poly constant(RegistryPtr reg, GaussianRational c);
    static Poly variable(RegistryPtr reg, int param_index, bool conjugated = false);

    const RegistryPtr& registry() const { return reg_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }
    GaussianRational constant_value() const;
    std::size_t term_count() const { return terms_.size(); }

    // Leading term under graded lex (throws on zero).
    const Expo& leading_monomial() const;
    const GaussianRational& leading_coefficient() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const GaussianRational& c) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Strict total order on canonical forms (term-sequence comparison); used
    // for deterministic output and condition de-duplication.
    static int compare(const Poly& a, const Poly& b);

    Poly conj() const;

    int degree_in(int var) const;
    int max_total_degree() const;
    bool uses_var(int var) const;
    std::vector<int> vars_used() const;
    bool uses_param(int param) const;
    std::vector<int> params_used() const;

    // Exact partial derivative with respect to variable slot `var`.
    Poly derivative_var(int var) const;

    // Substitute a Gaussian-rational value for parameter k (both of its slots;
    // the conjugate slot receives the conjugate value). Real parameters only
    // accept real values.
    Poly substituted(int param, const GaussianRational& value) const;

    // Full evaluation; every parameter occurring must be assigned.
    // assignment maps param index -> value.
    GaussianRational evaluated(const std::map<int, GaussianRational>& assignment) const;

    // Monic gcd (leading coefficient 1 under graded lex); gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);

    // Exact division; throws DomainError if not divisible.
    Poly div_exact(const Poly& g) const;
    bool divisible_by(const Poly& g) const;

    // this / leading_coefficient()
    Poly monic() const;

    std::string str() const;

    const std::map<Expo, GaussianRational, GradedLex>& terms() const { return terms_; }
    void add_term(const Expo& e, const GaussianRational& c);

private:
    RegistryPtr reg_;
    std::map<Expo, GaussianRational, GradedLex> terms_;
};

}  // namespace nilform
