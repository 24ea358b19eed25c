#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "scalar.hpp"

namespace nilform {

// Basis monomial eta^{i_1..i_p} ^ etabar^{j_1..j_q}, holomorphic factors
// first, indices ascending; stored as bitmasks (bit j-1 <-> index j).
struct FormMonomial {
    uint32_t holo = 0;
    uint32_t anti = 0;

    int p() const { return __builtin_popcount(holo); }
    int q() const { return __builtin_popcount(anti); }
    int degree() const { return p() + q(); }

    friend bool operator==(const FormMonomial&, const FormMonomial&) = default;
};

// Ascending-index-list lexicographic comparison of two index sets.
int cmp_index_sets(uint32_t a, uint32_t b);

// Deterministic order: by total degree, then p, then the index lists.
struct MonomialOrder {
    bool operator()(const FormMonomial& a, const FormMonomial& b) const;
};

// Sign of merging two disjoint ascending factor blocks (number of inversions).
int merge_sign(uint32_t a, uint32_t b);

std::vector<int> mask_indices(uint32_t mask);
uint32_t mask_of(const std::vector<int>& indices);

// Sparse element of the exterior algebra on the invariant coframe; may mix
// bidegrees. No stored zero coefficients.
class InvariantForm {
public:
    InvariantForm() : n_(0) {}
    explicit InvariantForm(int n) : n_(n) {}

    static InvariantForm monomial(int n, FormMonomial m, ParamScalar c);
    static InvariantForm scalar(int n, ParamScalar c) { return monomial(n, FormMonomial{}, std::move(c)); }

    int dimension() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<FormMonomial, ParamScalar, MonomialOrder>& terms() const { return terms_; }

    void add_term(const FormMonomial& m, const ParamScalar& c);
    const ParamScalar* coefficient(const FormMonomial& m) const;

    InvariantForm operator-() const;
    InvariantForm& operator+=(const InvariantForm& o);
    InvariantForm& operator-=(const InvariantForm& o);
    friend InvariantForm operator+(InvariantForm a, const InvariantForm& b) { return a += b; }
    friend InvariantForm operator-(InvariantForm a, const InvariantForm& b) { return a -= b; }
    InvariantForm scaled(const ParamScalar& c) const;

    friend InvariantForm wedge(const InvariantForm& a, const InvariantForm& b);
    friend bool operator==(const InvariantForm& a, const InvariantForm& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // antilinear involution eta <-> etabar; (p,q) -> (q,p)
    InvariantForm conj() const;

    InvariantForm project(int p, int q) const;
    // true if every term has bidegree (p,q)
    bool homogeneous(int p, int q) const;
    // list of bidegrees present, deterministic order
    std::vector<std::pair<int, int>> bidegrees() const;

    bool is_numeric() const;

    // substitute/derive coefficientwise
    InvariantForm substituted(int param, const GaussianRational& value) const;
    InvariantForm derivative(int param) const;

    std::string str() const;  // deterministic serialization, e.g. "1/2*e[1,2|1,2] + ..."

private:
    int n_;
    std::map<FormMonomial, ParamScalar, MonomialOrder> terms_;
};

std::string monomial_str(const FormMonomial& m);

void check_same_dimension(const InvariantForm& a, const InvariantForm& b);

}  // namespace nilform
