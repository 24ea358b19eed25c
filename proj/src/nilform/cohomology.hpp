#pragma once

#include "linalg.hpp"
#include "metric.hpp"

namespace nilform {

// deterministic basis of invariant (p,q) monomials
std::vector<FormMonomial> monomial_basis(int n, int p, int q);

struct CohomologySpace {
    int p = 0, q = 0;
    int dimension = 0;
    std::vector<InvariantForm> representatives;  // d-closed, independent mod del delbar image
    std::string algebra_fingerprint;
};

// Invariant Bott-Chern cohomology of a fully numeric structure:
// ker(d)/im(del delbar) on invariant (p,q)-forms. Symbolic tables refused.
CohomologySpace bc_space(const ComplexNilAlgebra& g, int p, int q,
                         PivotStrategy strategy = PivotStrategy::FirstNonzero);

struct ClassVerdict {
    enum Kind { NotClosed, Exact, NonzeroClass } kind = NotClosed;
    std::optional<InvariantForm> witness;             // Exact: beta with del delbar beta = alpha
    std::vector<GaussianRational> certificate;        // NonzeroClass: functional on (p,q) coefficients
    std::string str() const;
};

ClassVerdict bc_class_vanishes(const ComplexNilAlgebra& g, const InvariantForm& alpha);

// d alpha = 0 and del delbar * alpha = 0, both exact; diagonal metric only.
bool is_bc_harmonic(const ComplexNilAlgebra& g, const HermitianMetric& m, const InvariantForm& alpha);

void require_numeric(const ComplexNilAlgebra& g);

}  // namespace nilform
