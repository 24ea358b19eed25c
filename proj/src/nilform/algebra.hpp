#pragma once

#include <optional>

#include "form.hpp"

namespace nilform {

struct Classification {
    bool abelian = false;                      // every d eta^j purely (1,1)
    bool holomorphically_parallelizable = false;  // every d eta^j purely (2,0)
    bool nilpotent_coframe = false;            // d eta^j uses indices < j only
    bool complex_torus = false;                // d == 0
};

enum class NilpotencyCheck { TriangularStructural, NumericLowerCentralSeries, NotChecked };

struct ValidationReport {
    std::vector<bool> d_squared_zero;  // per j (1-based offset by 1)
    bool d_squared_all_zero = false;
    bool nilpotent = false;
    NilpotencyCheck nilpotency_method = NilpotencyCheck::NotChecked;
    bool paper_mode = false;
    bool constants_in_Qi = false;  // meaningful when paper_mode
    std::vector<std::string> failures;
    bool ok() const { return d_squared_all_zero && (nilpotency_method == NilpotencyCheck::NotChecked || nilpotent); }
};

// Invariant complex structure data: d eta^j = sum A^j_{ik} eta^{ik} +
// sum B^j_{ik} eta^{i|k}. Only (2,0)+(1,1) parts are representable, which
// encodes integrability of the structure by construction.
class ComplexNilAlgebra {
public:
    ComplexNilAlgebra(int n, RegistryPtr reg, std::vector<InvariantForm> d_eta, bool paper_mode = false);

    int dimension() const { return n_; }
    const RegistryPtr& registry() const { return reg_; }
    bool paper_mode() const { return paper_mode_; }

    const InvariantForm& d_eta(int j) const { return d_eta_[static_cast<std::size_t>(j - 1)]; }
    const InvariantForm& d_etabar(int j) const { return d_etabar_[static_cast<std::size_t>(j - 1)]; }

    bool is_numeric() const;

    // exterior derivative, extended from the coframe as an antiderivation
    InvariantForm d(const InvariantForm& a) const;
    // bidegree components of d, processed componentwise on mixed input
    InvariantForm del(const InvariantForm& a) const;
    InvariantForm delbar(const InvariantForm& a) const;

    // d^2 == 0 symbolically; nilpotency via the triangular shape when it
    // holds, else via the lower central series on a numeric specialization
    // (supplied through `assignment` for symbolic tables).
    ValidationReport validate(const std::map<int, GaussianRational>& assignment = {}) const;

    Classification classify() const;

    // substitute parameters in every structure constant
    ComplexNilAlgebra substituted(int param, const GaussianRational& value) const;

    std::string fingerprint() const;

private:
    int n_;
    RegistryPtr reg_;
    std::vector<InvariantForm> d_eta_;
    std::vector<InvariantForm> d_etabar_;
    bool paper_mode_;
};

}  // namespace nilform
