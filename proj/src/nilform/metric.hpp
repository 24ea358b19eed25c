#pragma once

#include "algebra.hpp"

namespace nilform {

// Hermitian metric data F_{jk} with F_{kj} = conj(F_{jk}); fundamental form
// omega = (i/2) sum F_{jk} eta^{j|k}.
class HermitianMetric {
public:
    static HermitianMetric diagonal(int n, RegistryPtr reg);
    static HermitianMetric from_entries(int n, RegistryPtr reg,
                                        const std::map<std::pair<int, int>, ParamScalar>& entries);

    int dimension() const { return n_; }
    bool is_diagonal() const;
    bool is_unit_diagonal() const;
    const ParamScalar& entry(int j, int k) const;

    InvariantForm fundamental_form() const;
    InvariantForm fundamental_power(int k) const;

    // leading principal minors positive; only for numeric metrics
    bool positive_definite() const;

    HermitianMetric substituted(int param, const GaussianRational& value) const;

private:
    HermitianMetric(int n, RegistryPtr reg) : n_(n), reg_(std::move(reg)) {}
    int n_;
    RegistryPtr reg_;
    std::vector<ParamScalar> F_;
};

enum class MetricMode { Astheno, SKT, Balanced, Kahler };

MetricMode metric_mode_of(const std::string& name);
std::string metric_mode_name(MetricMode m);

struct MetricCheck {
    InvariantForm residual;
    // normalized, de-duplicated coefficient conditions; all vanish iff the
    // metric satisfies the mode
    std::vector<Poly> conditions;
};

MetricCheck check_special_metric(const ComplexNilAlgebra& g, const HermitianMetric& m, MetricMode mode);

// C-antilinear Hodge star for the diagonal unit metric:
//   *(c eta^{I|J}) = conj(c) s(I,J) 2^{p+q-n} eta^{Ic|Jc},
// s(I,J) the sign with eta^{I|J} ^ eta^{Ic|Jc} = s eta^{1..n|1..n}. This is the
// isometric star of the underlying flat metric: beta ^ *alpha = <beta,alpha> vol
// with |eta^j|^2 = 2 and vol = omega^n/n!.
InvariantForm hodge_star(const HermitianMetric& m, const InvariantForm& a);

// condition polynomial canonicalization: numerator of the reduced fraction,
// made monic under graded lex; zero maps to zero
Poly normalize_condition(const ParamScalar& s);

// collect normalized coefficient conditions of a form, de-duplicated modulo
// conjugation, deterministic order
std::vector<Poly> condition_list(const InvariantForm& residual);

}  // namespace nilform
