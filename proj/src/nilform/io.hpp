#pragma once

#include <json.hpp>

#include "deformation.hpp"
#include "metric.hpp"

namespace nilform {

using Json = nlohmann::ordered_json;

// Algebra file:
//   {"n": 4, "params": ["a1", ...], "real_params": ["t"], "paper_mode": false,
//    "d": {"4": "a1*e[1,2|] + a3*e[1|1] + ..."}}
// Omitted coframe indices have d eta^j = 0. The registry declared here is the
// session registry: every other file resolves parameters against it.
struct LoadedAlgebra {
    std::shared_ptr<ParamRegistry> registry;
    std::shared_ptr<ComplexNilAlgebra> algebra;
};
LoadedAlgebra load_algebra(const Json& j);

// {"metric": "diagonal"} or {"F": {"1|2": "expr", ...}} (upper triangle
// suffices; hermiticity is enforced).
HermitianMetric load_metric(const Json& j, const RegistryPtr& reg, int n);

// {"phi": {"k|j": "expr", ...}} meaning the coefficient of etabar^j (x) Z_k.
VectorForm01 load_phi(const Json& j, const RegistryPtr& reg, int n);

// {"curve_param": "t", "phi": {...}}; the parameter must be declared real.
DeformationCurve load_curve(const Json& j, const RegistryPtr& reg, int n);

// {"form": "expr"} or a bare string.
InvariantForm load_form(const Json& j, const RegistryPtr& reg, int n);

Json algebra_to_json(const ComplexNilAlgebra& g);

}  // namespace nilform
