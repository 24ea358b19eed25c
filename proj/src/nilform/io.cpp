#include "io.hpp"

#include "parse.hpp"

namespace nilform {

namespace {

int index_key(const std::string& key, int n, const char* what) {
    try {
        std::size_t pos = 0;
        int j = std::stoi(key, &pos);
        if (pos != key.size() || j < 1 || j > n) throw std::invalid_argument(key);
        return j;
    } catch (const std::exception&) {
        throw ParseError(std::string(what) + " key '" + key + "' is not an index in 1.." + std::to_string(n), 0);
    }
}

std::pair<int, int> pair_key(const std::string& key, int n, const char* what) {
    auto bar = key.find('|');
    if (bar == std::string::npos)
        throw ParseError(std::string(what) + " key '" + key + "' must look like \"k|j\"", 0);
    return {index_key(key.substr(0, bar), n, what), index_key(key.substr(bar + 1), n, what)};
}

}  // namespace

LoadedAlgebra load_algebra(const Json& j) {
    if (!j.is_object()) throw ParseError("algebra: expected an object", 0);
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw ParseError("algebra: missing integer field \"n\"", 0);
    int n = j.at("n").get<int>();
    if (n < 1 || n > 16) throw ParseError("algebra: n out of range 1..16", 0);

    auto registry = std::make_shared<ParamRegistry>();
    if (j.contains("params")) {
        for (const auto& p : j.at("params")) registry->add(p.get<std::string>(), false);
    }
    if (j.contains("real_params")) {
        for (const auto& p : j.at("real_params")) registry->add(p.get<std::string>(), true);
    }
    bool paper_mode = j.value("paper_mode", false);

    RegistryPtr reg = registry;
    std::vector<InvariantForm> dtable(static_cast<std::size_t>(n), InvariantForm(n));
    if (j.contains("d")) {
        if (!j.at("d").is_object()) throw ParseError("algebra: \"d\" must be an object", 0);
        for (const auto& [key, val] : j.at("d").items()) {
            int idx = index_key(key, n, "algebra d");
            dtable[static_cast<std::size_t>(idx - 1)] = parse_form(val.get<std::string>(), reg, n);
        }
    }
    LoadedAlgebra out;
    out.registry = registry;
    out.algebra = std::make_shared<ComplexNilAlgebra>(n, reg, std::move(dtable), paper_mode);
    return out;
}

HermitianMetric load_metric(const Json& j, const RegistryPtr& reg, int n) {
    if (j.is_object() && j.contains("metric")) {
        std::string kind = j.at("metric").get<std::string>();
        if (kind == "diagonal") return HermitianMetric::diagonal(n, reg);
        throw ParseError("metric: unknown kind '" + kind + "'", 0);
    }
    if (j.is_object() && j.contains("F")) {
        std::map<std::pair<int, int>, ParamScalar> entries;
        for (const auto& [key, val] : j.at("F").items()) {
            auto [a, b] = pair_key(key, n, "metric F");
            entries.emplace(std::make_pair(a, b), parse_scalar(val.get<std::string>(), reg));
        }
        return HermitianMetric::from_entries(n, reg, entries);
    }
    throw ParseError("metric: expected {\"metric\":\"diagonal\"} or {\"F\":{...}}", 0);
}

VectorForm01 load_phi(const Json& j, const RegistryPtr& reg, int n) {
    const Json* src = &j;
    if (j.is_object() && j.contains("phi")) src = &j.at("phi");
    if (!src->is_object()) throw ParseError("vector form: expected {\"phi\": {\"k|j\": \"expr\"}}", 0);
    VectorForm01 phi(n, reg);
    for (const auto& [key, val] : src->items()) {
        auto [k, jj] = pair_key(key, n, "phi");
        phi.set_entry(k, jj, parse_scalar(val.get<std::string>(), reg));
    }
    return phi;
}

DeformationCurve load_curve(const Json& j, const RegistryPtr& reg, int n) {
    if (!j.is_object() || !j.contains("curve_param"))
        throw ParseError("curve: missing \"curve_param\"", 0);
    std::string name = j.at("curve_param").get<std::string>();
    int t = reg->find(name);
    if (t < 0) throw ParseError("curve: parameter '" + name + "' not declared in the algebra registry", 0);
    return DeformationCurve(load_phi(j, reg, n), t);
}

InvariantForm load_form(const Json& j, const RegistryPtr& reg, int n) {
    if (j.is_string()) return parse_form(j.get<std::string>(), reg, n);
    if (j.is_object() && j.contains("form")) return parse_form(j.at("form").get<std::string>(), reg, n);
    throw ParseError("form: expected an expression string or {\"form\": \"expr\"}", 0);
}

Json algebra_to_json(const ComplexNilAlgebra& g) {
    Json out;
    out["n"] = g.dimension();
    Json d = Json::object();
    for (int j = 1; j <= g.dimension(); ++j) {
        if (!g.d_eta(j).is_zero()) d[std::to_string(j)] = g.d_eta(j).str();
    }
    out["d"] = d;
    return out;
}

}  // namespace nilform
