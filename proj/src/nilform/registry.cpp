#include "registry.hpp"

namespace nilform {

int ParamRegistry::add(const std::string& name, bool is_real) {
    if (name == "i" || name == "conj" || name == "e")
        throw ParseError("reserved identifier: " + name, 0);
    auto it = index_.find(name);
    if (it != index_.end()) {
        int k = it->second;
        if (real_[static_cast<std::size_t>(k)] != is_real)
            throw DomainError("parameter '" + name + "' redeclared with different realness");
        return k;
    }
    int k = static_cast<int>(names_.size());
    names_.push_back(name);
    real_.push_back(is_real);
    index_[name] = k;
    return k;
}

int ParamRegistry::require(const std::string& name) const {
    int k = find(name);
    if (k < 0) throw DomainError("unknown parameter '" + name + "' (not declared in the registry)");
    return k;
}

}  // namespace nilform
