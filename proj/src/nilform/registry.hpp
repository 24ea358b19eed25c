#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nilform {

// Session-scoped registry of formal parameters. Parameter k owns two variable
// slots: 2k for the parameter itself and 2k+1 for its formal conjugate. A
// parameter declared real is fixed by conjugation and its conjugate slot is
// never populated.
//
// The registry is frozen once a session starts computing: every polynomial
// carries exponent vectors sized to var_count().
class ParamRegistry {
public:
    int add(const std::string& name, bool is_real = false);

    // -1 when absent
    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int require(const std::string& name) const;

    std::size_t size() const { return names_.size(); }
    std::size_t var_count() const { return 2 * names_.size(); }
    const std::string& name(int k) const { return names_[static_cast<std::size_t>(k)]; }
    bool is_real(int k) const { return real_[static_cast<std::size_t>(k)]; }
    const std::vector<std::string>& names() const { return names_; }

    static int var_of(int k) { return 2 * k; }
    static int conj_var_of(int k) { return 2 * k + 1; }
    static int param_of_var(int v) { return v / 2; }
    static bool var_is_conj(int v) { return v % 2 != 0; }

    std::string var_name(int v) const {
        const std::string& base = name(param_of_var(v));
        return var_is_conj(v) ? "conj(" + base + ")" : base;
    }

private:
    std::vector<std::string> names_;
    std::vector<bool> real_;
    std::map<std::string, int> index_;
};

using RegistryPtr = std::shared_ptr<const ParamRegistry>;

}  // namespace nilform
