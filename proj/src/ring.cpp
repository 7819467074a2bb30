#include "ixmult/ring.hpp"

#include <set>

namespace ixm {

RingPtr PolyRing::make(std::vector<std::string> vars, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw StructuralError("ring variable with empty name");
        if (!seen.insert(v).second) throw StructuralError("duplicate ring variable '" + v + "'");
    }
    return RingPtr(new PolyRing(std::move(vars), std::move(order)));
}

std::optional<int> PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::string PolyRing::str() const {
    std::string s = "Q[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i) s += ",";
        s += vars_[i];
    }
    return s + "]";
}

}  // namespace ixm
