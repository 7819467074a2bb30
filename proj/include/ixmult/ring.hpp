#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ixmult/order.hpp"

namespace ixm {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

// Polynomial ring over Q: variable names plus a monomial order.
// Immutable; shared by every value built over it.
class PolyRing {
public:
    static RingPtr make(std::vector<std::string> vars,
                        MonomialOrder order = MonomialOrder::degrevlex());

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[static_cast<std::size_t>(i)]; }
    std::optional<int> var_index(const std::string& name) const;
    const MonomialOrder& order() const { return order_; }

    // Structural equality: same names in the same positions, same order.
    bool same_as(const PolyRing& other) const {
        return vars_ == other.vars_ && order_ == other.order_;
    }

    std::string str() const;

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order)
        : vars_(std::move(vars)), order_(std::move(order)) {}

    std::vector<std::string> vars_;
    MonomialOrder order_;
};

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

}  // namespace ixm
