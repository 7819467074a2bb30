#pragma once

#include <vector>

#include "ixmult/polynomial.hpp"

namespace ixm {

// Element of a free module R^r, stored as its component polynomials.
class ModuleVector {
public:
    ModuleVector(RingPtr ring, std::vector<Polynomial> components);

    static ModuleVector zero(const RingPtr& ring, int rank);
    static ModuleVector unit(const RingPtr& ring, int rank, int position);

    const RingPtr& ring() const { return ring_; }
    int rank() const { return static_cast<int>(comps_.size()); }
    const Polynomial& comp(int i) const { return comps_[static_cast<std::size_t>(i)]; }
    const std::vector<Polynomial>& comps() const { return comps_; }

    bool is_zero() const;

    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scale(const Polynomial& f) const;

    // Sum of comp(i) * gens[i]; the defining pairing for syzygy checks.
    Polynomial dot(const std::vector<Polynomial>& gens) const;
    ModuleVector dot(const std::vector<ModuleVector>& gens) const;

    friend bool operator==(const ModuleVector& a, const ModuleVector& b);

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

}  // namespace ixm
