#pragma once

#include <vector>

#include "ixmult/polynomial.hpp"

namespace ixm {

// Finite generator list for an ideal of a polynomial ring. Zero generators
// are dropped on construction.
class Ideal {
public:
    explicit Ideal(RingPtr ring) : ring_(std::move(ring)) {}
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    int size() const { return static_cast<int>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }

    // Generator concatenation (the ideal sum I + J).
    Ideal operator+(const Ideal& o) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
};

}  // namespace ixm
