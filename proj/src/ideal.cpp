#include "ixmult/ideal.hpp"

namespace ixm {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
    gens_.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (!same_ring(g.ring(), ring_))
            throw StructuralError("ideal generator from a different ring");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
}

Ideal Ideal::operator+(const Ideal& o) const {
    if (!same_ring(ring_, o.ring_)) throw StructuralError("adding ideals from different rings");
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), o.gens_.begin(), o.gens_.end());
    return Ideal(ring_, std::move(g));
}

std::string Ideal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].str();
    }
    if (gens_.empty()) s += "0";
    return s + ")";
}

}  // namespace ixm
