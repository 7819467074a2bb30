#include "ixmult/module_vector.hpp"

#include <sstream>

#include "ixmult/errors.hpp"

namespace ixm {

ModuleVector::ModuleVector(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
    if (comps_.empty()) throw StructuralError("module vector needs at least one component");
    for (const auto& c : comps_)
        if (!same_ring(c.ring(), ring_))
            throw StructuralError("module vector component from a different ring");
}

ModuleVector ModuleVector::zero(const RingPtr& ring, int rank) {
    return ModuleVector(ring, std::vector<Polynomial>(static_cast<std::size_t>(rank),
                                                      Polynomial::zero(ring)));
}

ModuleVector ModuleVector::unit(const RingPtr& ring, int rank, int position) {
    if (position < 0 || position >= rank)
        throw StructuralError("unit vector position out of range");
    auto v = zero(ring, rank);
    v.comps_[static_cast<std::size_t>(position)] = Polynomial::constant(ring, Rational(1));
    return v;
}

bool ModuleVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    if (rank() != o.rank()) throw StructuralError("module vector rank mismatch");
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] + o.comps_[i]);
    return ModuleVector(ring_, std::move(out));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    if (rank() != o.rank()) throw StructuralError("module vector rank mismatch");
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (std::size_t i = 0; i < comps_.size(); ++i) out.push_back(comps_[i] - o.comps_[i]);
    return ModuleVector(ring_, std::move(out));
}

ModuleVector ModuleVector::scale(const Polynomial& f) const {
    std::vector<Polynomial> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c * f);
    return ModuleVector(ring_, std::move(out));
}

Polynomial ModuleVector::dot(const std::vector<Polynomial>& gens) const {
    if (gens.size() != comps_.size()) throw StructuralError("dot: size mismatch");
    auto acc = Polynomial::zero(ring_);
    for (std::size_t i = 0; i < comps_.size(); ++i) acc = acc + comps_[i] * gens[i];
    return acc;
}

ModuleVector ModuleVector::dot(const std::vector<ModuleVector>& gens) const {
    if (gens.size() != comps_.size()) throw StructuralError("dot: size mismatch");
    if (gens.empty()) throw StructuralError("dot: empty generator list");
    auto acc = ModuleVector::zero(ring_, gens.front().rank());
    for (std::size_t i = 0; i < comps_.size(); ++i) acc = acc + gens[i].scale(comps_[i]);
    return acc;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
    if (!same_ring(a.ring_, b.ring_) || a.rank() != b.rank()) return false;
    return a.comps_ == b.comps_;
}

std::string ModuleVector::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) os << ", ";
        os << comps_[i].str();
    }
    os << "]";
    return os.str();
}

}  // namespace ixm
