#pragma once

#include <vector>

#include "ixmult/ideal.hpp"
#include "ixmult/polynomial.hpp"

namespace ixm {

// Ring homomorphism fixing Q, given by one target polynomial per source
// variable.
class RingMap {
public:
    RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images);

    static RingMap identity(const RingPtr& ring);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Polynomial& f) const;
    Ideal apply(const Ideal& I) const;

private:
    RingPtr source_;
    RingPtr target_;
    std::vector<Polynomial> images_;
};

}  // namespace ixm
