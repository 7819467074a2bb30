#include "ixmult/ring_map.hpp"

namespace ixm {

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (static_cast<int>(images_.size()) != source_->nvars())
        throw StructuralError("ring map needs one image per source variable");
    for (const Polynomial& g : images_)
        if (!same_ring(g.ring(), target_))
            throw StructuralError("ring map image from a different target ring");
}

RingMap RingMap::identity(const RingPtr& ring) {
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i) images.push_back(Polynomial::variable(ring, i));
    return RingMap(ring, ring, std::move(images));
}

Polynomial RingMap::apply(const Polynomial& f) const {
    if (!same_ring(f.ring(), source_))
        throw StructuralError("applying ring map to a polynomial from a different ring");
    int n = source_->nvars();

    // Per-variable power cache, filled on demand.
    std::vector<std::vector<Polynomial>> pows(static_cast<std::size_t>(n));
    auto power = [&](int i, Exponent e) -> const Polynomial& {
        auto& cache = pows[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_, 1));
        while (static_cast<Exponent>(cache.size()) <= e)
            cache.push_back(cache.back() * images_[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial sum = Polynomial::zero(target_);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target_, t.coeff);
        for (int i = 0; i < n; ++i) {
            Exponent e = t.mono[i];
            if (e) prod = prod * power(i, e);
        }
        sum = sum + prod;
    }
    return sum;
}

Ideal RingMap::apply(const Ideal& I) const {
    std::vector<Polynomial> gens;
    gens.reserve(I.gens().size());
    for (const Polynomial& g : I.gens()) gens.push_back(apply(g));
    return Ideal(target_, std::move(gens));
}

}  // namespace ixm
