#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ixmult/homology.hpp"
#include "ixmult/ideal.hpp"
#include "ixmult/ring_map.hpp"

namespace ixm {

class RationalPoint {
public:
    static RationalPoint affine(std::vector<Rational> coords);
    static RationalPoint projective(std::vector<Rational> coords);  // not all zero

    bool is_projective() const { return projective_; }
    int size() const { return static_cast<int>(coords_.size()); }
    const Rational& coord(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& coords() const { return coords_; }

    std::string str() const;  // "(a, b)" or "(a : b)"

private:
    RationalPoint(std::vector<Rational> coords, bool projective);
    std::vector<Rational> coords_;
    bool projective_;
};

// true if two projective points are proportional (the same point of P^n)
bool same_projective_point(const RationalPoint& a, const RationalPoint& b);

class AffineScheme {
public:
    explicit AffineScheme(Ideal ideal);  // ring must carry a global order
    const RingPtr& ring() const { return ideal_.ring(); }
    const Ideal& ideal() const { return ideal_; }

private:
    Ideal ideal_;
};

class ProjectiveScheme {
public:
    explicit ProjectiveScheme(Ideal ideal);  // every generator homogeneous
    const RingPtr& ring() const { return ideal_.ring(); }
    const Ideal& ideal() const { return ideal_; }

private:
    Ideal ideal_;
};

// Local ring (same names, NegDegRevLex) plus the translation x_i -> x_i + p_i
// carrying p to the origin.
std::pair<RingPtr, RingMap> localize_at_point(const RingPtr& ring, const RationalPoint& p);

struct NaiveResult {
    std::int64_t value = 0;
    bool on_intersection = false;  // warning-level flag, not an error
};

struct SerreResult {
    TorProfile profile;
    bool on_intersection = false;
};

NaiveResult naive_multiplicity(const AffineScheme& Y, const AffineScheme& Z,
                               const RationalPoint& p);
SerreResult serre_multiplicity(const AffineScheme& Y, const AffineScheme& Z,
                               const RationalPoint& p);

// Substitute v = 1 and drop v from the ring.
AffineScheme affine_chart(const ProjectiveScheme& Y, const std::string& var);

// Pivot on the first nonzero coordinate (or a caller-chosen one); the pivot
// coordinate is dropped and the rest are scaled to pivot value 1.
std::pair<int, RationalPoint> dehomogenize_point(const RationalPoint& p);
RationalPoint dehomogenize_point_at(const RationalPoint& p, int pivot);

NaiveResult projective_naive_multiplicity(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                                          const RationalPoint& p);
SerreResult projective_serre_multiplicity(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                                          const RationalPoint& p);
// chart-pinned variants (the pivot coordinate must be nonzero)
NaiveResult projective_naive_multiplicity_at_chart(const ProjectiveScheme& Y,
                                                   const ProjectiveScheme& Z,
                                                   const RationalPoint& p, int pivot);
SerreResult projective_serre_multiplicity_at_chart(const ProjectiveScheme& Y,
                                                   const ProjectiveScheme& Z,
                                                   const RationalPoint& p, int pivot);

struct BezoutReport {
    std::int64_t deg_y = 0;
    std::int64_t deg_z = 0;
    std::vector<std::pair<RationalPoint, std::int64_t>> multiplicities;
    std::int64_t total = 0;
    std::int64_t product = 0;
    bool matches = false;
};

// Serre multiplicities at the supplied points against deg(Y)·deg(Z). Makes no
// attempt to find intersection points; the list's completeness is on the caller.
BezoutReport bezout_check(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                          const std::vector<RationalPoint>& points);

}  // namespace ixm
