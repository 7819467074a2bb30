#include "ixmult/scheme.hpp"

#include <sstream>

#include "ixmult/errors.hpp"
#include "ixmult/monomial_ideal.hpp"

namespace ixm {

RationalPoint::RationalPoint(std::vector<Rational> coords, bool projective)
    : coords_(std::move(coords)), projective_(projective) {
    if (coords_.empty()) throw StructuralError("point needs at least one coordinate");
}

RationalPoint RationalPoint::affine(std::vector<Rational> coords) {
    return RationalPoint(std::move(coords), false);
}

RationalPoint RationalPoint::projective(std::vector<Rational> coords) {
    bool nonzero = false;
    for (const auto& c : coords) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw StructuralError("projective point cannot be all zeros");
    return RationalPoint(std::move(coords), true);
}

std::string RationalPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << (projective_ ? " : " : ", ");
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

bool same_projective_point(const RationalPoint& a, const RationalPoint& b) {
    if (!a.is_projective() || !b.is_projective() || a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i)
        for (int j = i + 1; j < a.size(); ++j)
            if (a.coord(i) * b.coord(j) != a.coord(j) * b.coord(i)) return false;
    return true;
}

AffineScheme::AffineScheme(Ideal ideal) : ideal_(std::move(ideal)) {
    if (!ideal_.ring()->order().is_global())
        throw StructuralError("affine scheme needs a ring with a global order");
}

ProjectiveScheme::ProjectiveScheme(Ideal ideal) : ideal_(std::move(ideal)) {
    for (const auto& g : ideal_.gens())
        if (!g.is_homogeneous())
            throw HomogeneityError("projective scheme generator '" + g.str() +
                                   "' is not homogeneous");
}

std::pair<RingPtr, RingMap> localize_at_point(const RingPtr& ring, const RationalPoint& p) {
    if (p.is_projective()) throw StructuralError("localization needs an affine point");
    if (p.size() != ring->nvars())
        throw StructuralError("point has " + std::to_string(p.size()) + " coordinates but " +
                              ring->str() + " has " + std::to_string(ring->nvars()) +
                              " variables");
    RingPtr local = PolyRing::make(ring->var_names(), MonomialOrder::negdegrevlex());
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(ring->nvars()));
    for (int i = 0; i < ring->nvars(); ++i)
        images.push_back(Polynomial::variable(local, i) +
                         Polynomial::constant(local, p.coord(i)));
    return {local, RingMap(ring, local, std::move(images))};
}

namespace {

bool vanishes_at(const Ideal& I, const RationalPoint& p) {
    for (const auto& g : I.gens())
        if (!g.evaluate(p.coords()).is_zero()) return false;
    return true;
}

void check_affine_pair(const AffineScheme& Y, const AffineScheme& Z, const RationalPoint& p) {
    if (!same_ring(Y.ring(), Z.ring()))
        throw StructuralError("schemes live in different rings");
    if (p.is_projective()) throw StructuralError("affine multiplicity needs an affine point");
    if (p.size() != Y.ring()->nvars()) throw StructuralError("point/ring size mismatch");
}

}  // namespace

NaiveResult naive_multiplicity(const AffineScheme& Y, const AffineScheme& Z,
                               const RationalPoint& p) {
    check_affine_pair(Y, Z, p);
    auto [local, shift] = localize_at_point(Y.ring(), p);
    Ideal K = shift.apply(Y.ideal()) + shift.apply(Z.ideal());
    Length v = vdim_ideal(K);
    if (!v)
        throw NotIsolatedError("intersection is not isolated at " + p.str() +
                               ": the local quotient has infinite dimension");
    return NaiveResult{*v, vanishes_at(Y.ideal(), p) && vanishes_at(Z.ideal(), p)};
}

SerreResult serre_multiplicity(const AffineScheme& Y, const AffineScheme& Z,
                               const RationalPoint& p) {
    check_affine_pair(Y, Z, p);
    auto [local, shift] = localize_at_point(Y.ring(), p);
    try {
        TorProfile prof = chi(shift.apply(Y.ideal()), shift.apply(Z.ideal()));
        return SerreResult{std::move(prof),
                           vanishes_at(Y.ideal(), p) && vanishes_at(Z.ideal(), p)};
    } catch (const FiniteLengthViolation&) {
        throw NotIsolatedError("intersection is not isolated at " + p.str() +
                               ": Tor_0 has infinite length");
    }
}

AffineScheme affine_chart(const ProjectiveScheme& Y, const std::string& var) {
    const RingPtr& R = Y.ring();
    auto idx = R->var_index(var);
    if (!idx) throw StructuralError("no variable named '" + var + "' in " + R->str());
    if (R->nvars() < 2) throw StructuralError("cannot take a chart of a one-variable ring");
    std::vector<std::string> names;
    for (int i = 0; i < R->nvars(); ++i)
        if (i != *idx) names.push_back(R->var_name(i));
    RingPtr S = PolyRing::make(names, MonomialOrder::degrevlex());
    std::vector<Polynomial> images;
    int pos = 0;
    for (int i = 0; i < R->nvars(); ++i)
        images.push_back(i == *idx ? Polynomial::constant(S, Rational(1))
                                   : Polynomial::variable(S, pos++));
    return AffineScheme(RingMap(R, S, std::move(images)).apply(Y.ideal()));
}

std::pair<int, RationalPoint> dehomogenize_point(const RationalPoint& p) {
    if (!p.is_projective()) throw StructuralError("dehomogenization needs a projective point");
    for (int i = 0; i < p.size(); ++i)
        if (!p.coord(i).is_zero()) return {i, dehomogenize_point_at(p, i)};
    throw StructuralError("projective point cannot be all zeros");
}

RationalPoint dehomogenize_point_at(const RationalPoint& p, int pivot) {
    if (!p.is_projective()) throw StructuralError("dehomogenization needs a projective point");
    if (pivot < 0 || pivot >= p.size()) throw StructuralError("chart index out of range");
    if (p.coord(pivot).is_zero())
        throw StructuralError("point " + p.str() + " is not in the chart of coordinate " +
                              std::to_string(pivot));
    std::vector<Rational> coords;
    coords.reserve(static_cast<std::size_t>(p.size() - 1));
    for (int i = 0; i < p.size(); ++i)
        if (i != pivot) coords.push_back(p.coord(i) / p.coord(pivot));
    return RationalPoint::affine(std::move(coords));
}

namespace {

void check_projective_pair(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                           const RationalPoint& p) {
    if (!same_ring(Y.ring(), Z.ring()))
        throw StructuralError("schemes live in different rings");
    if (!p.is_projective())
        throw StructuralError("projective multiplicity needs a projective point");
    if (p.size() != Y.ring()->nvars()) throw StructuralError("point/ring size mismatch");
}

}  // namespace

NaiveResult projective_naive_multiplicity_at_chart(const ProjectiveScheme& Y,
                                                   const ProjectiveScheme& Z,
                                                   const RationalPoint& p, int pivot) {
    check_projective_pair(Y, Z, p);
    const std::string chart = Y.ring()->var_name(pivot);
    return naive_multiplicity(affine_chart(Y, chart), affine_chart(Z, chart),
                              dehomogenize_point_at(p, pivot));
}

SerreResult projective_serre_multiplicity_at_chart(const ProjectiveScheme& Y,
                                                   const ProjectiveScheme& Z,
                                                   const RationalPoint& p, int pivot) {
    check_projective_pair(Y, Z, p);
    const std::string chart = Y.ring()->var_name(pivot);
    return serre_multiplicity(affine_chart(Y, chart), affine_chart(Z, chart),
                              dehomogenize_point_at(p, pivot));
}

NaiveResult projective_naive_multiplicity(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                                          const RationalPoint& p) {
    check_projective_pair(Y, Z, p);
    return projective_naive_multiplicity_at_chart(Y, Z, p, dehomogenize_point(p).first);
}

SerreResult projective_serre_multiplicity(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                                          const RationalPoint& p) {
    check_projective_pair(Y, Z, p);
    return projective_serre_multiplicity_at_chart(Y, Z, p, dehomogenize_point(p).first);
}

BezoutReport bezout_check(const ProjectiveScheme& Y, const ProjectiveScheme& Z,
                          const std::vector<RationalPoint>& points) {
    if (!same_ring(Y.ring(), Z.ring()))
        throw StructuralError("schemes live in different rings");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (same_projective_point(points[i], points[j]))
                throw StructuralError("points " + points[i].str() + " and " + points[j].str() +
                                      " are the same projective point");
    for (const auto& p : points) {
        if (!p.is_projective() || p.size() != Y.ring()->nvars())
            throw StructuralError("point " + p.str() + " does not fit " + Y.ring()->str());
        for (const Ideal* I : {&Y.ideal(), &Z.ideal()})
            for (const auto& g : I->gens())
                if (!g.evaluate(p.coords()).is_zero())
                    throw PointNotOnIntersectionError("point " + p.str() +
                                                      " does not satisfy generator " + g.str());
    }
    BezoutReport report;
    report.deg_y = projective_degree(Y.ideal());
    report.deg_z = projective_degree(Z.ideal());
    for (const auto& p : points) {
        SerreResult r = projective_serre_multiplicity(Y, Z, p);
        report.multiplicities.emplace_back(p, r.profile.chi);
        report.total += r.profile.chi;
    }
    report.product = report.deg_y * report.deg_z;
    report.matches = report.total == report.product;
    return report;
}

}  // namespace ixm
