#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ixmult/ideal.hpp"
#include "ixmult/resolution.hpp"

namespace ixm {

// Length of a module; empty means infinite (the point is not isolated).
using Length = std::optional<std::int64_t>;

// Number of standard monomials outside the lead-term ideal of std(I).
Length vdim_ideal(const Ideal& I);

// Length of R^rank / <gens>, by standard module-term counting.
Length vdim_module(const RingPtr& ring, int rank, const std::vector<ModuleVector>& gens);

// Length of ker(d mod Q) / (im(next) + Q·R^cols) where next's columns land in
// R^(d.cols). Shared between Tor via resolutions and the Koszul oracle.
Length complex_homology_length(const PresentationMatrix& d,
                               const std::vector<ModuleVector>& next_columns, const Ideal& Q);

struct TorProfile {
    std::vector<std::int64_t> lengths;  // index i = length(Tor_i); ends at the first zero
    std::int64_t chi = 0;
};

// Tor_i^R(R/I, R/J) lengths over one ring (the localization for local orders);
// the resolution of R/I is computed once and reused.
class TorCalculator {
public:
    TorCalculator(Ideal I, Ideal J);

    Length tor_length(int i);

    // Accumulates (-1)^i · length(Tor_i) until the first zero length, with a
    // hard cap at the variable count; checks everything past the stop is zero.
    TorProfile chi_profile();

private:
    const FreeResolution& resolution();

    Ideal I_, J_;
    std::optional<FreeResolution> res_;
    std::map<int, Length> cache_;
};

Length tor_length(int i, const Ideal& I, const Ideal& J);
TorProfile chi(const Ideal& I, const Ideal& J);

// Homology length of the Koszul complex on fs tensored with R/I; agrees with
// tor_length(i, I, (fs)) when fs is a regular sequence on the localization.
Length koszul_tor_length(int i, const std::vector<Polynomial>& fs, const Ideal& I);

}  // namespace ixm
