#pragma once

#include <vector>

#include "ixmult/ideal.hpp"
#include "ixmult/module_vector.hpp"

namespace ixm {

// Map R^cols -> R^rows given by column vectors.
class PresentationMatrix {
public:
    PresentationMatrix(RingPtr ring, int rows, std::vector<ModuleVector> columns);

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return static_cast<int>(cols_.size()); }
    const ModuleVector& column(int c) const { return cols_[static_cast<std::size_t>(c)]; }
    const std::vector<ModuleVector>& columns() const { return cols_; }
    const Polynomial& entry(int r, int c) const;

    // this ∘ next : R^(next.cols) -> R^rows
    PresentationMatrix compose(const PresentationMatrix& next) const;
    bool is_zero() const;

private:
    RingPtr ring_;
    int rows_;
    std::vector<ModuleVector> cols_;
};

// F_0 = R^rank0 <- F_1 <- ... ; d[i] is the differential F_{i+1} -> F_i.
struct FreeResolution {
    RingPtr ring;
    int rank0 = 1;
    std::vector<PresentationMatrix> d;

    int length() const { return static_cast<int>(d.size()); }
    int rank(int i) const;
};

// Iterated-syzygy resolution of R/I (over the localization when the ring
// order is local); not minimized. Stops when the syzygy module vanishes.
FreeResolution free_resolution(const Ideal& I);

}  // namespace ixm
