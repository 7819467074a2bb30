#include "ixmult/resolution.hpp"

#include "ixmult/errors.hpp"
#include "ixmult/std_basis.hpp"

namespace ixm {
namespace {

// Drops every generator that lies in the span of the others. Over a local
// order this yields a minimal generating set (Nakayama), which keeps the
// iterated syzygy stages within the global-dimension bound.
std::vector<ModuleVector> minimize_generators(const RingPtr& R, int rank,
                                              std::vector<ModuleVector> gens) {
    for (std::size_t i = 0; i < gens.size();) {
        std::vector<ModuleVector> others;
        others.reserve(gens.size() - 1);
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (j != i) others.push_back(gens[j]);
        ModuleStdBasis B = std_basis(R, rank, others, 0);
        if (normal_form(gens[i], B.gens, 0).is_zero())
            gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return gens;
}

}  // namespace

PresentationMatrix::PresentationMatrix(RingPtr ring, int rows, std::vector<ModuleVector> columns)
    : ring_(std::move(ring)), rows_(rows), cols_(std::move(columns)) {
    if (rows_ < 1) throw StructuralError("presentation matrix needs at least one row");
    for (const auto& c : cols_)
        if (!same_ring(c.ring(), ring_) || c.rank() != rows_)
            throw StructuralError("presentation matrix column shape mismatch");
}

const Polynomial& PresentationMatrix::entry(int r, int c) const {
    return cols_[static_cast<std::size_t>(c)].comp(r);
}

PresentationMatrix PresentationMatrix::compose(const PresentationMatrix& next) const {
    if (next.rows() != cols())
        throw StructuralError("composition dimension mismatch");
    std::vector<ModuleVector> out;
    out.reserve(static_cast<std::size_t>(next.cols()));
    for (int c = 0; c < next.cols(); ++c) {
        auto acc = ModuleVector::zero(ring_, rows_);
        for (int k = 0; k < cols(); ++k)
            acc = acc + cols_[static_cast<std::size_t>(k)].scale(next.entry(k, c));
        out.push_back(std::move(acc));
    }
    return PresentationMatrix(ring_, rows_, std::move(out));
}

bool PresentationMatrix::is_zero() const {
    for (const auto& c : cols_)
        if (!c.is_zero()) return false;
    return true;
}

int FreeResolution::rank(int i) const {
    if (i == 0) return rank0;
    if (i <= length()) return d[static_cast<std::size_t>(i - 1)].cols();
    return 0;
}

FreeResolution free_resolution(const Ideal& I) {
    const RingPtr& R = I.ring();
    FreeResolution res{R, 1, {}};

    StdBasis B = std_basis(I);
    if (B.gens.empty()) return res;  // R itself is free

    std::vector<ModuleVector> cols;
    cols.reserve(B.gens.size());
    for (const auto& g : B.gens) cols.push_back(ModuleVector(R, {g}));
    cols = minimize_generators(R, 1, std::move(cols));
    res.d.push_back(PresentationMatrix(R, 1, std::move(cols)));

    while (true) {
        const PresentationMatrix& last = res.d.back();
        std::vector<ModuleVector> syz = syzygies(R, last.rows(), last.columns());
        if (syz.empty()) break;
        syz = minimize_generators(R, last.cols(), std::move(syz));
        if (res.length() + 1 > R->nvars())
            throw InternalError("free resolution exceeds the variable count");
        res.d.push_back(PresentationMatrix(R, last.cols(), std::move(syz)));
    }
    return res;
}

}  // namespace ixm
