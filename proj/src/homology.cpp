#include "ixmult/homology.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "ixmult/errors.hpp"
#include "ixmult/std_basis.hpp"

namespace ixm {
namespace {

constexpr std::int64_t kBoxLimit = 50'000'000;

// Standard monomials outside the monomial ideal generated by `leads`:
// all candidates live in the box below the minimal pure powers.
Length count_standard(const RingPtr& ring, const std::vector<Monomial>& leads) {
    const int n = ring->nvars();
    std::vector<std::int64_t> box(static_cast<std::size_t>(n), -1);
    for (const auto& m : leads) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n && pure; ++i)
            if (m[i] != 0) {
                if (var >= 0) pure = false;
                var = i;
            }
        if (!pure) continue;
        if (var < 0) return 0;  // unit lead: nothing survives
        auto& b = box[static_cast<std::size_t>(var)];
        if (b < 0 || m[var] < b) b = m[var];
    }
    std::int64_t total = 1;
    for (std::int64_t b : box) {
        if (b < 0) return std::nullopt;  // no pure power for some variable
        total *= b;
        if (total > kBoxLimit) throw InternalError("standard monomial box too large");
        if (total == 0) return 0;
    }
    std::vector<Exponent> e(static_cast<std::size_t>(n), 0);
    std::int64_t count = 0;
    while (true) {
        Monomial m(e);
        bool divisible = false;
        for (const auto& l : leads)
            if (l.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
        int i = 0;
        for (; i < n; ++i) {
            if (++e[static_cast<std::size_t>(i)] < box[static_cast<std::size_t>(i)]) break;
            e[static_cast<std::size_t>(i)] = 0;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace

Length vdim_ideal(const Ideal& I) {
    StdBasis B = std_basis(I);
    std::vector<Monomial> leads;
    leads.reserve(B.gens.size());
    for (const auto& g : B.gens) leads.push_back(g.lead_monomial());
    return count_standard(I.ring(), leads);
}

Length vdim_module(const RingPtr& ring, int rank, const std::vector<ModuleVector>& gens) {
    ModuleStdBasis B = std_basis(ring, rank, gens);
    std::int64_t total = 0;
    for (int p = 0; p < rank; ++p) {
        std::vector<Monomial> leads;
        for (const auto& g : B.gens) {
            // lead of g under term-over-position: greatest component lead,
            // ties to the lower position
            const Polynomial* best = nullptr;
            int best_pos = -1;
            for (int q = 0; q < g.rank(); ++q) {
                const Polynomial& c = g.comp(q);
                if (c.is_zero()) continue;
                if (!best ||
                    cmp_monomials(ring->order(), c.lead_monomial(), best->lead_monomial()) ==
                        Cmp::Greater) {
                    best = &c;
                    best_pos = q;
                }
            }
            if (best_pos == p) leads.push_back(best->lead_monomial());
        }
        Length part = count_standard(ring, leads);
        if (!part) return std::nullopt;
        total += *part;
    }
    return total;
}

Length complex_homology_length(const PresentationMatrix& d,
                               const std::vector<ModuleVector>& next_columns, const Ideal& Q) {
    const RingPtr& R = d.ring();
    if (!same_ring(R, Q.ring())) throw StructuralError("homology: ring mismatch");
    const int m = d.cols();
    if (m == 0) return 0;

    // kernel of (d mod Q): syzygies of d's columns augmented with Q·e_r,
    // truncated to the coordinates that pair with d's columns
    std::vector<ModuleVector> aug = d.columns();
    for (int r = 0; r < d.rows(); ++r)
        for (const auto& q : Q.gens())
            aug.push_back(ModuleVector::unit(R, d.rows(), r).scale(q));
    std::vector<ModuleVector> kernel;
    for (const auto& s : syzygies(R, d.rows(), aug)) {
        std::vector<Polynomial> head(s.comps().begin(), s.comps().begin() + m);
        ModuleVector k(R, std::move(head));
        if (!k.is_zero()) kernel.push_back(std::move(k));
    }
    if (kernel.empty()) return 0;

    // relations: im(next) + Q·F; present ker/relations and count its length
    std::vector<ModuleVector> rel = next_columns;
    for (int r = 0; r < m; ++r)
        for (const auto& q : Q.gens()) rel.push_back(ModuleVector::unit(R, m, r).scale(q));

    std::vector<ModuleVector> combined = kernel;
    combined.insert(combined.end(), rel.begin(), rel.end());
    const int k = static_cast<int>(kernel.size());
    std::vector<ModuleVector> presentation;
    for (const auto& s : syzygies(R, m, combined)) {
        std::vector<Polynomial> head(s.comps().begin(), s.comps().begin() + k);
        presentation.push_back(ModuleVector(R, std::move(head)));
    }
    return vdim_module(R, k, presentation);
}

TorCalculator::TorCalculator(Ideal I, Ideal J) : I_(std::move(I)), J_(std::move(J)) {
    if (!same_ring(I_.ring(), J_.ring()))
        throw StructuralError("Tor of ideals in different rings");
}

const FreeResolution& TorCalculator::resolution() {
    if (!res_) res_ = free_resolution(I_);
    return *res_;
}

Length TorCalculator::tor_length(int i) {
    if (i < 0) throw StructuralError("negative Tor index");
    auto it = cache_.find(i);
    if (it != cache_.end()) return it->second;

    Length out;
    if (i == 0) {
        out = vdim_ideal(I_ + J_);
    } else {
        const FreeResolution& F = resolution();
        if (i > F.length()) {
            out = 0;
        } else {
            const PresentationMatrix& di = F.d[static_cast<std::size_t>(i - 1)];
            std::vector<ModuleVector> next;
            if (i < F.length()) next = F.d[static_cast<std::size_t>(i)].columns();
            out = complex_homology_length(di, next, J_);
        }
    }
    cache_.emplace(i, out);
    return out;
}

TorProfile TorCalculator::chi_profile() {
    const int cap = I_.ring()->nvars();
    TorProfile prof;
    Length t0 = tor_length(0);
    if (!t0)
        throw FiniteLengthViolation(
            "length of Tor_0 is infinite: the intersection is not isolated here");
    prof.lengths.push_back(*t0);
    int i = 0;
    while (prof.lengths.back() != 0) {
        ++i;
        if (i > cap) throw InternalError("nonzero Tor length past the variable-count cap");
        Length t = tor_length(i);
        if (!t) throw InternalError("infinite Tor length above degree 0");
        prof.lengths.push_back(*t);
    }
    for (int j = i + 1; j <= cap; ++j) {
        Length t = tor_length(j);
        if (!t || *t != 0)
            throw InternalError("Tor length fails to stay zero after the first zero");
    }
    std::int64_t s = 0, sign = 1;
    for (std::int64_t l : prof.lengths) {
        s += sign * l;
        sign = -sign;
    }
    prof.chi = s;
    return prof;
}

Length tor_length(int i, const Ideal& I, const Ideal& J) {
    return TorCalculator(I, J).tor_length(i);
}

TorProfile chi(const Ideal& I, const Ideal& J) { return TorCalculator(I, J).chi_profile(); }

Length koszul_tor_length(int i, const std::vector<Polynomial>& fs, const Ideal& I) {
    const RingPtr& R = I.ring();
    for (const auto& f : fs)
        if (!same_ring(f.ring(), R)) throw StructuralError("Koszul: ring mismatch");
    const int s = static_cast<int>(fs.size());
    if (i < 0) throw StructuralError("negative Koszul index");
    if (s > 20) throw InternalError("Koszul complex too wide");
    if (i > s) return 0;
    if (i == 0) {
        Ideal sum = I + Ideal(R, fs);
        return vdim_ideal(sum);
    }

    // basis of Λ^k(R^s): subsets of {0..s-1} of size k, ordered by bitmask
    auto subsets = [&](int k) {
        std::vector<std::uint32_t> out;
        for (std::uint32_t b = 0; b < (1u << s); ++b)
            if (std::popcount(b) == k) out.push_back(b);
        return out;
    };
    auto index_of = [](const std::vector<std::uint32_t>& v, std::uint32_t b) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), b) - v.begin());
    };
    auto differential = [&](int k) {  // d_k : Λ^k -> Λ^(k-1)
        auto dom = subsets(k);
        auto codom = subsets(k - 1);
        std::vector<ModuleVector> cols;
        cols.reserve(dom.size());
        for (std::uint32_t b : dom) {
            auto col = ModuleVector::zero(R, static_cast<int>(codom.size()));
            int seen = 0;
            for (int j = 0; j < s; ++j) {
                if (!(b & (1u << j))) continue;
                const std::uint32_t rest = b & ~(1u << j);
                auto term = ModuleVector::unit(R, static_cast<int>(codom.size()),
                                               index_of(codom, rest))
                                .scale(fs[static_cast<std::size_t>(j)]);
                col = (seen % 2 == 0) ? col + term : col - term;
                ++seen;
            }
            cols.push_back(std::move(col));
        }
        return PresentationMatrix(R, static_cast<int>(subsets(k - 1).size()), std::move(cols));
    };

    PresentationMatrix di = differential(i);
    std::vector<ModuleVector> next;
    if (i < s) next = differential(i + 1).columns();
    return complex_homology_length(di, next, I);
}

}  // namespace ixm
