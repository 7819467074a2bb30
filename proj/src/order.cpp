#include "ixmult/order.hpp"

namespace ixm {
namespace {

bool kind_is_global(OrderKind k) { return k == OrderKind::Lex || k == OrderKind::DegRevLex; }

// Compares exponent slices [lo, hi) under a non-block kind.
Cmp cmp_slice(OrderKind kind, const Monomial& a, const Monomial& b, int lo, int hi) {
    switch (kind) {
        case OrderKind::Lex:
            for (int i = lo; i < hi; ++i) {
                if (a[i] != b[i]) return a[i] > b[i] ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        case OrderKind::DegRevLex:
        case OrderKind::NegDegRevLex: {
            std::int64_t da = 0, db = 0;
            for (int i = lo; i < hi; ++i) {
                da += a[i];
                db += b[i];
            }
            if (da != db) {
                bool higher_wins = kind == OrderKind::DegRevLex;
                return (da > db) == higher_wins ? Cmp::Greater : Cmp::Less;
            }
            // Reverse lex tie-break: the last nonzero entry of a-b decides,
            // negative meaning a > b. Shared by both degree variants.
            for (int i = hi - 1; i >= lo; --i) {
                if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Greater : Cmp::Less;
            }
            return Cmp::Equal;
        }
        case OrderKind::Block:
            throw InternalError("nested block order");
    }
    throw InternalError("unknown order kind");
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<std::pair<OrderKind, int>> blocks) {
    if (blocks.empty()) throw StructuralError("block order with no blocks");
    for (const auto& [kind, width] : blocks) {
        if (kind == OrderKind::Block) throw StructuralError("block order may not nest blocks");
        if (width <= 0) throw StructuralError("block order with non-positive width");
    }
    MonomialOrder o(OrderKind::Block);
    o.blocks_ = std::move(blocks);
    return o;
}

bool MonomialOrder::is_global() const {
    if (kind_ != OrderKind::Block) return kind_is_global(kind_);
    for (const auto& [kind, width] : blocks_)
        if (!kind_is_global(kind)) return false;
    return true;
}

bool MonomialOrder::is_local() const {
    if (kind_ != OrderKind::Block) return kind_ == OrderKind::NegDegRevLex;
    for (const auto& [kind, width] : blocks_)
        if (kind != OrderKind::NegDegRevLex) return false;
    return true;
}

std::string MonomialOrder::name() const {
    switch (kind_) {
        case OrderKind::Lex: return "lex";
        case OrderKind::DegRevLex: return "degrevlex";
        case OrderKind::NegDegRevLex: return "negdegrevlex";
        case OrderKind::Block: {
            std::string s = "block(";
            for (std::size_t i = 0; i < blocks_.size(); ++i) {
                if (i) s += ",";
                s += MonomialOrder(blocks_[i].first).name();
                s += ":" + std::to_string(blocks_[i].second);
            }
            return s + ")";
        }
    }
    return "?";
}

Cmp cmp_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        throw StructuralError("comparing monomials of different variable counts");
    if (order.kind() != OrderKind::Block)
        return cmp_slice(order.kind(), a, b, 0, a.nvars());

    int total = 0;
    for (const auto& [kind, width] : order.blocks()) total += width;
    if (total != a.nvars())
        throw StructuralError("block order width does not match monomial");
    int lo = 0;
    for (const auto& [kind, width] : order.blocks()) {
        const int hi = lo + width;
        Cmp c = cmp_slice(kind, a, b, lo, hi);
        if (c != Cmp::Equal) return c;
        lo = hi;
    }
    return Cmp::Equal;
}

}  // namespace ixm
