#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ixmult/monomial.hpp"

namespace ixm {

enum class Cmp { Less, Equal, Greater };

enum class OrderKind {
    Lex,           // global
    DegRevLex,     // global ("dp")
    NegDegRevLex,  // local ("ds"): lower total degree is greater
    Block,         // concatenation of the above on variable blocks
};

// Total multiplicative order on monomials of a fixed ring.
class MonomialOrder {
public:
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::DegRevLex); }
    static MonomialOrder negdegrevlex() { return MonomialOrder(OrderKind::NegDegRevLex); }

    // blocks = (inner kind, width) pairs, applied left to right; widths must
    // cover the whole exponent vector. Inner kinds may not be Block.
    static MonomialOrder block(std::vector<std::pair<OrderKind, int>> blocks);

    OrderKind kind() const { return kind_; }
    const std::vector<std::pair<OrderKind, int>>& blocks() const { return blocks_; }

    // Global: every variable > 1. Local: 1 > every variable.
    bool is_global() const;
    bool is_local() const;

    std::string name() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind_ == b.kind_ && a.blocks_ == b.blocks_;
    }
    friend bool operator!=(const MonomialOrder& a, const MonomialOrder& b) { return !(a == b); }

private:
    explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

    OrderKind kind_;
    std::vector<std::pair<OrderKind, int>> blocks_;  // nonempty iff kind_ == Block
};

Cmp cmp_monomials(const MonomialOrder& order, const Monomial& a, const Monomial& b);

}  // namespace ixm
