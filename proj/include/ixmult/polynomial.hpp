#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ixmult/monomial.hpp"
#include "ixmult/rational.hpp"
#include "ixmult/ring.hpp"

namespace ixm {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Multivariate polynomial over Q. Terms are kept strictly descending under
// the ring's order, with no zero coefficients and no duplicate monomials.
class Polynomial {
public:
    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring), {}); }
    static Polynomial constant(RingPtr ring, Rational c);
    static Polynomial variable(RingPtr ring, int i);
    static Polynomial monomial_term(RingPtr ring, Rational c, Monomial m);
    // Normalizes: sorts, merges duplicates, drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    const Term& lead_term() const {
        if (terms_.empty()) throw InternalError("lead term of the zero polynomial");
        return terms_.front();
    }
    const Monomial& lead_monomial() const { return lead_term().mono; }
    const Rational& lead_coeff() const { return lead_term().coeff; }

    // Maximal total degree among terms; -1 for the zero polynomial.
    std::int64_t total_degree() const;

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
    }
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scale(const Rational& c) const;
    // Multiply by the term c * m.
    Polynomial scale(const Rational& c, const Monomial& m) const;
    Polynomial pow(unsigned e) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Descending terms, '^' for powers, explicit '*'; re-parseable.
    std::string str() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    void check_same_ring(const Polynomial& o) const {
        if (!same_ring(ring_, o.ring_))
            throw StructuralError("polynomials from different rings");
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::string monomial_str(const PolyRing& ring, const Monomial& m);

}  // namespace ixm
