#include "ixmult/polynomial.hpp"

#include <algorithm>

namespace ixm {

Polynomial Polynomial::constant(RingPtr ring, Rational c) {
    if (c.is_zero()) return zero(std::move(ring));
    int n = ring->nvars();
    std::vector<Term> t;
    t.push_back(Term{std::move(c), Monomial(n)});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
    if (i < 0 || i >= ring->nvars()) throw StructuralError("variable index out of range");
    std::vector<Exponent> e(static_cast<std::size_t>(ring->nvars()), 0);
    e[static_cast<std::size_t>(i)] = 1;
    std::vector<Term> t;
    t.push_back(Term{Rational(1), Monomial(std::move(e))});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::monomial_term(RingPtr ring, Rational c, Monomial m) {
    if (m.nvars() != ring->nvars())
        throw StructuralError("monomial length does not match ring");
    if (c.is_zero()) return zero(std::move(ring));
    std::vector<Term> t;
    t.push_back(Term{std::move(c), std::move(m)});
    return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    for (const Term& t : terms)
        if (t.mono.nvars() != ring->nvars())
            throw StructuralError("term monomial length does not match ring");
    const MonomialOrder& ord = ring->order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return cmp_monomials(ord, a.mono, b.mono) == Cmp::Greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (Term& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::int64_t d = terms_[0].mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coeff = -x.coeff;
    return Polynomial(ring_, std::move(t));
}

// Merge of two descending term lists.
Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    const MonomialOrder& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        Cmp c = cmp_monomials(ord, terms_[i].mono, o.terms_[j].mono);
        if (c == Cmp::Greater) {
            out.push_back(terms_[i++]);
        } else if (c == Cmp::Less) {
            out.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero()) out.push_back(Term{std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    if (is_zero() || o.is_zero()) return zero(ring_);
    std::vector<Term> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_)
            prod.push_back(Term{a.coeff * b.coeff, a.mono * b.mono});
    return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::scale(const Rational& c) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (Term& x : t) x.coeff *= c;
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::scale(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return zero(ring_);
    std::vector<Term> t = terms_;
    for (Term& x : t) {
        x.coeff *= c;
        x.mono = x.mono * m;
    }
    // Multiplying by a fixed monomial preserves the term order.
    return Polynomial(ring_, std::move(t));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != ring_->nvars())
        throw StructuralError("evaluation point length does not match ring");
    Rational sum = 0;
    for (const Term& t : terms_) {
        Rational v = t.coeff;
        for (int i = 0; i < ring_->nvars(); ++i) {
            Exponent e = t.mono[i];
            if (e) v *= point[static_cast<std::size_t>(i)].pow(static_cast<unsigned long>(e));
        }
        sum += v;
    }
    return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono) return false;
        if (a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

std::string monomial_str(const PolyRing& ring, const Monomial& m) {
    std::string s;
    for (int i = 0; i < ring.nvars(); ++i) {
        Exponent e = m[i];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.var_name(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        Rational c = t.coeff;
        if (i == 0) {
            if (c.sign() < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        std::string ms = monomial_str(*ring_, t.mono);
        if (ms.empty()) {
            s += c.str();
        } else if (c.is_one()) {
            s += ms;
        } else {
            s += c.str() + "*" + ms;
        }
    }
    return s;
}

}  // namespace ixm
