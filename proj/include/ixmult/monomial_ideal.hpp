#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <vector>

#include "ixmult/ideal.hpp"
#include "ixmult/monomial.hpp"

namespace ixm {

// Monomial ideal held by its minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal(RingPtr ring, std::vector<Monomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains_unit() const;
    bool contains(const Monomial& m) const;

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Monomial> gens_;
};

// Univariate polynomial in t over Z, dense ascending coefficients.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<mpz_class> coeffs);
    static IntegerPolynomial one();

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& coeff(int i) const;

    IntegerPolynomial operator+(const IntegerPolynomial& o) const;
    IntegerPolynomial operator-(const IntegerPolynomial& o) const;
    IntegerPolynomial operator*(const IntegerPolynomial& o) const;
    IntegerPolynomial times_t_power(int d) const;

    mpz_class evaluate_one() const;

    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b);
    std::string str() const;

private:
    std::vector<mpz_class> c_;
};

MonomialIdeal lead_ideal(const Ideal& I);

// Largest size of a variable subset S with no generator supported inside S;
// equals dim R/M. Returns -1 when M = (1).
int krull_dimension(const MonomialIdeal& M);

// Numerator N(t) with Hilbert series of R/M equal to N(t)/(1-t)^nvars.
IntegerPolynomial hilbert_numerator(const MonomialIdeal& M);

// Degree of Proj(R/I) for homogeneous I: hilbert numerator of the lead ideal
// under DegRevLex, divided by (1-t)^codim, evaluated at t = 1.
std::int64_t projective_degree(const Ideal& I);

}  // namespace ixm
