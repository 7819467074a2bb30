#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "ixmult/errors.hpp"

namespace ixm {

// Exact rational number. Always stored canonically: gcd(|num|, den) = 1,
// den > 0, zero is 0/1. Backed by GMP.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, coefficients read naturally
    explicit Rational(const mpz_class& n) : q_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw UserError("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    // Accepts "n" or "n/d" with an optional leading sign.
    static Rational from_string(const std::string& text);

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InternalError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    // Nonnegative integer power.
    Rational pow(unsigned long e) const;

    // "n" when integral, "n/d" otherwise.
    std::string str() const;

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ixm
