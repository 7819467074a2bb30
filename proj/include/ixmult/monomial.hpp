#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ixmult/errors.hpp"

namespace ixm {

using Exponent = std::int32_t;

// Largest exponent we allow; checked on every product so that degree
// arithmetic can never overflow.
inline constexpr Exponent kMaxExponent = 1 << 30;

// Exponent vector of fixed length (the ambient ring's variable count).
class Monomial {
public:
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}
    Monomial(std::initializer_list<Exponent> e) : e_(e) { check_range(); }
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) { check_range(); }

    int nvars() const { return static_cast<int>(e_.size()); }
    Exponent operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<Exponent>& exponents() const { return e_; }

    std::int64_t degree() const {
        std::int64_t d = 0;
        for (Exponent x : e_) d += x;
        return d;
    }

    bool is_unit() const {
        for (Exponent x : e_) if (x != 0) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        check_same_length(o);
        std::vector<Exponent> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(e_[i]) + o.e_[i];
            if (s > kMaxExponent)
                throw InternalError("monomial exponent overflow (degree beyond supported range)");
            r[i] = static_cast<Exponent>(s);
        }
        return Monomial(std::move(r));
    }

    bool divides(const Monomial& o) const {
        check_same_length(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; requires o.divides(*this).
    Monomial operator/(const Monomial& o) const {
        check_same_length(o);
        std::vector<Exponent> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (o.e_[i] > e_[i]) throw InternalError("monomial division without divisibility");
            r[i] = e_[i] - o.e_[i];
        }
        return Monomial(std::move(r));
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check_same_length(b);
        std::vector<Exponent> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        return Monomial(std::move(r));
    }

    static Monomial gcd(const Monomial& a, const Monomial& b) {
        a.check_same_length(b);
        std::vector<Exponent> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
        return Monomial(std::move(r));
    }

    // true if the two monomials share no variable.
    static bool coprime(const Monomial& a, const Monomial& b) {
        a.check_same_length(b);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

private:
    void check_range() const {
        for (Exponent x : e_)
            if (x < 0 || x > kMaxExponent) throw StructuralError("monomial exponent out of range");
    }
    void check_same_length(const Monomial& o) const {
        if (e_.size() != o.e_.size())
            throw StructuralError("monomials of different variable counts");
    }

    std::vector<Exponent> e_;
};

}  // namespace ixm
