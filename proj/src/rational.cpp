#include "ixmult/rational.hpp"

#include <cctype>
#include <ostream>

namespace ixm {

Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw UserError("empty rational literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto read_digits = [&](const char* what) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw UserError(std::string("expected ") + what + " in rational literal '" + text + "'");
        return text.substr(start, i - start);
    };
    mpz_class num(read_digits("numerator"));
    mpz_class den(1);
    if (i < text.size() && text[i] == '/') {
        ++i;
        den = mpz_class(read_digits("denominator"));
    }
    if (i != text.size()) throw UserError("trailing characters in rational literal '" + text + "'");
    if (den == 0) throw UserError("rational literal with zero denominator: '" + text + "'");
    Rational r(num, den);
    return neg ? -r : r;
}

Rational Rational::pow(unsigned long e) const {
    Rational base = *this;
    Rational acc = 1;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ixm
