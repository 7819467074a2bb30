#include "ixmult/parser.hpp"

#include <cctype>

namespace ixm {
namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& src, int line0, int col0)
        : src_(src), line_(line0), col_(col0) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= src_.size()) return {Token::End, "", line, col};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                num += advance();
            return {Token::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id += advance();
            return {Token::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '/': return {Token::Slash, "/", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }

private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_, col_;
};

constexpr long kMaxParsedExponent = 100000;

class PolyParser {
public:
    PolyParser(const std::string& src, RingPtr ring, int line0, int col0)
        : lex_(src, line0, col0), ring_(std::move(ring)) {
        cur_ = lex_.next();
    }

    Polynomial parse() {
        Polynomial p = expression();
        expect(Token::End, "end of expression");
        return p;
    }

private:
    // expression := sign? product (('+'|'-') product)*
    Polynomial expression() {
        bool neg = false;
        if (cur_.kind == Token::Minus) {
            neg = true;
            bump();
        } else if (cur_.kind == Token::Plus) {
            bump();
        }
        Polynomial acc = product();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool sub = cur_.kind == Token::Minus;
            bump();
            Polynomial rhs = product();
            acc = sub ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    // product := power ('*' power)*
    Polynomial product() {
        Polynomial acc = power();
        while (cur_.kind == Token::Star) {
            bump();
            acc = acc * power();
        }
        // Two adjacent atoms with no operator: reject explicitly so the
        // message says what is wrong instead of "unexpected token".
        if (cur_.kind == Token::Ident || cur_.kind == Token::Number || cur_.kind == Token::LParen)
            throw ParseError("implicit multiplication is not allowed; write '*'", cur_.line, cur_.col);
        return acc;
    }

    // power := atom ('^' nat)?
    Polynomial power() {
        Token at = cur_;
        Polynomial base = atom();
        if (cur_.kind == Token::Caret) {
            bump();
            if (cur_.kind != Token::Number)
                throw ParseError("expected a non-negative integer exponent after '^'", cur_.line, cur_.col);
            long e = 0;
            try {
                e = std::stol(cur_.text);
            } catch (const std::exception&) {
                e = kMaxParsedExponent + 1;
            }
            if (e > kMaxParsedExponent)
                throw ParseError("exponent too large", cur_.line, cur_.col);
            bump();
            base = base.pow(static_cast<unsigned>(e));
            if (cur_.kind == Token::Caret)
                throw ParseError("chained '^' needs parentheses", cur_.line, cur_.col);
        }
        (void)at;
        return base;
    }

    // atom := number ('/' number)? | variable | '(' expression ')'
    Polynomial atom() {
        if (cur_.kind == Token::Number) {
            mpz_class num(cur_.text);
            bump();
            if (cur_.kind == Token::Slash) {
                bump();
                if (cur_.kind != Token::Number)
                    throw ParseError("expected an integer denominator after '/'", cur_.line, cur_.col);
                mpz_class den(cur_.text);
                if (den == 0) throw ParseError("zero denominator", cur_.line, cur_.col);
                bump();
                return Polynomial::constant(ring_, Rational(num, den));
            }
            return Polynomial::constant(ring_, Rational(num));
        }
        if (cur_.kind == Token::Ident) {
            auto idx = ring_->var_index(cur_.text);
            if (!idx)
                throw ParseError("unknown variable '" + cur_.text + "' in ring " + ring_->str(),
                                 cur_.line, cur_.col);
            bump();
            return Polynomial::variable(ring_, *idx);
        }
        if (cur_.kind == Token::LParen) {
            bump();
            Polynomial p = expression();
            expect(Token::RParen, "')'");
            return p;
        }
        throw ParseError("expected a number, variable, or '('", cur_.line, cur_.col);
    }

    void bump() { cur_ = lex_.next(); }
    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k)
            throw ParseError("expected " + what, cur_.line, cur_.col);
        if (k != Token::End) bump();
    }

    Lexer lex_;
    RingPtr ring_;
    Token cur_;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line0, int col0) {
    return PolyParser(text, ring, line0, col0).parse();
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const UserError& e) {
        throw ParseError(e.what(), 1, 1);
    }
}

}  // namespace ixm
