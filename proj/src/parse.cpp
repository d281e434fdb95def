#include "sumsynth/parse.hpp"

#include <cctype>

namespace sumsynth {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    BiPoly parse() {
        BiPoly p = expression();
        skip_ws();
        if (pos_ < text_.size()) {
            if (text_[pos_] == '/')
                throw ParseError(pos_, "division is only allowed in rational literals");
            throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
        }
        return p;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    // expression := term (('+' | '-') term)*
    BiPoly expression() {
        BiPoly acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    // term := factor ('*' factor)*
    BiPoly term() {
        BiPoly acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    // factor := '-' factor | atom ('^' uint)?
    BiPoly factor() {
        if (accept('-')) return -factor();
        BiPoly base = atom();
        if (accept('^')) {
            std::size_t at = pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw ParseError(at, "exponent must be a nonnegative integer literal");
            unsigned long e = read_uint();
            BiPoly p = BiPoly::constant(Rational(1));
            for (unsigned long i = 0; i < e; ++i) p = p * base;
            return p;
        }
        return base;
    }

    // atom := uint ('/' uint)? | 'n' '!'? | '(' expression ')'
    BiPoly atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = BigInt(read_uint_str());
            if (accept('/')) {
                std::size_t at = pos_;
                skip_ws();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    throw ParseError(at, "expected denominator digits");
                BigInt den = BigInt(read_uint_str());
                if (den == 0) throw ParseError(at, "zero denominator");
                return BiPoly::constant(Rational(num, den));
            }
            return BiPoly::constant(Rational(num));
        }
        if (c == 'n') {
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '!') {
                ++pos_;
                return BiPoly::monomial(0, 1, Rational(1));
            }
            return BiPoly::monomial(1, 0, Rational(1));
        }
        if (c == '(') {
            ++pos_;
            BiPoly p = expression();
            std::size_t at = pos_;
            if (!accept(')')) throw ParseError(at, "expected ')'");
            return p;
        }
        if (c == '/')
            throw ParseError(pos_, "division is only allowed in rational literals");
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string read_uint_str() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    unsigned long read_uint() { return std::stoul(read_uint_str()); }
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace sumsynth
