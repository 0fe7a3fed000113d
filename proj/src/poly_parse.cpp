#include "dynprop/poly_parse.hpp"

#include <cctype>

#include "dynprop/errors.hpp"

namespace dynprop {

namespace {

// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor | factor)*      -- juxtaposition before 'x' or '('
// factor := '-' factor | base ('^' uint)?
// base   := uint | 'x' | '(' expr ')'
class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    UniPoly parse() {
        skip_ws();
        UniPoly p = (peek() == '[') ? coeff_list() : expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    UniPoly coeff_list() {
        expect('[');
        std::vector<Rational> c;
        skip_ws();
        if (peek() != ']') {
            c.push_back(signed_rational());
            skip_ws();
            while (peek() == ',') {
                ++pos_;
                c.push_back(signed_rational());
                skip_ws();
            }
        }
        expect(']');
        return UniPoly(std::move(c));
    }

    Rational signed_rational() {
        skip_ws();
        bool neg = false;
        while (peek() == '-' || peek() == '+') {
            if (peek() == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        Integer num = unsigned_integer();
        Integer den = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            den = unsigned_integer();
            if (den == 0) fail("zero denominator");
        }
        Rational r(neg ? -num : num, den);
        r.canonicalize();
        return r;
    }

    UniPoly expr() {
        UniPoly acc = term();
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            char op = s_[pos_++];
            UniPoly t = term();
            acc = (op == '+') ? acc + t : acc - t;
            skip_ws();
        }
        return acc;
    }

    UniPoly term() {
        UniPoly acc = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                UniPoly f = factor();
                if (c == '*') {
                    acc = acc * f;
                } else {
                    if (f.degree() != 0) fail("division only by a nonzero constant");
                    acc = acc.scaled(1 / f.constant_term());
                }
            } else if (c == 'x' || c == '(') {
                acc = acc * factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    UniPoly factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        if (peek() == '+') {
            ++pos_;
            return factor();
        }
        UniPoly b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            Integer e = unsigned_integer();
            if (e > 100000) fail("exponent too large");
            unsigned long n = e.get_ui();
            UniPoly r = UniPoly::constant(1);
            UniPoly sq = b;
            while (n > 0) {  // square-and-multiply
                if (n & 1) r = r * sq;
                n >>= 1;
                if (n) sq = sq * sq;
            }
            return r;
        }
        return b;
    }

    UniPoly base() {
        skip_ws();
        char c = peek();
        if (c == 'x') {
            ++pos_;
            return UniPoly::x();
        }
        if (c == '(') {
            ++pos_;
            UniPoly inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return UniPoly::constant(Rational(unsigned_integer()));
        fail("expected a number, 'x', or '('");
        return UniPoly();  // unreachable
    }

    Integer unsigned_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Integer(s_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ContractError("polynomial parse error at position " + std::to_string(pos_) + ": " + why +
                            " in '" + s_ + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

UniPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace dynprop
