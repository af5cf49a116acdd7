#include "jacal/expr.hpp"

#include <cctype>

namespace jacal {

namespace {

class Parser {
public:
    Parser(const std::string& s, const Vars& vars) : s_(s), vars_(vars) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        Poly p = term();
        for (;;) {
            if (eat('+')) p += term();
            else if (eat('-')) p -= term();
            else return p;
        }
    }

    Poly term() {
        Poly p = factor();
        while (peek() == '*') { eat('*'); p *= factor(); }
        return p;
    }

    Poly factor() {
        Poly p = atom();
        if (eat('^')) {
            Int n = integer();
            if (n < 0) fail("exponent must be a nonnegative integer");
            p = p.pow(static_cast<unsigned>(n));
        }
        return p;
    }

    Poly atom() {
        char c = peek();
        if (c == '-') { eat('-'); return -factor(); }
        if (c == '(') {
            eat('(');
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                if (den == 0) fail("zero denominator");
                return Poly::constant(vars_, Rat(num, den));
            }
            return Poly::constant(vars_, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            skip_ws();
            std::size_t at = pos_;
            std::string id = identifier();
            int i = vars_.index_of(id);
            if (i < 0) fail_at("unknown coordinate '" + id + "'", at);
            return Poly::var(vars_, static_cast<std::size_t>(i));
        }
        fail("expected a number, coordinate, or '('");
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return Int(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    const Vars& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const Vars& vars) {
    return Parser(text, vars).parse();
}

}  // namespace jacal
