#ifndef PEAKRED_PARSE_HPP
#define PEAKRED_PARSE_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bipoly.hpp"
#include "unipoly.hpp"

namespace peakred {

/// Syntax error carrying a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

// expr    := term (('+' | '-') term)*
// term    := unary ('*' unary)*
// unary   := ('-' | '+') unary | power
// power   := primary ('^' integer)?
// primary := integer ('/' integer)? | variable | '(' expr ')'
class PolyParser {
public:
    PolyParser(std::string_view text, std::vector<std::string> vars) : s_(text), vars_(std::move(vars)) {}

    BiPoly parse() {
        skip_ws();
        if (pos_ >= s_.size()) fail("empty expression");
        BiPoly p = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        std::size_t line = 1, col = 1;
        for (std::size_t k = 0; k < at && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }
    BiPoly term() {
        BiPoly acc = unary();
        while (peek('*')) {
            ++pos_;
            acc *= unary();
        }
        return acc;
    }
    BiPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }
    BiPoly power() {
        BiPoly base = primary();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
            std::size_t at = pos_;
            Integer e = integer("exponent");
            if (e > 100000) fail_at("exponent too large", at);
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }
    BiPoly primary() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = integer("number");
            if (peek('/')) {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                Integer den = integer("denominator");
                if (den == 0) fail_at("zero denominator", at);
                return BiPoly(make_rational(num, den));
            }
            return BiPoly(Rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            for (std::size_t k = 0; k < vars_.size(); ++k) {
                if (vars_[k] == name) return k == 0 ? BiPoly::x() : BiPoly::y();
            }
            fail_at("unknown variable '" + name + "'", start);
        }
        fail(std::string("unexpected '") + c + "'");
    }
    Integer integer(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::vector<std::string> vars_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in the two named variables (default x, y).
inline BiPoly parse_poly(std::string_view text, const std::pair<std::string, std::string>& vars = {"x", "y"}) {
    return detail::PolyParser(text, {vars.first, vars.second}).parse();
}

/// Parses a univariate polynomial in `var` (default t).
inline UniPoly parse_unipoly(std::string_view text, const std::string& var = "t") {
    BiPoly p = detail::PolyParser(text, {var}).parse();
    return *p.as_poly_in_x();
}

/// Splits "a; b" at the single top-level ';'.
inline std::pair<std::string, std::string> split_pair(std::string_view text) {
    auto k = text.find(';');
    if (k == std::string_view::npos || text.find(';', k + 1) != std::string_view::npos)
        throw ParseError("expected exactly one ';' separating two expressions", 1, text.size() + 1);
    return {std::string(text.substr(0, k)), std::string(text.substr(k + 1))};
}

}  // namespace peakred

#endif
