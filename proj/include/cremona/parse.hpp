#ifndef CREMONA_PARSE_HPP
#define CREMONA_PARSE_HPP

#include <cctype>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hpoly.hpp"

namespace cremona {

/// Not necessarily homogeneous polynomial in up to three named variables.
using SparsePoly = std::map<Exponent, Rational, std::greater<>>;

namespace detail {

inline void add_into(SparsePoly& acc, const SparsePoly& b, const Rational& scale = 1) {
    for (const auto& [e, c] : b) {
        auto [it, inserted] = acc.try_emplace(e, c * scale);
        if (!inserted) {
            it->second += c * scale;
            if (it->second == 0) acc.erase(it);
        }
    }
}

inline SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto [it, inserted] = r.try_emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

// Recursive-descent parser:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
class ExprParser {
   public:
    ExprParser(std::string_view text, std::vector<std::string> vars, std::size_t offset = 0)
        : text_(text), vars_(std::move(vars)), offset_(offset) {}

    SparsePoly parse_all() {
        SparsePoly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(offset_ + pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    SparsePoly expr() {
        SparsePoly acc = term();
        for (;;) {
            if (accept('+')) {
                add_into(acc, term());
            } else if (accept('-')) {
                add_into(acc, term(), -1);
            } else {
                return acc;
            }
        }
    }

    SparsePoly term() {
        SparsePoly acc = unary();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                acc = multiply(acc, unary());
                continue;
            }
            // Juxtaposition such as "2x" or "x y" is rejected explicitly.
            if (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '('))
                fail("missing '*' (juxtaposition is not allowed)");
            return acc;
        }
    }

    SparsePoly unary() {
        if (accept('-')) {
            SparsePoly p = unary();
            for (auto& [e, c] : p) c = -c;
            return p;
        }
        if (accept('+')) return unary();
        return power();
    }

    SparsePoly power() {
        SparsePoly base = atom();
        if (!accept('^')) return base;
        skip_ws();
        const std::string digits = integer_literal();
        if (digits.size() > 4) fail("exponent too large");
        const int k = std::stoi(digits);
        SparsePoly r{{Exponent{0, 0, 0}, Rational(1)}};
        for (int i = 0; i < k; ++i) r = multiply(r, base);
        return r;
    }

    std::string integer_literal() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    SparsePoly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            SparsePoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            Rational value{Integer(integer_literal())};
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const Integer den(integer_literal());
                if (den == 0) fail("zero denominator");
                value /= Rational(den);
            }
            if (value == 0) return {};
            return SparsePoly{{Exponent{0, 0, 0}, value}};
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) {
                    Exponent e{0, 0, 0};
                    e[i] = 1;
                    return SparsePoly{{e, Rational(1)}};
                }
            }
            pos_ = start;
            fail("unknown variable '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    std::vector<std::string> vars_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline SparsePoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                                   std::size_t offset = 0) {
    return detail::ExprParser(text, vars, offset).parse_all();
}

/// Parses an expression in x, y, z that must be homogeneous.
inline HPoly parse_hpoly(std::string_view text, std::size_t offset = 0) {
    SparsePoly p = parse_polynomial(text, {"x", "y", "z"}, offset);
    try {
        return HPoly(HPoly::Terms(p.begin(), p.end()));
    } catch (const Error& e) {
        throw ParseError(offset, "expression is not homogeneous");
    }
}

/// Splits "(a : b : c)" style text on a separator at parenthesis depth one.
/// Returns each piece with its offset into `text`.
inline std::vector<std::pair<std::string_view, std::size_t>> split_tuple(std::string_view text, char sep) {
    std::size_t open = text.find_first_not_of(" \t\n");
    if (open == std::string_view::npos || text[open] != '(') throw ParseError(0, "expected '('");
    std::size_t close = text.find_last_not_of(" \t\n");
    if (text[close] != ')') throw ParseError(close, "expected ')'");
    std::vector<std::pair<std::string_view, std::size_t>> parts;
    int depth = 0;
    std::size_t start = open + 1;
    for (std::size_t i = open + 1; i < close; ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') {
            if (--depth < 0) throw ParseError(i, "unbalanced ')'");
        }
        if (text[i] == sep && depth == 0) {
            parts.emplace_back(text.substr(start, i - start), start);
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError(close, "unbalanced '('");
    parts.emplace_back(text.substr(start, close - start), start);
    return parts;
}

}  // namespace cremona

#endif  // CREMONA_PARSE_HPP
