#pragma once

// Text form of polynomials. Grammar: signed decimal literals of any size,
// a single variable (x or y depending on the target type, uppercase accepted
// on input), operators + - *, nonnegative ^ exponents, implicit product
// between a coefficient and the variable, arbitrary whitespace.

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "zxprime/poly.hpp"

namespace zxprime {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

namespace detail {

// Exponents beyond this would allocate absurd coefficient vectors.
inline constexpr std::size_t max_parse_exponent = 1000000;

template <class VarTag>
class PolyParser {
  public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BasicPoly<VarTag> parse() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        BasicPoly<VarTag> sum = parse_term();
        skip_ws();
        while (!at_end()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError(std::string("expected '+' or '-' before '") + op + "'", pos_);
            ++pos_;
            BasicPoly<VarTag> t = parse_term();
            sum = op == '+' ? sum + t : sum - t;
            skip_ws();
        }
        return sum;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    static constexpr char var_lower = VarTag::letter;
    static constexpr char var_upper = VarTag::letter - 'a' + 'A';

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_variable() const { return !at_end() && (peek() == var_lower || peek() == var_upper); }
    bool at_digit() const {
        return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    // term := ['+'|'-'] primary (('*' primary) | variable-primary)*
    // The implicit product covers forms like "2x^3"; after a variable
    // factor the next factor needs an explicit '*'.
    BasicPoly<VarTag> parse_term() {
        skip_ws();
        bool negative = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos_;
        }
        BasicPoly<VarTag> prod = parse_primary();
        for (;;) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                prod = prod * parse_primary();
            } else if (at_variable()) {
                prod = prod * parse_primary();
            } else {
                break;
            }
        }
        return negative ? -prod : prod;
    }

    // primary := integer | variable ['^' integer]
    BasicPoly<VarTag> parse_primary() {
        skip_ws();
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        if (at_digit()) return BasicPoly<VarTag>(parse_integer());
        if (at_variable()) {
            ++pos_;
            std::size_t exponent = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (!at_end() && peek() == '-')
                    throw ParseError("negative exponent", pos_);
                if (!at_digit()) throw ParseError("expected exponent digits", pos_);
                Integer e = parse_integer();
                if (e > static_cast<unsigned long>(max_parse_exponent))
                    throw ParseError("exponent too large", pos_);
                exponent = e.get_ui();
            }
            return BasicPoly<VarTag>::monomial(1, exponent);
        }
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }

    Integer parse_integer() {
        std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }
};

template <class VarTag>
std::string format_basic_poly(const BasicPoly<VarTag>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& cs = p.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) {
        const Integer& c = cs[i];
        if (c == 0) continue;
        bool first = out.empty();
        bool neg = c < 0;
        if (first) {
            if (neg) out += '-';
        } else {
            out += neg ? " - " : " + ";
        }
        Integer mag = abs(c);
        if (mag != 1 || i == 0) out += mag.get_str();
        if (i >= 1) {
            out += VarTag::letter;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace detail

inline Poly parse_poly(std::string_view text) { return detail::PolyParser<var_x_tag>(text).parse(); }
inline YPoly parse_ypoly(std::string_view text) {
    return detail::PolyParser<var_y_tag>(text).parse();
}

inline std::string format_poly(const Poly& p) { return detail::format_basic_poly(p); }
inline std::string format_poly(const YPoly& p) { return detail::format_basic_poly(p); }

template <class VarTag>
std::ostream& operator<<(std::ostream& os, const BasicPoly<VarTag>& p) {
    return os << detail::format_basic_poly(p);
}

}  // namespace zxprime
