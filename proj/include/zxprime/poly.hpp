#pragma once

// Dense univariate polynomials over Z. The variable is a compile-time tag:
// Poly lives in Z[x] and YPoly in Z[y], so mixing them is a type error
// rather than a runtime one. The zero polynomial has an empty coefficient
// vector and no degree (degree() is disengaged), never degree -1.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zxprime/integer.hpp"

namespace zxprime {

struct var_x_tag {
    static constexpr char letter = 'x';
};
struct var_y_tag {
    static constexpr char letter = 'y';
};

template <class VarTag>
class BasicPoly {
  public:
    using tag_type = VarTag;

    BasicPoly() = default;
    BasicPoly(const Integer& c) : coeffs_{c} { trim(); }
    BasicPoly(long c) : BasicPoly(Integer(c)) {}

    explicit BasicPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static BasicPoly monomial(const Integer& c, std::size_t exponent) {
        if (c == 0) return BasicPoly();
        std::vector<Integer> v(exponent + 1);
        v[exponent] = c;
        return BasicPoly(std::move(v));
    }

    static BasicPoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    // Disengaged for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const Integer& leading_coefficient() const {
        if (coeffs_.empty())
            throw std::invalid_argument("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    const Integer& coeff(std::size_t i) const {
        static const Integer zero = 0;
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const std::vector<Integer>& coefficients() const { return coeffs_; }

    BasicPoly& operator+=(const BasicPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    BasicPoly& operator-=(const BasicPoly& rhs) {
        if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    BasicPoly& operator*=(const BasicPoly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    BasicPoly& operator*=(const Integer& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    friend BasicPoly operator-(const BasicPoly& a) {
        BasicPoly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() || b.is_zero()) return BasicPoly();
        std::vector<Integer> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return BasicPoly(std::move(prod));
    }

    friend BasicPoly operator*(BasicPoly a, const Integer& s) { return a *= s; }
    friend BasicPoly operator*(const Integer& s, BasicPoly a) { return a *= s; }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BasicPoly& a, const BasicPoly& b) { return !(a == b); }

    // Any total order works here; used only for map keys.
    friend bool operator<(const BasicPoly& a, const BasicPoly& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
        for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }

    std::size_t max_coefficient_digits() const {
        std::size_t m = 0;
        for (const auto& c : coeffs_) m = std::max(m, decimal_digits(c));
        return m;
    }

  private:
    std::vector<Integer> coeffs_;  // coeffs_[i] is the coefficient of the i-th power

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

using Poly = BasicPoly<var_x_tag>;
using YPoly = BasicPoly<var_y_tag>;

// Horner evaluation of a in Z[y] at a value in Z[x].
inline Poly substitute(const YPoly& a, const Poly& value) {
    Poly acc;
    const auto& cs = a.coefficients();
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * value + Poly(cs[i]);
    return acc;
}

}  // namespace zxprime
