#pragma once

// Dense polynomials over F_p with least-nonnegative-residue coefficients.
// Backs the <p, g> membership test and the companion-function inverses.

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zxprime/integer.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

class ModPoly {
  public:
    ModPoly(Integer modulus, std::vector<Integer> coeffs)
        : p_(std::move(modulus)), coeffs_(std::move(coeffs)) {
        if (p_ < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
        for (auto& c : coeffs_) {
            c %= p_;
            if (c < 0) c += p_;
        }
        trim();
    }

    explicit ModPoly(Integer modulus) : ModPoly(std::move(modulus), {}) {}

    const Integer& modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }

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

    // Least nonnegative residues, so the lift is deterministic.
    Poly lift() const { return Poly(coeffs_); }

    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ModPoly& a, const ModPoly& b) { return !(a == b); }

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b) {
        check_same_modulus(a, b);
        std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return ModPoly(a.p_, std::move(r));
    }

    friend ModPoly operator-(const ModPoly& a, const ModPoly& b) {
        check_same_modulus(a, b);
        std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return ModPoly(a.p_, std::move(r));
    }

    friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
        check_same_modulus(a, b);
        if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
        std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return ModPoly(a.p_, std::move(r));
    }

    ModPoly scaled(const Integer& s) const {
        std::vector<Integer> r = coeffs_;
        for (auto& c : r) c *= s;
        return ModPoly(p_, std::move(r));
    }

    ModPoly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<Integer> r(coeffs_.size() + k);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + k] = coeffs_[i];
        return ModPoly(p_, std::move(r));
    }

  private:
    Integer p_;
    std::vector<Integer> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    static void check_same_modulus(const ModPoly& a, const ModPoly& b) {
        if (a.p_ != b.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
    }
};

inline ModPoly mod_reduce(const Poly& a, const Integer& p) {
    if (p < 2) throw std::invalid_argument("mod_reduce: invalid modulus");
    return ModPoly(p, a.coefficients());
}

inline Integer mod_inverse(const Integer& a, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: not invertible");
    return r;
}

struct ModDivRem {
    ModPoly quotient;
    ModPoly remainder;
};

inline ModDivRem modpoly_divrem(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("modpoly_divrem: modulus mismatch");
    if (b.is_zero()) throw std::invalid_argument("modpoly_divrem: division by zero polynomial");
    const Integer& p = a.modulus();
    Integer lc_inv = mod_inverse(b.leading_coefficient(), p);
    std::size_t db = *b.degree();
    ModPoly q(p);
    ModPoly r = a;
    while (!r.is_zero() && *r.degree() >= db) {
        std::size_t shift = *r.degree() - db;
        Integer c = r.leading_coefficient() * lc_inv % p;
        ModPoly term = ModPoly(p, {c}).shifted(shift);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

struct ModExtGcd {
    ModPoly g;  // monic gcd
    ModPoly s;
    ModPoly t;  // g = s*a + t*b
};

// Extended Euclid in F_p[x]; the gcd is normalized monic.
inline ModExtGcd modpoly_ext_gcd(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("modpoly_ext_gcd: modulus mismatch");
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("modpoly_ext_gcd: both inputs zero");
    const Integer& p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0(p, {1}), s1(p);
    ModPoly t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        ModDivRem d = modpoly_divrem(r0, r1);
        ModPoly r2 = d.remainder;
        ModPoly s2 = s0 - d.quotient * s1;
        ModPoly t2 = t0 - d.quotient * t1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    Integer norm = mod_inverse(r0.leading_coefficient(), p);
    return {r0.scaled(norm), s0.scaled(norm), t0.scaled(norm)};
}

}  // namespace zxprime
