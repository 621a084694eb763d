#pragma once

// Generalized division in Z[x]: premultiplying by a power of the divisor's
// leading coefficient sidesteps the non-monic case without leaving Z.

#include <cstddef>
#include <stdexcept>

#include "zxprime/integer.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

struct PseudoDivision {
    std::size_t k = 0;  // power of lc(f); one per reduction step
    Poly h;
    Poly r;  // d^k * g + h * f = r, deg r < deg f
};

inline PseudoDivision pseudo_divide(const Poly& f, const Poly& g) {
    if (f.is_zero()) throw std::invalid_argument("pseudo_divide: divisor is zero");
    const Integer& d = f.leading_coefficient();
    std::size_t m = *f.degree();
    PseudoDivision out;
    out.r = g;
    while (!out.r.is_zero() && *out.r.degree() >= m) {
        std::size_t shift = *out.r.degree() - m;
        Poly cx = Poly::monomial(out.r.leading_coefficient(), shift);
        out.r = out.r * d - cx * f;
        out.h = out.h * d - cx;
        ++out.k;
    }
    return out;
}

// Does g divide a exactly over Z? Reduce a against g, then reconstruct the
// quotient from h and check every coefficient divides by d^k.
inline bool divides_exactly(const Poly& g, const Poly& a) {
    if (g.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    PseudoDivision pd = pseudo_divide(g, a);
    if (!pd.r.is_zero()) return false;
    // d^k * a = -h * g; candidate quotient is -h / d^k.
    Integer dk = int_pow(g.leading_coefficient(), pd.k);
    std::vector<Integer> q(pd.h.coefficients().size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        Integer c = -pd.h.coeff(i);
        if (c % dk != 0) return false;
        q[i] = c / dk;
    }
    return Poly(std::move(q)) * g == a;
}

}  // namespace zxprime
