#pragma once

// Exact integer arithmetic and the number-theoretic utilities the engine
// needs: deterministic primality, choice of a coprime prime, factoring.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zxprime {

using Integer = mpz_class;

inline Integer int_pow(const Integer& base, std::size_t exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline std::size_t decimal_digits(const Integer& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 10);
}

namespace detail {

inline Integer pow_mod(const Integer& base, const Integer& exp, const Integer& mod) {
    Integer r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// One strong-pseudoprime round: n - 1 = 2^s * odd.
inline bool miller_rabin_witness(const Integer& n, const Integer& base,
                                 const Integer& odd, unsigned long s) {
    Integer x = pow_mod(base, odd, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // base witnesses compositeness
}

}  // namespace detail

// Primality of |n|. Deterministic Miller-Rabin over the first 13 prime
// bases, which decides every n below 3.3e24; inputs beyond that bound are
// treated as strong probable primes for the same bases.
inline bool int_is_prime(const Integer& n) {
    Integer m = abs(n);
    if (m < 2) return false;
    static const int small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int p : small_primes) {
        if (m == p) return true;
        if (m % p == 0) return false;
    }
    Integer odd = m - 1;
    unsigned long s = mpz_scan1(odd.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(odd.get_mpz_t(), odd.get_mpz_t(), s);
    for (int p : small_primes) {
        if (detail::miller_rabin_witness(m, Integer(p), odd, s)) return false;
    }
    return true;
}

inline Integer next_prime_above(const Integer& n) {
    Integer c = n < 2 ? Integer(2) : Integer(n + 1);
    if (c > 2 && c % 2 == 0) ++c;
    while (!int_is_prime(c)) c += (c == 2) ? 1 : 2;
    return c;
}

// Least prime q with q not dividing |d|.
inline Integer smallest_prime_not_dividing(const Integer& d) {
    if (d == 0) throw std::invalid_argument("smallest_prime_not_dividing: d = 0");
    Integer m = abs(d);
    Integer q = 2;
    while (m % q == 0) q = next_prime_above(q);
    return q;
}

struct Factorization {
    int unit = 1;  // +1 or -1
    std::vector<Integer> factors;  // primes, ascending
};

namespace detail {

// Pollard rho (Brent cycle detection). Returns a nontrivial factor of the
// odd composite n.
inline Integer pollard_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        Integer saved_y = y;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (lam == power) {
                saved_y = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            Integer diff = saved_y > y ? Integer(saved_y - y) : Integer(y - saved_y);
            if (diff == 0) break;  // cycle closed, retry with another c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(Integer m, std::vector<Integer>& out) {
    if (m == 1) return;
    if (int_is_prime(m)) {
        out.push_back(m);
        return;
    }
    Integer d = pollard_rho(m);
    factor_into(d, out);
    factor_into(m / d, out);
}

}  // namespace detail

// n = unit * product(factors), each factor prime. Trial division up to 1e6,
// Pollard rho for the rest.
inline Factorization factor_integer(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: n = 0");
    Factorization result;
    result.unit = n < 0 ? -1 : 1;
    Integer m = abs(n);
    for (Integer p = 2; p <= 1000000 && p * p <= m; p += (p == 2) ? 1 : 2) {
        while (m % p == 0) {
            result.factors.push_back(p);
            m /= p;
        }
    }
    if (m > 1) {
        std::vector<Integer> rest;
        detail::factor_into(m, rest);
        result.factors.insert(result.factors.end(), rest.begin(), rest.end());
    }
    std::sort(result.factors.begin(), result.factors.end());
    return result;
}

}  // namespace zxprime
