#pragma once

// The witness-producing engine. Given (M, nu) it either names a prime in M
// or returns one of the five pieces of evidence, never anything weaker.
// Every membership decision and every algebraic intermediate is recorded in
// the certificate so a verifier can replay the run.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "zxprime/certificate.hpp"
#include "zxprime/division.hpp"
#include "zxprime/evidence.hpp"
#include "zxprime/integer.hpp"
#include "zxprime/matrix.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

// An identity the construction guarantees failed to hold; this is a bug in
// the engine, not a property of the oracle, and must never surface as
// evidence.
class InternalInvariantError : public std::logic_error {
  public:
    explicit InternalInvariantError(const std::string& what)
        : std::logic_error("internal invariant violated: " + what) {}
};

class ResourceLimitError : public std::runtime_error {
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct EngineLimits {
    std::size_t max_degree = 64;          // for the member f
    std::size_t max_coeff_digits = 1000000;
    std::size_t max_det_dimension = 22;   // determinant work is O(n * 2^n)
};

// g_i with (m+1)^i = 1 + m*g_i, namely 1 + (m+1) + ... + (m+1)^(i-1).
inline Poly geometric_expand(const Poly& m, std::size_t i) {
    Poly g;
    Poly pw(1);
    Poly base = m + Poly(1);
    for (std::size_t j = 0; j < i; ++j) {
        g += pw;
        pw = pw * base;
    }
    return g;
}

namespace detail {

inline bool ask(Oracle& o, std::vector<TraceEntry>& trace, const Poly& query) {
    bool answer = o.membership(query);
    trace.push_back({query, answer});
    return answer;
}

}  // namespace detail

// Walk a factor list of a known member: either some factor is a member, or
// one of the intermediate decisions yields evidence. The factors may include
// a leading -1 unit.
inline std::variant<Integer, Evidence> max_to_prime(Oracle& o,
                                                    const std::vector<Integer>& factors,
                                                    const Integer& product,
                                                    std::vector<TraceEntry>& trace) {
    Integer check = 1;
    for (const auto& a : factors) check *= a;
    if (check != product)
        throw InternalInvariantError("max_to_prime: factor list does not multiply to product");

    Integer remaining = product;
    for (std::size_t idx = 0; idx < factors.size(); ++idx) {
        const Integer& head = factors[idx];
        if (detail::ask(o, trace, Poly(head))) return head;
        Poly nu_head = o.nu(Poly(head));
        Poly head_companion = Poly(head) * nu_head - Poly(1);  // head*nu(head) - 1
        if (!detail::ask(o, trace, head_companion)) return Evidence(CompanionFails{Poly(head)});
        Integer tail = remaining / head;  // exact: remaining = head * tail
        Poly scaled_product = nu_head * Poly(remaining);
        if (!detail::ask(o, trace, scaled_product))
            return Evidence(ScalarMultipleEscapes{nu_head, Poly(remaining)});
        Poly cancel = Poly(-tail) * head_companion;
        if (!detail::ask(o, trace, cancel))
            return Evidence(ScalarMultipleEscapes{Poly(-tail), head_companion});
        Poly tail_poly = scaled_product + cancel;
        if (tail_poly != Poly(tail))
            throw InternalInvariantError("max_to_prime: tail cancellation identity");
        if (!detail::ask(o, trace, tail_poly))
            return Evidence(SumEscapes{scaled_product, cancel});
        remaining = tail;
    }
    if (remaining != 1) throw InternalInvariantError("max_to_prime: leftover product");
    return Evidence(OneIsMember{});
}

// A nonconstant member of M, or evidence. Queries go through the trace.
inline std::variant<Poly, Evidence> find_nonconstant_member(Oracle& o,
                                                            std::vector<TraceEntry>& trace) {
    Poly x = Poly::variable();
    if (detail::ask(o, trace, x)) return x;
    Poly nu_x = o.nu(x);
    Poly candidate = x * nu_x - Poly(1);
    if (!detail::ask(o, trace, candidate)) return Evidence(CompanionFails{x});
    if (*candidate.degree() == 0) {
        // nu(x) was a constant-killing 0, so the member is -1.
        if (candidate != Poly(-1))
            throw InternalInvariantError("constant member other than -1");
        if (detail::ask(o, trace, Poly(1))) return Evidence(OneIsMember{});
        return Evidence(ScalarMultipleEscapes{Poly(-1), Poly(-1)});
    }
    return candidate;
}

inline Outcome maxzx(Oracle& o, const EngineLimits& limits = {}) {
    Certificate cert;
    auto& trace = cert.lemma_trace;
    auto evidence_outcome = [&](Evidence e) {
        cert.outcome_evidence = e;
        return Outcome{std::move(e), std::move(cert)};
    };
    auto prime_outcome = [&](const Integer& p) {
        cert.outcome_prime = p;
        return Outcome{p, std::move(cert)};
    };

    // (1) a nonconstant member
    auto found = find_nonconstant_member(o, trace);
    if (found.index() == 1) return evidence_outcome(std::get<Evidence>(found));
    Poly f = std::get<Poly>(found);
    std::size_t n = *f.degree();
    if (n > limits.max_degree)
        throw ResourceLimitError("member degree " + std::to_string(n) + " exceeds limit");
    Integer d = f.leading_coefficient();
    cert.f = f;
    cert.d = d;
    cert.n = n;

    // (2)-(3) a prime q coprime to d; q itself may already be the answer
    Integer q = smallest_prime_not_dividing(d);
    cert.q = q;
    if (detail::ask(o, trace, Poly(q))) return prime_outcome(q);

    // (4) m = q*nu(q) - 1 must be a member, else q witnesses case 5
    Poly nuq = o.nu(Poly(q));
    Poly m = Poly(q) * nuq - Poly(1);
    cert.nuq = nuq;
    cert.m = m;
    if (!detail::ask(o, trace, m)) return evidence_outcome(CompanionFails{Poly(q)});

    // (5) reduce nu(q)*x^i against f: d^{k_i} nu(q) x^i + h_i f has degree < n
    if (n > limits.max_det_dimension)
        throw ResourceLimitError("determinant dimension " + std::to_string(n) + " exceeds limit");
    std::vector<CertRow> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PseudoDivision pd = pseudo_divide(f, nuq * Poly::monomial(1, i));
        if (!pd.r.is_zero() && *pd.r.degree() >= n)
            throw InternalInvariantError("pseudo-division remainder too large");
        CertRow row;
        row.k = pd.k;
        row.h = pd.h;
        row.a.resize(n);
        for (std::size_t j = 0; j < n; ++j) row.a[j] = pd.r.coeff(j);
        rows.push_back(std::move(row));
    }
    cert.rows = rows;

    // (6) A = (d^{k_i} y delta_ij - a_ij) over Z[y]; determinant and first
    // adjugate row
    YPolyMatrix A(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            YPoly e = -YPoly(rows[i].a[j]);
            if (i == j) e += YPoly::monomial(int_pow(d, rows[i].k), 1);
            A.at(i, j) = e;
        }
    DetAdjRow da = det_adjugate(A);
    std::size_t K = 0;
    for (const auto& row : rows) K += row.k;
    if (da.det.coeff(n) != int_pow(d, K))
        throw InternalInvariantError("determinant leading coefficient is not d^K");
    std::vector<Integer> b(n);
    for (std::size_t j = 0; j < n; ++j) b[j] = da.det.coeff(j);
    cert.detY = da.det;
    cert.adj_row0 = da.adj_row0;
    cert.K = Integer(static_cast<unsigned long>(K));
    cert.b = b;

    // (7) collapse powers of q*nu(q) = m + 1 and read off the integer
    //     N = d^K + b_{n-1} q + ... + b_0 q^n = combo_f * f + combo_m * m
    std::vector<Poly> gpolys;
    gpolys.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) gpolys.push_back(geometric_expand(m, i));
    Integer N = int_pow(d, K);
    for (std::size_t j = 0; j < n; ++j) N += b[j] * int_pow(q, n - j);
    Integer qn = int_pow(q, n);
    Poly combo_f;
    for (std::size_t j = 0; j < n; ++j)
        combo_f -= Poly(qn) * substitute(da.adj_row0[j], nuq) * rows[j].h;
    Poly combo_m = -(Poly(int_pow(d, K)) * gpolys[n - 1]);
    for (std::size_t j = 1; j < n; ++j)
        combo_m -= Poly(b[j] * int_pow(q, n - j)) * gpolys[j - 1];
    if (Poly(N) != combo_f * f + combo_m * m)
        throw InternalInvariantError("linear combination does not reproduce N");
    if (N == 0) throw InternalInvariantError("N vanished although q does not divide d");
    if (decimal_digits(N) > limits.max_coeff_digits)
        throw ResourceLimitError("combination integer exceeds size limit");
    cert.N = N;
    cert.combo_f = combo_f;
    cert.combo_m = combo_m;
    cert.gpolys = gpolys;

    // (8) N itself is a member, or the failing ideal axiom is the evidence
    Poly part_f = combo_f * f;
    Poly part_m = combo_m * m;
    if (!detail::ask(o, trace, part_f)) return evidence_outcome(ScalarMultipleEscapes{combo_f, f});
    if (!detail::ask(o, trace, part_m)) return evidence_outcome(ScalarMultipleEscapes{combo_m, m});
    if (!detail::ask(o, trace, part_f + part_m))
        return evidence_outcome(SumEscapes{part_f, part_m});

    // (9)-(10) factor N and walk the factors
    Factorization fact = factor_integer(N);
    cert.unit = fact.unit;
    cert.factors = fact.factors;
    std::vector<Integer> lemma_factors = fact.factors;
    if (fact.unit < 0) lemma_factors.insert(lemma_factors.begin(), Integer(-1));
    auto walked = max_to_prime(o, lemma_factors, N, trace);
    if (walked.index() == 1) return evidence_outcome(std::get<Evidence>(walked));
    Integer member = std::get<Integer>(walked);
    if (member == -1) {
        // a unit in M collapses to evidence through the 1 test
        if (detail::ask(o, trace, Poly(1))) return evidence_outcome(OneIsMember{});
        return evidence_outcome(ScalarMultipleEscapes{Poly(-1), Poly(-1)});
    }
    if (!int_is_prime(member)) throw InternalInvariantError("member from factor walk not prime");
    return prime_outcome(member);
}

// The baseline: try the primes in order until M says yes.
inline std::optional<Integer> unbounded_search(Oracle& o, std::uint64_t limit = 0) {
    Integer p = 2;
    for (std::uint64_t tested = 0; limit == 0 || tested < limit; ++tested) {
        if (o.membership(Poly(p))) return p;
        p = next_prime_above(p);
    }
    return std::nullopt;
}

}  // namespace zxprime
