#pragma once

// The recorded trace of an engine run, sufficient to re-check every
// algebraic identity and every oracle decision without re-deriving them.
// Fields appear in phase order; a run that ends early simply stops filling
// them in, and the verifier skips checks whose phase is absent.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "zxprime/evidence.hpp"
#include "zxprime/integer.hpp"
#include "zxprime/matrix.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

struct TraceEntry {
    Poly query;
    bool answer = false;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct CertRow {
    std::size_t k = 0;
    Poly h;
    std::vector<Integer> a;  // n integers, the remainder coefficients

    friend bool operator==(const CertRow&, const CertRow&) = default;
};

struct Certificate {
    std::vector<TraceEntry> lemma_trace;  // every membership decision, in order

    std::optional<Poly> f;
    std::optional<Integer> d;
    std::optional<std::size_t> n;
    std::optional<Integer> q;
    std::optional<Poly> nuq;
    std::optional<Poly> m;
    std::optional<std::vector<CertRow>> rows;
    std::optional<YPoly> detY;
    std::optional<std::vector<YPoly>> adj_row0;
    std::optional<Integer> K;
    std::optional<std::vector<Integer>> b;
    std::optional<Integer> N;
    std::optional<Poly> combo_f;
    std::optional<Poly> combo_m;
    std::optional<std::vector<Poly>> gpolys;  // g_1 .. g_n
    std::optional<int> unit;
    std::optional<std::vector<Integer>> factors;  // prime factors of |N|

    std::optional<Integer> outcome_prime;
    std::optional<Evidence> outcome_evidence;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Outcome {
    std::variant<Integer, Evidence> result;
    Certificate certificate;

    bool is_prime() const { return result.index() == 0; }
    const Integer& prime() const { return std::get<Integer>(result); }
    const Evidence& evidence() const { return std::get<Evidence>(result); }
};

// ---------------------------------------------------------------------------
// serialization

class CertificateFormatError : public std::runtime_error {
  public:
    explicit CertificateFormatError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline nlohmann::json evidence_to_json(const Evidence& e) {
    nlohmann::json j;
    j["kind"] = "case" + std::to_string(evidence_case(e));
    switch (e.index()) {
        case 1:
            j["a"] = format_poly(std::get<SumEscapes>(e).a);
            j["b"] = format_poly(std::get<SumEscapes>(e).b);
            break;
        case 2:
            j["lambda"] = format_poly(std::get<ScalarMultipleEscapes>(e).lambda);
            j["a"] = format_poly(std::get<ScalarMultipleEscapes>(e).a);
            break;
        case 4:
            j["a"] = format_poly(std::get<CompanionFails>(e).a);
            break;
        default:
            break;
    }
    return j;
}

inline Evidence evidence_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "case1") return ZeroNotMember{};
    if (kind == "case2")
        return SumEscapes{parse_poly(j.at("a").get<std::string>()),
                          parse_poly(j.at("b").get<std::string>())};
    if (kind == "case3")
        return ScalarMultipleEscapes{parse_poly(j.at("lambda").get<std::string>()),
                                     parse_poly(j.at("a").get<std::string>())};
    if (kind == "case4") return OneIsMember{};
    if (kind == "case5") return CompanionFails{parse_poly(j.at("a").get<std::string>())};
    throw CertificateFormatError("unknown evidence kind '" + kind + "'");
}

inline std::string int_str(const Integer& v) { return v.get_str(); }

inline Integer int_from_str(const nlohmann::json& j) {
    return Integer(j.get<std::string>(), 10);
}

}  // namespace detail

inline std::string serialize_certificate(const Certificate& c) {
    nlohmann::json j;
    {
        nlohmann::json trace = nlohmann::json::array();
        for (const auto& t : c.lemma_trace)
            trace.push_back({{"query", format_poly(t.query)}, {"answer", t.answer}});
        j["lemma_trace"] = std::move(trace);
    }
    if (c.f) j["f"] = format_poly(*c.f);
    if (c.d) j["d"] = detail::int_str(*c.d);
    if (c.n) j["n"] = *c.n;
    if (c.q) j["q"] = detail::int_str(*c.q);
    if (c.nuq) j["nuq"] = format_poly(*c.nuq);
    if (c.m) j["m"] = format_poly(*c.m);
    if (c.rows) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : *c.rows) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& v : row.a) a.push_back(detail::int_str(v));
            rows.push_back({{"k", row.k}, {"h", format_poly(row.h)}, {"a", std::move(a)}});
        }
        j["rows"] = std::move(rows);
    }
    if (c.detY) j["detY"] = format_poly(*c.detY);
    if (c.adj_row0) {
        nlohmann::json adj = nlohmann::json::array();
        for (const auto& e : *c.adj_row0) adj.push_back(format_poly(e));
        j["adjRow0"] = std::move(adj);
    }
    if (c.K) j["K"] = detail::int_str(*c.K);
    if (c.b) {
        nlohmann::json b = nlohmann::json::array();
        for (const auto& v : *c.b) b.push_back(detail::int_str(v));
        j["b"] = std::move(b);
    }
    if (c.N) j["N"] = detail::int_str(*c.N);
    if (c.combo_f) j["combo_f"] = format_poly(*c.combo_f);
    if (c.combo_m) j["combo_m"] = format_poly(*c.combo_m);
    if (c.gpolys) {
        nlohmann::json g = nlohmann::json::array();
        for (const auto& e : *c.gpolys) g.push_back(format_poly(e));
        j["gpolys"] = std::move(g);
    }
    if (c.unit) j["unit"] = *c.unit;
    if (c.factors) {
        nlohmann::json f = nlohmann::json::array();
        for (const auto& v : *c.factors) f.push_back(detail::int_str(v));
        j["factors"] = std::move(f);
    }
    if (c.outcome_prime) {
        j["outcome"] = {{"kind", "prime"}, {"p", detail::int_str(*c.outcome_prime)}};
    } else if (c.outcome_evidence) {
        j["outcome"] = {{"kind", "not-maximal"},
                        {"evidence", detail::evidence_to_json(*c.outcome_evidence)}};
    }
    return j.dump(2);
}

inline Certificate deserialize_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw CertificateFormatError(std::string("certificate parse error: ") + e.what());
    }
    try {
        Certificate c;
        for (const auto& t : j.at("lemma_trace"))
            c.lemma_trace.push_back(
                {parse_poly(t.at("query").get<std::string>()), t.at("answer").get<bool>()});
        if (j.contains("f")) c.f = parse_poly(j["f"].get<std::string>());
        if (j.contains("d")) c.d = detail::int_from_str(j["d"]);
        if (j.contains("n")) c.n = j["n"].get<std::size_t>();
        if (j.contains("q")) c.q = detail::int_from_str(j["q"]);
        if (j.contains("nuq")) c.nuq = parse_poly(j["nuq"].get<std::string>());
        if (j.contains("m")) c.m = parse_poly(j["m"].get<std::string>());
        if (j.contains("rows")) {
            std::vector<CertRow> rows;
            for (const auto& r : j["rows"]) {
                CertRow row;
                row.k = r.at("k").get<std::size_t>();
                row.h = parse_poly(r.at("h").get<std::string>());
                for (const auto& v : r.at("a")) row.a.push_back(detail::int_from_str(v));
                rows.push_back(std::move(row));
            }
            c.rows = std::move(rows);
        }
        if (j.contains("detY")) c.detY = parse_ypoly(j["detY"].get<std::string>());
        if (j.contains("adjRow0")) {
            std::vector<YPoly> adj;
            for (const auto& v : j["adjRow0"]) adj.push_back(parse_ypoly(v.get<std::string>()));
            c.adj_row0 = std::move(adj);
        }
        if (j.contains("K")) c.K = detail::int_from_str(j["K"]);
        if (j.contains("b")) {
            std::vector<Integer> b;
            for (const auto& v : j["b"]) b.push_back(detail::int_from_str(v));
            c.b = std::move(b);
        }
        if (j.contains("N")) c.N = detail::int_from_str(j["N"]);
        if (j.contains("combo_f")) c.combo_f = parse_poly(j["combo_f"].get<std::string>());
        if (j.contains("combo_m")) c.combo_m = parse_poly(j["combo_m"].get<std::string>());
        if (j.contains("gpolys")) {
            std::vector<Poly> g;
            for (const auto& v : j["gpolys"]) g.push_back(parse_poly(v.get<std::string>()));
            c.gpolys = std::move(g);
        }
        if (j.contains("unit")) c.unit = j["unit"].get<int>();
        if (j.contains("factors")) {
            std::vector<Integer> f;
            for (const auto& v : j["factors"]) f.push_back(detail::int_from_str(v));
            c.factors = std::move(f);
        }
        if (j.contains("outcome")) {
            const auto& o = j["outcome"];
            std::string kind = o.at("kind").get<std::string>();
            if (kind == "prime") {
                c.outcome_prime = detail::int_from_str(o.at("p"));
            } else if (kind == "not-maximal") {
                c.outcome_evidence = detail::evidence_from_json(o.at("evidence"));
            } else {
                throw CertificateFormatError("unknown outcome kind '" + kind + "'");
            }
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw CertificateFormatError(std::string("certificate field error: ") + e.what());
    } catch (const ParseError& e) {
        throw CertificateFormatError(std::string("certificate polynomial error: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// verification

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool overall = false;
    std::vector<VerifyCheck> checks;
};

namespace detail {

class ReportBuilder {
  public:
    void add(const std::string& name, bool pass, const std::string& note = "") {
        checks_.push_back({name, pass, note.empty() ? (pass ? "ok" : "failed") : note});
    }

    VerifyReport finish() {
        VerifyReport r;
        r.checks = std::move(checks_);
        r.overall = true;
        for (const auto& c : r.checks) r.overall = r.overall && c.pass;
        return r;
    }

  private:
    std::vector<VerifyCheck> checks_;
};

// Phases must be filled front to back; a later field without its
// prerequisites means the certificate was not produced by a run.
inline bool phases_consistent(const Certificate& c, std::string& why) {
    auto require = [&](bool cond, const char* msg) {
        if (!cond && why.empty()) why = msg;
        return cond;
    };
    bool ok = true;
    ok &= require(!c.f || (c.d && c.n), "f requires d and n");
    ok &= require(!c.d || c.f.has_value(), "d requires f");
    ok &= require(!c.n || c.f.has_value(), "n requires f");
    ok &= require(!c.q || c.f.has_value(), "q requires f");
    ok &= require(!c.nuq || c.q.has_value(), "nuq requires q");
    ok &= require(c.nuq.has_value() == c.m.has_value(), "nuq and m come together");
    ok &= require(!c.rows || c.m.has_value(), "rows require m");
    ok &= require(!c.detY || c.rows.has_value(), "detY requires rows");
    ok &= require(c.detY.has_value() == c.adj_row0.has_value(), "detY and adjRow0 come together");
    ok &= require(!c.K || c.detY.has_value(), "K requires detY");
    ok &= require(!c.b || c.detY.has_value(), "b requires detY");
    ok &= require(!c.N || c.detY.has_value(), "N requires the determinant phase");
    ok &= require(c.N.has_value() == c.combo_f.has_value(), "N and combo_f come together");
    ok &= require(c.N.has_value() == c.combo_m.has_value(), "N and combo_m come together");
    ok &= require(c.N.has_value() == c.gpolys.has_value(), "N and gpolys come together");
    ok &= require(!c.unit || c.N.has_value(), "unit requires N");
    ok &= require(c.unit.has_value() == c.factors.has_value(), "unit and factors come together");
    ok &= require(c.outcome_prime.has_value() || c.outcome_evidence.has_value(),
                  "outcome missing");
    ok &= require(!(c.outcome_prime && c.outcome_evidence), "two outcomes");
    // size sanity, so no later check exponentiates with absurd values
    ok &= require(!c.n || *c.n <= 100000, "n out of range");
    ok &= require(!c.K || (*c.K >= 0 && *c.K <= 10000000), "K out of range");
    if (c.rows)
        for (const auto& row : *c.rows)
            ok &= require(row.k <= 1000000, "row exponent out of range");
    return ok;
}

}  // namespace detail

inline VerifyReport verify_certificate(Oracle& o, const Certificate& c) {
    detail::ReportBuilder rb;

    std::string why;
    bool structure_ok = detail::phases_consistent(c, why);
    rb.add("structure", structure_ok, why);
    if (!structure_ok) return rb.finish();

    // (1) every recorded membership decision replays identically
    {
        bool ok = true;
        std::string note;
        for (std::size_t i = 0; i < c.lemma_trace.size(); ++i) {
            if (o.membership(c.lemma_trace[i].query) != c.lemma_trace[i].answer) {
                ok = false;
                note = "entry " + std::to_string(i) + " (query " +
                       format_poly(c.lemma_trace[i].query) + ") does not replay";
                break;
            }
        }
        rb.add("membership-replay", ok, note);
    }

    // (2) shape of f
    if (c.f) {
        bool ok = !c.f->is_zero() && *c.f->degree() >= 1 &&
                  c.f->leading_coefficient() == *c.d && *c.f->degree() == *c.n;
        rb.add("f-shape", ok);
    }

    // (3) the auxiliary prime
    if (c.q) {
        bool ok = int_is_prime(*c.q) && *c.d % *c.q != 0;
        rb.add("q-prime-coprime", ok);
    }

    // (4) companion value and m
    if (c.nuq) {
        bool ok = o.nu(Poly(*c.q)) == *c.nuq && *c.m == Poly(*c.q) * *c.nuq - Poly(1);
        rb.add("m-definition", ok);
    }

    // (5) per-row reduction identity
    if (c.rows) {
        bool ok = c.rows->size() == *c.n;
        std::string note;
        for (std::size_t i = 0; ok && i < c.rows->size(); ++i) {
            const CertRow& row = (*c.rows)[i];
            if (row.a.size() != *c.n) {
                ok = false;
                note = "row " + std::to_string(i) + " has wrong width";
                break;
            }
            Poly lhs = Poly::monomial(int_pow(*c.d, row.k), i) * *c.nuq + row.h * *c.f;
            Poly rhs(row.a);
            if (lhs != rhs) {
                ok = false;
                note = "row " + std::to_string(i) + " identity fails";
            }
        }
        rb.add("row-identities", ok, note);
    }

    // (6) adjugate row identity against the reassembled matrix
    if (c.detY) {
        bool ok = c.adj_row0->size() == *c.n && c.rows->size() == *c.n;
        if (ok) {
            std::size_t n = *c.n;
            for (std::size_t k = 0; ok && k < n; ++k) {
                YPoly sum;
                for (std::size_t jj = 0; jj < n; ++jj) {
                    const CertRow& row = (*c.rows)[jj];
                    YPoly entry = -YPoly(row.a[k]);
                    if (jj == k) entry += YPoly::monomial(int_pow(*c.d, row.k), 1);
                    sum += (*c.adj_row0)[jj] * entry;
                }
                YPoly expect = k == 0 ? *c.detY : YPoly();
                ok = sum == expect;
            }
        }
        rb.add("adjugate-identity", ok);
    }

    // (7) determinant shape: d^K y^n + sum b_j y^j
    if (c.K) {
        Integer ksum = 0;
        for (const auto& row : *c.rows) ksum += static_cast<long>(row.k);
        bool ok = *c.K == ksum && c.b->size() == *c.n;
        if (ok) {
            std::vector<Integer> want(*c.b);
            want.push_back(int_pow(*c.d, mpz_get_ui(c.K->get_mpz_t())));
            ok = *c.detY == YPoly(std::move(want));
        }
        rb.add("determinant-shape", ok);
    }

    // (8) geometric expansions: (m+1)^i = 1 + m*g_i
    if (c.gpolys) {
        bool ok = c.gpolys->size() == *c.n;
        Poly mp1 = *c.m + Poly(1);
        Poly pw = mp1;  // (m+1)^i
        for (std::size_t i = 1; ok && i <= c.gpolys->size(); ++i) {
            ok = pw == Poly(1) + *c.m * (*c.gpolys)[i - 1];
            pw = pw * mp1;
        }
        rb.add("geometric-expansions", ok);
    }

    // (9) the combination integer
    if (c.N) {
        Integer acc = int_pow(*c.d, mpz_get_ui(c.K->get_mpz_t()));
        for (std::size_t j = 0; j < c.b->size(); ++j)
            acc += (*c.b)[j] * int_pow(*c.q, *c.n - j);
        bool ok = *c.N == acc && *c.N != 0;
        rb.add("combination-integer", ok);
    }

    // (10) the linear combination witnessing N in the ideal
    if (c.N) {
        bool ok = Poly(*c.N) == *c.combo_f * *c.f + *c.combo_m * *c.m;
        rb.add("linear-combination", ok);
    }

    // (11) the factorization
    if (c.factors) {
        bool ok = (*c.unit == 1 || *c.unit == -1);
        Integer prod = *c.unit;
        for (const auto& p : *c.factors) {
            if (!int_is_prime(p)) ok = false;
            prod *= p;
        }
        ok = ok && prod == *c.N;
        rb.add("factorization", ok);
    }

    // (12) outcome consistency
    {
        bool ok = true;
        std::string note;
        if (c.outcome_prime) {
            const Integer& p = *c.outcome_prime;
            ok = int_is_prime(p);
            if (ok) {
                bool traced = false;
                for (const auto& t : c.lemma_trace)
                    if (t.query == Poly(p) && t.answer) traced = true;
                ok = traced;
                if (!traced) note = "prime answer not in the trace";
            } else {
                note = "outcome value is not prime";
            }
            if (ok) {
                if (c.factors) {
                    bool found = false;
                    for (const auto& v : *c.factors)
                        if (v == p) found = true;
                    ok = found;
                    if (!found) note = "prime not among the factors";
                } else {
                    // Without a factor phase the only prime exit is q itself.
                    ok = c.q.has_value() && *c.q == p;
                    if (!ok) note = "early prime exit must return q";
                }
            }
        } else {
            ok = validate_evidence(o, *c.outcome_evidence);
            if (!ok) note = "evidence does not validate";
        }
        rb.add("outcome", ok, note);
    }

    return rb.finish();
}

}  // namespace zxprime
