#pragma once

// The five witnesses that (M, nu) fails to be an explicit maximal ideal:
//   1. 0 is not a member
//   2. members a, b whose sum is not a member
//   3. a member a and a scalar lambda with lambda*a not a member
//   4. 1 is a member
//   5. a non-member a with a*nu(a) - 1 not a member
// A witness is checked by replaying exactly its defining queries.

#include <string>
#include <variant>

#include "zxprime/oracle.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"

namespace zxprime {

struct ZeroNotMember {};

struct SumEscapes {
    Poly a;
    Poly b;
};

struct ScalarMultipleEscapes {
    Poly lambda;
    Poly a;
};

struct OneIsMember {};

struct CompanionFails {
    Poly a;
};

using Evidence =
    std::variant<ZeroNotMember, SumEscapes, ScalarMultipleEscapes, OneIsMember, CompanionFails>;

inline int evidence_case(const Evidence& e) { return static_cast<int>(e.index()) + 1; }

inline bool operator==(const Evidence& lhs, const Evidence& rhs) {
    if (lhs.index() != rhs.index()) return false;
    switch (lhs.index()) {
        case 1: {
            const auto& a = std::get<SumEscapes>(lhs);
            const auto& b = std::get<SumEscapes>(rhs);
            return a.a == b.a && a.b == b.b;
        }
        case 2: {
            const auto& a = std::get<ScalarMultipleEscapes>(lhs);
            const auto& b = std::get<ScalarMultipleEscapes>(rhs);
            return a.lambda == b.lambda && a.a == b.a;
        }
        case 4:
            return std::get<CompanionFails>(lhs).a == std::get<CompanionFails>(rhs).a;
        default:
            return true;
    }
}

inline bool validate_evidence(Oracle& o, const Evidence& e) {
    struct Replay {
        Oracle& o;
        bool operator()(const ZeroNotMember&) { return !o.membership(Poly()); }
        bool operator()(const SumEscapes& w) {
            return o.membership(w.a) && o.membership(w.b) && !o.membership(w.a + w.b);
        }
        bool operator()(const ScalarMultipleEscapes& w) {
            return o.membership(w.a) && !o.membership(w.lambda * w.a);
        }
        bool operator()(const OneIsMember&) { return o.membership(Poly(1)); }
        bool operator()(const CompanionFails& w) {
            if (o.membership(w.a)) return false;
            Poly nu_a = o.nu(w.a);
            return !o.membership(w.a * nu_a - Poly(1));
        }
    };
    return std::visit(Replay{o}, e);
}

inline std::string describe_evidence(const Evidence& e) {
    struct Describe {
        std::string operator()(const ZeroNotMember&) { return "case1"; }
        std::string operator()(const SumEscapes& w) {
            return "case2 a = " + format_poly(w.a) + " b = " + format_poly(w.b);
        }
        std::string operator()(const ScalarMultipleEscapes& w) {
            return "case3 lambda = " + format_poly(w.lambda) + " a = " + format_poly(w.a);
        }
        std::string operator()(const OneIsMember&) { return "case4"; }
        std::string operator()(const CompanionFails& w) { return "case5 a = " + format_poly(w.a); }
    };
    return std::visit(Describe{}, e);
}

}  // namespace zxprime
