#pragma once

// Random total (M, nu) pairs for the soundness fuzz: table-based membership
// over small polynomials, plus membership decided by hashing the canonical
// text form. Everything is deterministic given the seed, so a run and its
// verification see the same oracle.

#include <cstdint>
#include <set>
#include <string>

#include "testutil.hpp"
#include "zxprime/oracle.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"

namespace testutil {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// A small family of companion functions.
inline zxprime::Oracle::CompanionFn random_companion(Rng& rng) {
    switch (rng() % 4) {
        case 0: {
            zxprime::Poly c(static_cast<long>(rng() % 5) - 2);
            return [c](const zxprime::Poly&) { return c; };
        }
        case 1:
            return [](const zxprime::Poly& f) { return f; };
        case 2: {
            zxprime::Poly lin = zxprime::Poly::variable() +
                                zxprime::Poly(static_cast<long>(rng() % 5) - 2);
            return [lin](const zxprime::Poly&) { return lin; };
        }
        default:
            return [](const zxprime::Poly& f) {
                std::uint64_t h = fnv1a(zxprime::format_poly(f));
                std::vector<zxprime::Integer> cs(1 + h % 3);
                for (auto& c : cs) {
                    c = static_cast<long>(h % 5) - 2;
                    h = h * 6364136223846793005ULL + 1442695040888963407ULL;
                }
                return zxprime::Poly(std::move(cs));
            };
    }
}

inline zxprime::Oracle random_fuzz_oracle(Rng& rng) {
    zxprime::Oracle::MembershipFn m;
    if (rng() % 2 == 0) {
        std::set<zxprime::Poly> members;
        std::size_t count = rng() % 12;
        for (std::size_t i = 0; i < count; ++i) members.insert(random_poly(rng, 2, 3));
        bool dflt = rng() % 4 == 0;
        m = [members, dflt](const zxprime::Poly& f) {
            return members.count(f) ? !dflt : dflt;
        };
    } else {
        std::uint64_t salt = rng();
        std::uint64_t mod = 2 + rng() % 4;
        m = [salt, mod](const zxprime::Poly& f) {
            return (fnv1a(zxprime::format_poly(f)) ^ salt) % mod == 0;
        };
    }
    return zxprime::Oracle(std::move(m), random_companion(rng));
}

}  // namespace testutil
