#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "zxprime/modpoly.hpp"
#include "zxprime/parser.hpp"

using namespace zxprime;

namespace {
ModPoly M(const char* text, long p) { return mod_reduce(parse_poly(text), p); }
}  // namespace

TEST_CASE("division with remainder", "[modpoly]") {
    auto [q, r] = modpoly_divrem(M("2x^2+2", 3), M("x^2+1", 3));
    CHECK(q == M("2", 3));
    CHECK(r.is_zero());

    auto [q2, r2] = modpoly_divrem(M("x", 1019), M("x", 1019));
    CHECK(q2 == M("1", 1019));
    CHECK(r2.is_zero());

    auto [q3, r3] = modpoly_divrem(M("1", 5), M("x", 5));
    CHECK(q3.is_zero());
    CHECK(r3 == M("1", 5));

    CHECK_THROWS_AS(modpoly_divrem(M("x", 5), ModPoly(Integer(5))), std::invalid_argument);
}

TEST_CASE("division invariant a = qb + r with deg r < deg b", "[modpoly][property]") {
    testutil::Rng rng(13);
    for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(1019)}) {
        for (int iter = 0; iter < 250; ++iter) {
            ModPoly a = mod_reduce(testutil::random_poly(rng, 7, 2000), p);
            ModPoly b = mod_reduce(testutil::random_nonzero_poly(rng, 4, 2000), p);
            if (b.is_zero()) continue;  // coefficients may all vanish mod p
            auto [q, r] = modpoly_divrem(a, b);
            CHECK(q * b + r == a);
            if (!r.is_zero()) CHECK(*r.degree() < *b.degree());
        }
    }
}

TEST_CASE("extended gcd on pinned instances", "[modpoly]") {
    // inverse of x modulo x^2+1 over F_3
    auto e = modpoly_ext_gcd(M("x", 3), M("x^2+1", 3));
    CHECK(e.g == M("1", 3));
    CHECK(e.s == M("2x", 3));
    CHECK(e.s * M("x", 3) + e.t * M("x^2+1", 3) == e.g);

    // gcd with itself is the monic normalization
    auto self = modpoly_ext_gcd(M("2x+2", 5), M("2x+2", 5));
    CHECK(self.g == M("x+1", 5));
    CHECK(self.s * M("2x+2", 5) + self.t * M("2x+2", 5) == self.g);

    // integer inverse: 2 * 510 = 1020 = 1 mod 1019
    auto inv = modpoly_ext_gcd(M("2", 1019), M("x", 1019));
    CHECK(inv.g == M("1", 1019));
    CHECK(inv.s == M("510", 1019));
    CHECK(inv.t.is_zero());

    CHECK_THROWS_AS(modpoly_ext_gcd(ModPoly(Integer(5)), ModPoly(Integer(5))),
                    std::invalid_argument);
}

TEST_CASE("extended gcd bezout identity", "[modpoly][property]") {
    testutil::Rng rng(17);
    int done = 0;
    while (done < 1000) {
        Integer p = std::vector<Integer>{2, 3, 5, 1019}[rng() % 4];
        ModPoly a = mod_reduce(testutil::random_poly(rng, 6, 5000), p);
        ModPoly b = mod_reduce(testutil::random_poly(rng, 6, 5000), p);
        if (a.is_zero() && b.is_zero()) continue;
        auto e = modpoly_ext_gcd(a, b);
        CHECK(e.s * a + e.t * b == e.g);
        CHECK(e.g.leading_coefficient() == 1);
        if (!a.is_zero()) CHECK(modpoly_divrem(a, e.g).remainder.is_zero());
        if (!b.is_zero()) CHECK(modpoly_divrem(b, e.g).remainder.is_zero());
        ++done;
    }
}
