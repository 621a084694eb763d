#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "zxprime/modpoly.hpp"
#include "zxprime/parser.hpp"
#include "zxprime/poly.hpp"

using namespace zxprime;

namespace {
Poly P(const char* text) { return parse_poly(text); }
}  // namespace

TEST_CASE("addition", "[poly]") {
    CHECK(P("x+1") + P("-x") == Poly(1));
    CHECK(Poly() + P("x^3-2") == P("x^3-2"));
    CHECK(P("2x^2-1") + P("x^2+1") == P("3x^2"));
}

TEST_CASE("multiplication", "[poly]") {
    CHECK(P("x") * P("2x") == P("2x^2"));
    CHECK(P("x^5-3") * Poly(1) == P("x^5-3"));
    CHECK(P("x-1") * P("x+1") == P("x^2-1"));
    CHECK(P("x") * Poly() == Poly());
}

TEST_CASE("degree and leading coefficient", "[poly]") {
    Poly p = P("2x^2-1");
    REQUIRE(p.degree().has_value());
    CHECK(*p.degree() == 2);
    CHECK(p.leading_coefficient() == 2);

    Poly zero;
    CHECK_FALSE(zero.degree().has_value());
    CHECK_THROWS_AS(zero.leading_coefficient(), std::invalid_argument);

    Poly c(-7);
    CHECK(*c.degree() == 0);
    CHECK(c.leading_coefficient() == -7);
}

TEST_CASE("substitution of y-polynomials at x-values", "[poly]") {
    YPoly a = parse_ypoly("y - 510");
    CHECK(substitute(a, Poly(510)) == Poly());

    CHECK(substitute(parse_ypoly("y^2"), P("x+1")) == P("x^2+2x+1"));
    CHECK(substitute(parse_ypoly("3"), P("x^4-x")) == Poly(3));
}

TEST_CASE("canonical form has no trailing zeros", "[poly]") {
    Poly p(std::vector<Integer>{1, 2, 0, 0});
    CHECK(*p.degree() == 1);
    CHECK(P("x^2") - P("x^2") == Poly());
}

TEST_CASE("degree of a product adds", "[poly][property]") {
    testutil::Rng rng(7);
    for (int iter = 0; iter < 2000; ++iter) {
        Poly a = testutil::random_nonzero_poly(rng, 6, 50);
        Poly b = testutil::random_nonzero_poly(rng, 6, 50);
        Poly prod = a * b;
        REQUIRE(prod.degree().has_value());
        CHECK(*prod.degree() == *a.degree() + *b.degree());
        CHECK(prod.leading_coefficient() == a.leading_coefficient() * b.leading_coefficient());
    }
}

TEST_CASE("reduction mod p", "[modpoly]") {
    CHECK(mod_reduce(P("2x^2-1"), 3) == mod_reduce(P("2x^2+2"), 3));
    CHECK(mod_reduce(P("3x"), 3).is_zero());
    CHECK(mod_reduce(P("x"), 1019).lift() == P("x"));
    CHECK_THROWS_AS(mod_reduce(P("x"), 1), std::invalid_argument);
}

TEST_CASE("reduction mod p is a ring homomorphism", "[modpoly][property]") {
    testutil::Rng rng(11);
    for (Integer p : {Integer(2), Integer(3), Integer(5), Integer(1019)}) {
        for (int iter = 0; iter < 250; ++iter) {
            Poly a = testutil::random_poly(rng, 5, 100);
            Poly b = testutil::random_poly(rng, 5, 100);
            CHECK(mod_reduce(a + b, p) == mod_reduce(a, p) + mod_reduce(b, p));
            CHECK(mod_reduce(a * b, p) == mod_reduce(a, p) * mod_reduce(b, p));
        }
    }
}
