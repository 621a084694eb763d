#include <catch2/catch_amalgamated.hpp>

#include "testutil.hpp"
#include "zxprime/oracle_spec.hpp"
#include "zxprime/parser.hpp"

using namespace zxprime;

TEST_CASE("polynomial grammar", "[parser]") {
    CHECK(parse_poly("x^2+1") == Poly(std::vector<Integer>{1, 0, 1}));
    CHECK(parse_poly("0") == Poly());
    CHECK(parse_poly("2*x^2 - 1") == Poly(std::vector<Integer>{-1, 0, 2}));
    CHECK(parse_poly("2x^2-1") == parse_poly("2 * x^2 - 1"));
    CHECK(parse_poly("X") == parse_poly("x"));
    CHECK(parse_poly("-x") == -Poly::variable());
    CHECK(parse_poly("x*x") == parse_poly("x^2"));
    CHECK(parse_poly("3*4") == Poly(12));
    CHECK(parse_poly("  x ^ 2   +   1 ") == parse_poly("x^2+1"));
    CHECK(parse_poly("x - x") == Poly());
    CHECK(parse_poly("123456789012345678901234567890") ==
          Poly(Integer("123456789012345678901234567890")));
}

TEST_CASE("parse errors carry an offset", "[parser]") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x+"), ParseError);
    CHECK_THROWS_AS(parse_poly("2**x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x y"), ParseError);
    CHECK_THROWS_AS(parse_poly("x^999999999999"), ParseError);

    try {
        parse_poly("x + )");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 4);
    }
}

TEST_CASE("formatting is canonical", "[parser]") {
    CHECK(format_poly(parse_poly("x^2+1")) == "x^2 + 1");
    CHECK(format_poly(Poly()) == "0");
    CHECK(format_poly(parse_poly("-x")) == "-x");
    CHECK(format_poly(parse_poly("2x^2-1")) == "2x^2 - 1");
    CHECK(format_poly(parse_poly("-x^3 + 5x - 7")) == "-x^3 + 5x - 7");
    CHECK(format_poly(parse_ypoly("y-510")) == "y - 510");
}

TEST_CASE("parse inverts format", "[parser][property]") {
    testutil::Rng rng(37);
    for (int iter = 0; iter < 10000; ++iter) {
        Poly p = testutil::random_poly(rng, 8, 1000000);
        CHECK(parse_poly(format_poly(p)) == p);
    }
}

TEST_CASE("strings outside the alphabet are rejected", "[parser][property]") {
    testutil::Rng rng(41);
    const std::string alphabet = "0123456789xX^*+- \t";
    int done = 0;
    while (done < 500) {
        std::string s;
        std::size_t len = 1 + rng() % 12;
        bool alien = false;
        for (std::size_t i = 0; i < len; ++i) {
            char c = static_cast<char>(33 + rng() % 90);
            alien = alien || alphabet.find(c) == std::string::npos;
            s += c;
        }
        if (!alien) continue;
        CHECK_THROWS_AS(parse_poly(s), ParseError);
        ++done;
    }
}

TEST_CASE("oracle spec files", "[parser]") {
    OracleSpec pg = parse_oracle_spec("kind=pg_ideal\np=3\ng=x^2+1");
    CHECK(pg.kind == OracleKind::pg_ideal);
    CHECK(pg.p == 3);
    CHECK(pg.g == parse_poly("x^2+1"));

    OracleSpec cf = parse_oracle_spec("kind=constant\nvalue=ff\nnu=1");
    CHECK(cf.kind == OracleKind::constant);
    CHECK_FALSE(cf.value);
    CHECK(cf.default_nu == Poly(1));

    CHECK_THROWS_AS(parse_oracle_spec("kind=pg_ideal\np=4\ng=x"), ParseError);
    CHECK_THROWS_AS(parse_oracle_spec("kind=pg_ideal\np=3\ng=3x"), ParseError);
    CHECK_THROWS_AS(parse_oracle_spec("kind=banana"), ParseError);
    CHECK_THROWS_AS(parse_oracle_spec("p=3"), ParseError);
    CHECK_THROWS_AS(parse_oracle_spec("kind=pg_ideal\ng=x"), ParseError);
    CHECK_THROWS_AS(parse_oracle_spec("kind=constant\nvalue=maybe"), ParseError);

    OracleSpec table = parse_oracle_spec(
        "# a small table\nkind=table\nmembers=x; x+1 ; 2x^2\ndefault=ff\nnu=x");
    CHECK(table.members.size() == 3);
    CHECK(table.default_nu == Poly::variable());

    OracleSpec ov = parse_oracle_spec(
        "kind=constant\nvalue=ff\nnu=1\noverride M: 2x-1 = tt\noverride nu: x = 2");
    REQUIRE(ov.overrides.size() == 2);
    CHECK(ov.overrides[0].targets_membership);
    CHECK(ov.overrides[0].key == parse_poly("2x-1"));
    CHECK(ov.overrides[0].bool_value);
    CHECK_FALSE(ov.overrides[1].targets_membership);
    CHECK(ov.overrides[1].poly_value == Poly(2));
}
