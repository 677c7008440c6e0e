#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arlab/errors.hpp"
#include "arlab/expr.hpp"
#include "test_util.hpp"

#include <random>

using namespace arlab;
using namespace arlab::testutil;

TEST_CASE("grammar examples parse") {
    ExprAst a = parse("T^2 - 3/2*T + 1");
    CHECK(to_upoly(a).deg() == 2);
    CHECK(to_upoly(a).coeff(1) == make_rat(-3, 2));

    ExprAst b = parse("X1*X2^2 + 2");
    CHECK(max_var_index(b) == 2);

    CHECK(up("(T-1)*(T+1)") == up("T^2-1"));
    CHECK(mp("X1 + 0*X2", 2) == MPoly::var(2, 1));
    CHECK(up("2^3") == UPoly::constant(Rat(8)));
}

TEST_CASE("located parse errors") {
    CHECK_THROWS_AS(parse("T^(-1)"), ParseError);
    CHECK_THROWS_AS(parse("T^(1/2)"), ParseError);
    CHECK_THROWS_AS(parse("foo"), ParseError);
    CHECK_THROWS_AS(parse("X0"), ParseError);
    CHECK_THROWS_AS(parse("1/0"), ParseError);
    CHECK_THROWS_AS(parse("T +"), ParseError);
    CHECK_THROWS_AS(parse("(T"), ParseError);
    CHECK_THROWS_AS(parse("T T"), ParseError);

    try {
        parse("T^2 + $");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 6);
    }
}

TEST_CASE("negative exponents are called out") {
    try {
        parse("T^(-1)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("negative exponent") != std::string::npos);
    }
}

TEST_CASE("to_upoly rejects multivariate input") {
    CHECK_THROWS_AS(to_upoly(parse("X1+1")), std::invalid_argument);
    CHECK_THROWS_AS(to_mpoly(parse("X3"), 2), std::invalid_argument);
    CHECK_THROWS_AS(to_mpoly(parse("T"), 2), std::invalid_argument);
}

TEST_CASE("canonical printing") {
    CHECK(print_canonical(up("T^2-1")) == "T^2 - 1");
    CHECK(print_canonical(UPoly::zero()) == "0");
    CHECK(print_canonical(mp("X1*X2 + X1^3", 2)) == "X1^3 + X1*X2");
    CHECK(print_canonical(up("-T^2+1")) == "-T^2 + 1");
    CHECK(print_canonical(up("3/2*T")) == "3/2*T");
    CHECK(print_canonical(MPoly::constant(2, Rat(0))) == "0");
    CHECK(print_canonical(mp("X2^2 + X1*X2", 2)) == "X1*X2 + X2^2");
}

TEST_CASE("print-parse round trip, univariate") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 300; ++it) {
        UPoly p = random_upoly(rng, 8, false);
        const std::string s = print_canonical(p);
        UPoly q = to_upoly(parse(s));
        CHECK(q == p);
        CHECK(print_canonical(q) == s);
    }
}

TEST_CASE("print-parse round trip, multivariate") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 300; ++it) {
        MPoly p = random_mpoly(rng, 3, 4, 6);
        const std::string s = print_canonical(p);
        if (p.is_zero()) {
            CHECK(s == "0");
            continue;
        }
        MPoly q = to_mpoly(parse(s), 3);
        CHECK(q == p);
        CHECK(print_canonical(q) == s);
    }
}
