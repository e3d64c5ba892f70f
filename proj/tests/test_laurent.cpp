#include <catch2/catch_amalgamated.hpp>

#include "knotmosaic/laurent.hpp"

using namespace kmos;

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly p;
    p.add_term(3, 5);
    p.add_term(3, -5);
    REQUIRE(p.is_zero());
    REQUIRE(p == LaurentPoly());
    p.add_term(0, 1);
    REQUIRE(p.is_one());
}

TEST_CASE("arithmetic") {
    LaurentPoly a = LaurentPoly::monomial(2) + LaurentPoly::monomial(-2);
    LaurentPoly b = LaurentPoly::monomial(1, 3);
    REQUIRE((a * b).coeff(3) == 3);
    REQUIRE((a * b).coeff(-1) == 3);
    REQUIRE(a.scaled(-2).coeff(2) == -2);
    REQUIRE(a.shifted(4).coeff(6) == 1);
    REQUIRE(a.evaluated_at_one() == 2);
    REQUIRE(a.evaluated_at_minus_one() == 2);
    REQUIRE((LaurentPoly::monomial(1) + LaurentPoly::monomial(3)).evaluated_at_minus_one() == -2);
}

TEST_CASE("mirror negates exponents") {
    LaurentPoly p = LaurentPoly::monomial(-4, -1) + LaurentPoly::monomial(-3, 1);
    REQUIRE(p.mirrored().coeff(4) == -1);
    REQUIRE(p.mirrored().coeff(3) == 1);
    REQUIRE_FALSE(p.mirror_symmetric());
    LaurentPoly sym = LaurentPoly::monomial(-2) + LaurentPoly::constant(1) + LaurentPoly::monomial(2);
    REQUIRE(sym.mirror_symmetric());
}

TEST_CASE("normative rendering") {
    LaurentPoly p = LaurentPoly::monomial(-4, -1) + LaurentPoly::monomial(-3, 1);
    REQUIRE(p.to_string("A") == "-1*A^-4 + 1*A^-3");
    REQUIRE(LaurentPoly().to_string("A") == "0");
    REQUIRE(LaurentPoly::constant(1).to_string("t") == "1*t^0");
}

TEST_CASE("exponent division") {
    LaurentPoly p = LaurentPoly::monomial(-8) + LaurentPoly::monomial(4, -2);
    LaurentPoly t = p.exponents_divided(-4);
    REQUIRE(t.coeff(2) == 1);
    REQUIRE(t.coeff(-1) == -2);
    LaurentPoly odd = LaurentPoly::monomial(3);
    REQUIRE_THROWS_AS(odd.exponents_divided(-4), std::domain_error);
}

TEST_CASE("span") {
    LaurentPoly p = LaurentPoly::monomial(-4) + LaurentPoly::monomial(-1);
    REQUIRE(p.span() == 3);
    REQUIRE(LaurentPoly().span() == 0);
}
