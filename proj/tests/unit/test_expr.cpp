#include <doctest.h>

#include "fixtures.hpp"
#include "ladist/expr.hpp"

using namespace ladist;
using namespace ladist::testing;

TEST_CASE("segment expressions") {
    Expression e = parseExpression("Seg(rho, -1/2, 1/2)");
    REQUIRE(e.items.size() == 1);
    CHECK(std::get<Segment>(e.items[0]) == seg("rho", Rational(-1, 2), Rational(1, 2)));

    e = parseExpression("St(rho, 3)");
    CHECK(std::get<Segment>(e.items[0]) == seg("rho", Rational(-1), Rational(1)));

    e = parseExpression("St(rho,2)@1/2");
    CHECK(std::get<Segment>(e.items[0]) == seg("rho", Rational(0), Rational(1)));

    e = parseExpression("St(eta*rho, 1)");
    CHECK(std::get<Segment>(e.items[0]) == seg("rho", Rational(0), Rational(0), 1));
}

TEST_CASE("ladder, speh, pair and product expressions") {
    Expression e = parseExpression("Ladder[Seg(rho,1/2,1/2), Seg(rho,-1/2,-1/2)]");
    REQUIRE(e.items.size() == 1);
    CHECK(std::get<Multisegment>(e.items[0]).size() == 2);

    e = parseExpression("Speh(St(rho,2), 3)");
    const auto& u = std::get<UnitaryFactor>(e.items[0]);
    CHECK(u.kind == UnitaryFactor::Kind::Speh);
    CHECK(u.k == 3);

    e = parseExpression("Pair(Speh(St(rho,1),2), 1/4)");
    const auto& p = std::get<UnitaryFactor>(e.items[0]);
    CHECK(p.kind == UnitaryFactor::Kind::ComplementaryPair);
    CHECK(p.alpha == Rational(1, 4));

    e = parseExpression("Speh(St(tau1,1),2) x Speh(St(tau2,1),2)");
    CHECK(e.items.size() == 2);
}

TEST_CASE("parse errors carry positions and expectations") {
    try {
        parseExpression("Seg(rho, 1)");
        FAIL("expected a parse error");
    } catch (const parse_error& err) {
        CHECK(err.expected == ",");
        CHECK(err.position > 0);
    }
    CHECK_THROWS_AS(parseExpression("Blah(rho,1)"), parse_error);
    CHECK_THROWS_AS(parseExpression("St(rho,2) y St(rho,2)"), parse_error);
    CHECK_THROWS_AS(parseExpression(""), parse_error);
}

TEST_CASE("printing round-trips to equal values") {
    std::vector<std::string> inputs = {
        "Seg(rho, -1/2, 1/2)",
        "St(mu, 4)@-3/2",
        "St(eta*rho, 2)",
        "Ladder[St(rho,2)@1/2, St(rho,2)@-1/2]",
        "Speh(St(rho,2), 3)",
        "Pair(Speh(St(rho,1),2), 1/4)",
        "Speh(St(tau1,1),2) x Speh(St(tau2,1),2) x Ladder[St(rho,1)@9]",
    };
    for (const std::string& in : inputs) {
        Expression e = parseExpression(in);
        Expression again = parseExpression(printExpression(e));
        CHECK(again == e);
        // printing is a fixed point after one round
        CHECK(printExpression(again) == printExpression(e));
    }
}
