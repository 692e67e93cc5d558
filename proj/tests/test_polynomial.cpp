#include <doctest.h>

#include "cbsum/polynomial.hpp"

using namespace cbsum;

TEST_CASE("degree and normalization") {
    CHECK(Polynomial().degree() == -1);
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial({Rational(1), Rational(0), Rational(0)}).degree() == 0);
    CHECK(Polynomial::constant(Rational(5)).degree() == 0);
    CHECK(Polynomial::monomial(3).degree() == 3);
    CHECK(Polynomial::constant(Rational(0)).is_zero());
}

TEST_CASE("evaluation") {
    // 2 - x + 3x^2
    Polynomial p({Rational(2), Rational(-1), Rational(3)});
    CHECK(p.evaluate(Rational(0)) == Rational(2));
    CHECK(p.evaluate(Rational(1)) == Rational(4));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(9, 4));
    CHECK(Polynomial().evaluate(Rational(7)) == Rational(0));
}

TEST_CASE("arithmetic") {
    Polynomial a({Rational(1), Rational(2)});        // 1 + 2x
    Polynomial b({Rational(0), Rational(1), Rational(1)});  // x + x^2
    CHECK((a + b) == Polynomial({Rational(1), Rational(3), Rational(1)}));
    CHECK((a - a).is_zero());
    CHECK((a * b) ==
          Polynomial({Rational(0), Rational(1), Rational(3), Rational(2)}));
    CHECK((Rational(1, 2) * a) == Polynomial({Rational(1, 2), Rational(1)}));
    CHECK((a * Polynomial()).is_zero());
}

TEST_CASE("truncation") {
    Polynomial p({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(p.truncated(1) == Polynomial({Rational(1), Rational(2)}));
    CHECK(p.truncated(9) == p);
    CHECK(p.truncated(-1).is_zero());
}

TEST_CASE("to_string") {
    CHECK(Polynomial().to_string() == "0");
    CHECK(Polynomial({Rational(2, 15), Rational(1, 5)}).to_string() == "2/15, 1/5");
}

TEST_CASE("coefficient access out of range") {
    Polynomial p({Rational(1)});
    CHECK(p.coefficient(5) == Rational(0));
    CHECK(p.coefficient(-1) == Rational(0));
}
