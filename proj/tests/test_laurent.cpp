#include "doctest.h"

#include "cp2/errors.hpp"
#include "cp2/laurent.hpp"

using cp2::Laurent;

TEST_CASE("laurent basics") {
    Laurent zero;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");

    Laurent one(1);
    Laurent t = Laurent::monomial(1, 1);
    Laurent p = t + Laurent(-1) + Laurent::monomial(1, -1);
    CHECK(p.str() == "t^-1 - 1 + t");
    CHECK(p.coef(1) == 1);
    CHECK(p.coef(0) == -1);
    CHECK(p.coef(5) == 0);
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    CHECK(p.eval_pm1(1) == 1);
    CHECK(p.eval_pm1(-1) == -3);
    CHECK((p - p).is_zero());
    CHECK(p == p.inverted()); // symmetric
    CHECK(p * one == p);
    CHECK((p * zero).is_zero());
}

TEST_CASE("laurent multiplication and shifts") {
    Laurent a = Laurent::monomial(2, 3) + Laurent::monomial(-1, 0);
    Laurent b = Laurent::monomial(1, -3);
    CHECK((a * b).str() == "-t^-3 + 2");
    CHECK(a.shifted(-3) == a * b);
    Laurent sq = a * a;
    CHECK(sq.coef(6) == 4);
    CHECK(sq.coef(3) == -4);
    CHECK(sq.coef(0) == 1);
}

TEST_CASE("laurent cancellation removes stored zeros") {
    Laurent a = Laurent::monomial(5, 2);
    Laurent b = Laurent::monomial(-5, 2);
    Laurent s = a + b;
    CHECK(s.is_zero());
    CHECK(s.terms().empty());
}

TEST_CASE("variable tags") {
    Laurent p = Laurent::monomial(1, 2, "A");
    Laurent q = Laurent::monomial(1, 2, "t");
    CHECK_THROWS_AS(p + q, cp2::ContractError);
    CHECK(p + Laurent(3) == Laurent(3) + p); // constants mix freely
    CHECK(p.with_var("t") == q);
    CHECK(p.str() == "A^2");
}

TEST_CASE("printing conventions") {
    CHECK(Laurent(-7).str() == "-7");
    CHECK(Laurent::monomial(-1, 1).str() == "-t");
    CHECK(Laurent::monomial(3, -2).str() == "3t^-2");
    Laurent p = Laurent::monomial(-2, -2) + Laurent::monomial(1, 4);
    CHECK(p.str() == "-2t^-2 + t^4");
}
