#include <doctest.h>

#include <random>

#include <charcalc/coeff.hpp>

#include "test_support.hpp"

using namespace charcalc;
using charcalc::test::rat;

TEST_CASE("rational arithmetic is exact and reduced")
{
    CHECK(rat_arith(rat(1, 2), rat(1, 3), ArithOp::add) == rat(5, 6));
    CHECK(rat_arith(rat(1, 6), rat(6), ArithOp::mul) == rat(1));
    CHECK(rat_arith(rat(1, 2), rat(1, 3), ArithOp::sub) == rat(1, 6));
    CHECK(rat_arith(rat(1, 2), rat(1, 3), ArithOp::div) == rat(3, 2));
    CHECK_THROWS_AS(rat_arith(rat(1), rat(0), ArithOp::div), division_by_zero);
    CHECK_THROWS_AS(rat(1) / rat(0), division_by_zero);
    CHECK_THROWS_AS(Rational(Integer(3), Integer(0)), division_by_zero);
    CHECK_THROWS_AS(rat(0).inverse(), division_by_zero);

    const Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == Integer(-3));
    CHECK(r.denominator() == Integer(2));
    CHECK(r.str() == "-3/2");
    CHECK(rat(10, 5).str() == "2");
    CHECK(rat(10, 5).is_integer());
}

TEST_CASE("factorial_inverse")
{
    CHECK(factorial_inverse(0) == rat(1));
    CHECK(factorial_inverse(3) == rat(1, 6));
    CHECK(factorial_inverse(5) == rat(1, 120));
    for (unsigned k = 0; k <= 20; ++k) {
        CHECK(factorial_inverse(k) * Rational(factorial(k)) == rat(1));
    }
    // past 64 bits
    CHECK(factorial(30).str() == "265252859812191058636308480000000");
    CHECK(factorial_inverse(25).denominator() == factorial(25));
}

TEST_CASE("binomials, including negative upper index")
{
    CHECK(binomial(5, 2) == Integer(10));
    CHECK(binomial(5, 0) == Integer(1));
    CHECK(binomial(5, 7) == Integer(0));
    CHECK(binomial(-3, 2) == Integer(6));
    CHECK(binomial(-1, 3) == Integer(-1));
    CHECK(binomial(4, -1) == Integer(0));
}

TEST_CASE("field axioms hold exactly on random rationals")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const Rational a = test::random_rational(rng);
        const Rational b = test::random_rational(rng);
        const Rational c = test::random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == rat(0));
        CHECK(a - b == a + (-b));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == rat(1));
            CHECK((b / a) * a == b);
        }
    }
}

TEST_CASE("integers")
{
    CHECK(Integer("-12345678901234567890").str() == "-12345678901234567890");
    CHECK_THROWS_AS(Integer("12x"), std::invalid_argument);
    CHECK(Integer(-1).inverse_if_unit() == Integer(-1));
    CHECK_FALSE(Integer(2).inverse_if_unit().has_value());
    CHECK(pow(Integer(3), 4) == Integer(81));
    CHECK(Integer(5) > Integer(-5));
    CHECK_THROWS_AS(pow(Integer(10), 30).to_long(), std::overflow_error);
}

TEST_CASE("F2")
{
    CHECK(F2(1) + F2(1) == F2(0));
    CHECK(F2(1) * F2(1) == F2(1));
    CHECK(F2(-3) == F2(1));
    CHECK(F2(Integer(4)) == F2(0));
    CHECK(F2(Integer(-7)) == F2(1));
    CHECK(-F2(1) == F2(1));
    CHECK_FALSE(F2(0).inverse_if_unit().has_value());
    CHECK(F2(1).str() == "1");
}
