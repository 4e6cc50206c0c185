#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "ulrich/rational.hpp"

using namespace ulrich;

TEST(Rational, LowestTermsAndSign) {
    Rational q(Integer(6), Integer(-4));
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).str(), "0");
    EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, Arithmetic) {
    Rational a = Rational::parse("1/3"), b = Rational::parse("-5/6");
    EXPECT_EQ(a + b, Rational::parse("-1/2"));
    EXPECT_EQ(a * b, Rational::parse("-5/18"));
    EXPECT_EQ(a / b, Rational::parse("-2/5"));
    EXPECT_THROW(a / Rational(0), DomainError);
    EXPECT_LT(b, a);
    EXPECT_EQ(pow(Rational::parse("2/3"), 3), Rational::parse("8/27"));
}

TEST(Rational, ParseRejectsGarbage) {
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("-12/8"), Rational::parse("-3/2"));
    for (const char* bad : {"", "1/", "/2", "a", "1/0", "1.5", "2//3"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, IntegerConversions) {
    EXPECT_EQ(Rational(Integer("123456789012345678901234567890")).to_integer(),
              Integer("123456789012345678901234567890"));
    EXPECT_THROW(Rational::parse("1/2").to_int64(), DomainError);
    EXPECT_THROW(Rational(Integer("99999999999999999999999")).to_int64(), DomainError);
    EXPECT_EQ(Rational(-42).to_int64(), -42);
}

TEST(Binomial, FallingFactorialConvention) {
    EXPECT_EQ(binom_int(5, 2), 10);
    EXPECT_EQ(binom_int(-1, 3), -1);
    EXPECT_EQ(binom_int(-3, 2), 6);
    EXPECT_EQ(binom_int(2, 5), 0);
    EXPECT_EQ(binom_int(7, 0), 1);
    EXPECT_THROW(binom_int(4, -1), DomainError);
    EXPECT_EQ(binom_rational(Rational::parse("1/2"), 2), Rational::parse("-1/8"));
}

TEST(Binomial, AgreesWithFallingOracle) {
    for (long l = -30; l <= 30; ++l)
        for (long m = 0; m <= 12; ++m)
            EXPECT_EQ(Rational(binom_int(l, m)), oracle::falling_binom(Rational(l), m)) << l << " " << m;
}

TEST(Binomial, PascalRule) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> L(-200, 200), M(1, 20);
    for (int i = 0; i < 500; ++i) {
        long l = L(rng), m = M(rng);
        EXPECT_EQ(binom_int(l, m), binom_int(l - 1, m) + binom_int(l - 1, m - 1));
    }
}

TEST(Binomial, Factorial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
}
