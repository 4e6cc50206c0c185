#include <gtest/gtest.h>

#include <random>

#include "ulrich/symmetric.hpp"

using namespace ulrich;

TEST(Partition, Basics) {
    Partition p{3, 1};
    EXPECT_EQ(p.name(), "m31");
    EXPECT_EQ(p.weight(), 4u);
    EXPECT_EQ(Partition::ones(4).name(), "m1111");
    EXPECT_EQ(Partition().name(), "1");
    EXPECT_THROW(Partition({1, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(MonomialSym, TermCounts) {
    EXPECT_EQ(monomial_sym({2, 1}, 4).size(), 12u);
    EXPECT_EQ(monomial_sym({1, 1}, 5).size(), 10u);
    EXPECT_EQ(monomial_sym(Partition::ones(4), 4).size(), 1u);
    EXPECT_TRUE(monomial_sym(Partition::ones(4), 3).is_zero());
    EXPECT_EQ(monomial_sym({}, 3), MultiPoly::constant(3, 1));
}

TEST(MonomialSym, EvaluatesAtOnesToMultinomialCount) {
    // m_lambda(1,...,1) counts distinct rearrangements of lambda padded to s.
    const std::vector<long> ones(6, 1);
    EXPECT_EQ(monomial_sym({2, 1}, 6).eval(std::span<const long>(ones)), Rational(30));
    EXPECT_EQ(monomial_sym({2, 2}, 6).eval(std::span<const long>(ones)), Rational(15));
    EXPECT_EQ(monomial_sym({2, 1, 1}, 6).eval(std::span<const long>(ones)), Rational(60));
}

TEST(Symmetry, Detection) {
    EXPECT_TRUE(is_symmetric(monomial_sym({3, 1}, 5)));
    MultiPoly p = MultiPoly::parse("1 * x1^2*x2", 3);
    EXPECT_FALSE(is_symmetric(p));
    EXPECT_THROW(expand_direct(p.extend(4)), NotSymmetricError);
}

TEST(Expansion, Preconditions) {
    EXPECT_THROW(expand_direct(monomial_sym({2}, 3)), DimensionError);
    EXPECT_THROW(expand_direct(monomial_sym({5}, 4)), std::domain_error);
}

TEST(Expansion, BasisElementsAreUnitVectors) {
    for (unsigned s : {4u, 6u}) {
        const auto& basis = degree4_basis();
        for (std::size_t i = 0; i < kBasisSize; ++i) {
            SymExpansion e = expand_direct(monomial_sym(basis[i], s));
            for (std::size_t j = 0; j < kBasisSize; ++j) EXPECT_EQ(e.coeffs[j], Rational(i == j ? 1 : 0));
            EXPECT_EQ(expand_via_restriction(monomial_sym(basis[i], s)), e);
        }
    }
}

TEST(Expansion, RandomRoundTrip) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> C(-20, 20);
    for (unsigned s = 4; s <= 7; ++s)
        for (int trial = 0; trial < 10; ++trial) {
            SymExpansion e;
            e.s = s;
            for (auto& c : e.coeffs) c = Rational(C(rng)) / Rational(C(rng) == 0 ? 1 : 3);
            MultiPoly g = e.reconstruct();
            EXPECT_EQ(expand_direct(g), e);
            EXPECT_EQ(expand_via_restriction(g), e);
        }
}

TEST(Expansion, PowerSumIdentity) {
    // p1^2 = m2 + 2 m11
    const unsigned s = 5;
    MultiPoly p1 = sum_of_variables(s);
    SymExpansion e = expand_direct(p1 * p1);
    EXPECT_EQ(e.coeffs[8], Rational(1));
    EXPECT_EQ(e.coeffs[9], Rational(2));
}

TEST(ProductTable, HoldsForSmallS) {
    for (unsigned s = 4; s <= 6; ++s) {
        Report r = verify_tf2_table(s);
        EXPECT_TRUE(r.passed()) << "s=" << s;
        EXPECT_EQ(r.checks.size(), 13u);
    }
}

TEST(RestrictionIdentities, HoldForS5And6) {
    for (unsigned s = 5; s <= 6; ++s) EXPECT_TRUE(verify_restriction_identities(s).passed()) << s;
    EXPECT_THROW(verify_restriction_identities(4), std::invalid_argument);
}
