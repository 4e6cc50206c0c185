#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulrich/ci_invariants.hpp"
#include "ulrich/hypersurface.hpp"

using namespace ulrich;

TEST(H0Projective, VanishesBelowZero) {
    EXPECT_EQ(h0_projective(3, 2), 10);
    EXPECT_EQ(h0_projective(2, 0), 1);
    EXPECT_EQ(h0_projective(3, -1), 0);
    // chi(O_{P^2}(-5)) = 6, yet there are no sections.
    EXPECT_EQ(binom_int(-5 + 2, 2), 6);
    EXPECT_EQ(h0_projective(2, -5), 0);
}

TEST(HilbertPolynomial, MatchesHilbertFunctionForLargeM) {
    for (int n = 2; n <= 5; ++n)
        for (long d = 2; d <= 8; ++d)
            for (long m = 2 * d - 1; m <= 2 * d + 6; ++m)
                EXPECT_EQ(hypersurface_hilb(n, d, m), hypersurface_hilbert_function(n, d, m));
}

TEST(HilbertPolynomial, ValueAtDMinusOne) {
    // Agrees with C(d+n, n+1) - 2d + 1 exactly while d <= n + 1.
    for (int n = 2; n <= 4; ++n)
        for (long d = 2; d <= n + 1; ++d) {
            const Integer expected = binom_int(d + n, n + 1) - (2 * d - 1);
            EXPECT_EQ(hypersurface_hilb(n, d, d - 1), expected) << n << " " << d;
            EXPECT_EQ(hypersurface_resolution(n, d).h0_OZ_d_minus_1, expected);
        }
    for (int n = 2; n <= 4; ++n)
        for (long d = 2; d <= 10; ++d)
            EXPECT_EQ(hypersurface_hilbert_function(n, d, d - 1), binom_int(d + n, n + 1) - (2 * d - 1));
}

TEST(HilbertPolynomial, LeadingTermIsDegreeOfZ) {
    for (long d = 2; d <= 10; ++d) {
        EXPECT_EQ(Rational(hilb_difference(4, d, 0, 2)), oracle::deg_Z_hypersurface(d)) << d;
        EXPECT_EQ(Rational(hilb_difference(4, d, 0, 2)), deg_Z(CIConfig{4, {d}, 2}));
        for (int n = 2; n <= 6; ++n)
            EXPECT_EQ(Rational(hilb_difference(n, d, 3, n - 2)), oracle::deg_Z_hypersurface(d)) << n << " " << d;
    }
}

TEST(Resolution, Data) {
    for (int n = 2; n <= 4; ++n)
        for (long d = 2; d <= 10; ++d) {
            auto r = hypersurface_resolution(n, d);
            EXPECT_EQ(r.generator_degree, d - 1);
            EXPECT_EQ(r.generators, 2 * d - 1);
            EXPECT_EQ(r.syzygy_degree, d);
            EXPECT_EQ(r.socle_degree, 2 * d - 1);
            EXPECT_EQ(r.h0_ideal_d_minus_1, 2 * d - 1);
            EXPECT_EQ(r.h0_ideal_d, (n + 1) * (2 * d - 1));
            EXPECT_EQ(r.h0_normal, r.h0_normal_closed);
            EXPECT_EQ(r.h0_normal_closed, (2 * d - 1) * ((n + 2) * (d - 1) - 2 * d + 1));
        }
    EXPECT_EQ(hypersurface_resolution(3, 6).h0_normal, 154);
    EXPECT_THROW(hypersurface_resolution(1, 3), std::invalid_argument);
    EXPECT_THROW(hypersurface_resolution(3, 1), std::invalid_argument);
}

TEST(DimensionCount, Thresholds) {
    auto c = hyper3_dimension_check(4, 3);
    EXPECT_EQ(c.lhs, 60);
    EXPECT_EQ(c.rhs, 59);
    EXPECT_TRUE(c.contradiction);
    c = hyper3_dimension_check(4, 2);
    EXPECT_EQ(c.lhs, 23);
    EXPECT_EQ(c.rhs, 23);
    EXPECT_FALSE(c.contradiction);
    c = hyper3_dimension_check(3, 6);
    EXPECT_EQ(c.lhs, 220);
    EXPECT_EQ(c.rhs, 197);
    c = hyper3_dimension_check(2, 16);
    EXPECT_EQ(c.lhs, 999);
    EXPECT_EQ(c.rhs, 991);
    c = hyper3_dimension_check(2, 15);
    EXPECT_EQ(c.lhs, 844);
    EXPECT_EQ(c.rhs, 869);
    for (long d = 2; d <= 30; ++d) {
        EXPECT_EQ(hyper3_dimension_check(3, d).contradiction, d >= 6) << d;
        EXPECT_EQ(hyper3_dimension_check(4, d).contradiction, d >= 3) << d;
        if (d >= 4) EXPECT_EQ(hyper3_dimension_check(2, d).contradiction, d >= 16) << d;
        for (int n = 2; n <= 4; ++n) {
            auto k = hyper3_dimension_check(n, d);
            EXPECT_EQ(k.rhs, k.rhs_from_parts);
        }
    }
    EXPECT_THROW(hyper3_dimension_check(5, 3), std::invalid_argument);
}
