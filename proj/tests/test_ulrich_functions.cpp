#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulrich/ci_invariants.hpp"
#include "ulrich/closed_forms.hpp"
#include "ulrich/symmetric.hpp"
#include "ulrich/ulrich_functions.hpp"

using namespace ulrich;

namespace {

Rational at(const MultiPoly& p, std::vector<long> pt) { return p.eval(std::span<const long>(pt)); }

SymExpansion bracket(const MultiPoly& f, const Rational& scale) {
    SymExpansion e = expand_direct(f.divide_all_vars());
    for (auto& c : e.coeffs) c /= scale;
    return e;
}

} // namespace

TEST(BuildF, MatchesLiteralSubsetConstruction) {
    for (unsigned s = 1; s <= 5; ++s)
        for (auto [r, m] : {std::pair{2L, 0L}, {3L, 0L}, {3L, 1L}, {2L, -2L}, {4L, 1L}})
            EXPECT_EQ(build_f(s, r, m), oracle::literal_f(s, r, m)) << "s=" << s << " r=" << r << " m=" << m;
}

TEST(BuildF, DomainChecks) {
    EXPECT_THROW(build_f(0, 2, 0), DimensionError);
    EXPECT_THROW(build_f(kMaxVars + 1, 2, 0), DimensionError);
    EXPECT_THROW(build_f(3, 1, 0), std::invalid_argument);
}

TEST(BuildF, TermCountsAreStable) {
    EXPECT_EQ(build_f(4, 2, 0).size(), 70u);
    EXPECT_EQ(build_f(6, 2, 0).size(), 210u);
}

TEST(BuildA, IsEulerCharacteristicOfX) {
    // a_s(m) at the degrees is chi(O_X(m)) for n = 4.
    for (std::vector<long> degs : {std::vector<long>{2}, {3, 2}, {2, 2, 2}, {4, 3, 1}}) {
        const unsigned s = degs.size();
        for (long m = -3; m <= 3; ++m)
            EXPECT_EQ(at(build_a(s, m), degs), Rational(oracle::koszul_chi_OX(degs, 4, m)));
    }
}

TEST(BuildF, QuadricFourfoldValueIsChiOZ) {
    CIConfig quadric{4, {2}, 2};
    const Rational f = at(build_f(4, 2, 0), {2, 1, 1, 1});
    EXPECT_EQ(f, Rational(chi_OZ(quadric, 0)));
    EXPECT_EQ(f, Rational(1));
}

TEST(BuildF, EvaluationMatchesChiOZOnSamples) {
    for (std::vector<long> degs : {std::vector<long>{2, 2, 2}, {3, 3}, {4, 2, 2, 2}, {3, 2, 2, 1, 1}}) {
        const unsigned s = degs.size();
        for (auto [r, m] : {std::pair{2L, 0L}, {2L, 3L}, {3L, 0L}, {3L, 1L}}) {
            CIConfig cfg{4, degs, r};
            if (parity_obstruction(cfg)) continue;
            EXPECT_EQ(at(build_f(s, r, m), degs), Rational(chi_OZ(cfg, m)));
        }
    }
}

TEST(BuildQ, HandValues) {
    EXPECT_EQ(at(build_q(4, 8), {2, 1, 1, 1}), Rational(90));
    EXPECT_EQ(at(build_q(2, 9), {2, 2}), Rational(300));
    EXPECT_EQ(at(build_q(4, 8), {1, 1, 1, 1}), Rational(0));
    EXPECT_GT(at(build_q(5, 9), {2, 1, 1, 1, 1}), Rational(0));
}

TEST(Gl4, DifferenceAtQuadricPoint) {
    const MultiPoly diff = build_g4(4) - build_f(4, 2, 0);
    EXPECT_EQ(at(diff, {2, 1, 1, 1}), Rational(2) * Rational(90) / Rational(4320));
    EXPECT_EQ(at(diff, {2, 1, 1, 1}), Rational::parse("1/24"));
}

TEST(Delta, IsDegreeOfZForRankThree) {
    CIConfig cfg{4, {2, 2, 3}, 3};
    EXPECT_EQ(at(build_delta(4), {2, 2, 3, 1}), deg_Z(cfg));
    EXPECT_EQ(at(build_delta(4), {2, 2, 3, 1}), deg_Z(cfg.padded_to(4)));
}

TEST(GiFamily, SharedConstructionEqualsSeparateBuilders) {
    GiFamily g = build_gi(5);
    EXPECT_EQ(g.g4, build_g4(5));
    EXPECT_EQ(g.delta, build_delta(5));
    EXPECT_EQ(g.h, build_h(5));
    EXPECT_EQ(g.k, build_k(5));
    EXPECT_EQ(g.c, build_c(5));
    EXPECT_EQ(g.chi_prime, build_chi_prime(5));
}

TEST(ClosedForms, QuotedValues) {
    // (2,0) constant term at s = 4 and the (3,1) m2 coefficient at s = 6.
    EXPECT_EQ(gl1_f20(4)[11], Rational(27861));
    EXPECT_EQ(p4_f20()[11], Rational(27861));
    EXPECT_EQ(p4_f30()[11], Rational(681768));
    EXPECT_EQ(p4_f31()[11], Rational(865128));
    EXPECT_EQ(gl1_f31(6)[8], Rational(439900));
    EXPECT_EQ(bracket(build_f(6, 3, 1), Rational::parse("1/1920")).coeffs[8], Rational(439900));
    EXPECT_EQ(bracket(build_f(4, 2, 0), Rational::parse("1/360")).coeffs[11], Rational(27861));
}

TEST(ClosedForms, PolynomialMatchesBuilder) {
    for (unsigned s = 4; s <= 5; ++s) {
        const auto& forms = gl1_closed_forms();
        EXPECT_EQ(closed_form_polynomial(forms[0], s), build_f(s, 2, 0));
        EXPECT_EQ(closed_form_polynomial(forms[1], s), build_f(s, 3, 0));
        EXPECT_EQ(closed_form_polynomial(forms[2], s), build_f(s, 3, 1));
    }
}
