#include <gtest/gtest.h>

#include "ulrich/appendix.hpp"
#include "ulrich/multipoly.hpp"

using namespace ulrich;

TEST(Tf0Tf1, SmallGrid) {
    for (unsigned s = 1; s <= 5; ++s)
        for (auto [r, m] : {std::pair{2L, 0L}, {3L, 0L}, {3L, 1L}}) {
            EXPECT_TRUE(verify_tf0(s, r, m).passed()) << s << " " << r << " " << m;
            EXPECT_TRUE(verify_tf1(s, r, m).passed()) << s << " " << r << " " << m;
        }
}

TEST(Gl1, CoefficientCounts) {
    Report at4 = verify_gl1(4);
    EXPECT_TRUE(at4.passed());
    EXPECT_EQ(at4.checks.size(), 72u);
    Report at5 = verify_gl1(5);
    EXPECT_TRUE(at5.passed());
    EXPECT_THROW(verify_gl1(3), DimensionError);
}

TEST(Gl2, CoefficientAndPolynomialModes) {
    Report r = verify_gl2(5);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.checks.size(), 72u);
    for (unsigned s = 1; s <= 3; ++s) {
        Report small = verify_gl2(s);
        EXPECT_TRUE(small.passed()) << s;
        EXPECT_EQ(small.parameters["mode"], "polynomial");
    }
}

TEST(Gl4, Identities) {
    for (unsigned s = 4; s <= 6; ++s) EXPECT_TRUE(verify_gl4(s).passed()) << s;
}

TEST(Tf2bis, RandomRoundTripsAreDeterministic) {
    Report a = verify_tf2bis(5, 20, 99), b = verify_tf2bis(5, 20, 99);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a, b);
    EXPECT_THROW(verify_tf2bis(4), DimensionError);
}

TEST(DecreasingTuples, CountAndOrder) {
    auto t = decreasing_tuples(3, 4);
    EXPECT_EQ(t.size(), 20u); // C(4+3-1, 3)
    EXPECT_EQ(t.front(), (std::vector<long>{1, 1, 1}));
    EXPECT_EQ(t.back(), (std::vector<long>{4, 4, 4}));
    for (std::size_t i = 1; i < t.size(); ++i) EXPECT_LT(t[i - 1], t[i]);
    for (const auto& v : t) EXPECT_TRUE(std::is_sorted(v.rbegin(), v.rend()));
}

TEST(CgScan, NoViolationsAndMinimaAtTheQuadricPoint) {
    ScanOptions o;
    o.s_max = 5;
    o.d_max = 5;
    ScanResult r = run_cg_scan(o);
    EXPECT_TRUE(r.violations.empty());
    for (const auto& row : r.rows) {
        EXPECT_EQ(row.all_ones_value, Rational(0));
        EXPECT_GT(row.min_value, Rational(0));
        EXPECT_EQ(row.argmin.front(), 2);
    }
}

TEST(CgScan, WorkerCountDoesNotChangeResult) {
    ScanOptions o;
    o.s_max = 5;
    o.d_max = 5;
    o.keep_values = true;
    ScanResult one = run_cg_scan(o);
    o.workers = 3;
    ScanResult three = run_cg_scan(o);
    ASSERT_EQ(one.values.size(), three.values.size());
    for (std::size_t i = 0; i < one.values.size(); ++i) {
        EXPECT_EQ(one.values[i].tuple, three.values[i].tuple);
        EXPECT_EQ(one.values[i].value, three.values[i].value);
    }
    EXPECT_EQ(scan_report(one), scan_report(three));
}

TEST(CgScan, RejectsBadOptions) {
    ScanOptions o;
    o.s_min = 1;
    EXPECT_THROW(run_cg_scan(o), std::invalid_argument);
    o = ScanOptions{};
    o.workers = 0;
    EXPECT_THROW(run_cg_scan(o), std::invalid_argument);
    o = ScanOptions{};
    o.d_max = 1;
    EXPECT_THROW(run_cg_scan(o), std::invalid_argument);
}

TEST(CgInduction, RecursionHolds) {
    for (unsigned s = 2; s <= 4; ++s)
        for (long b : {8L, 9L}) EXPECT_TRUE(verify_cg_induction(s, b).passed()) << s << " " << b;
}

TEST(ReportJson, RoundTrip) {
    Report r = verify_gl4(4);
    EXPECT_EQ(report_from_json(to_json(r)), r);
    EXPECT_EQ(to_json(r)["status"], "pass");
}
