#include <gtest/gtest.h>

#include "ulrich/appendix.hpp"
#include "ulrich/certificate.hpp"
#include "ulrich/multipoly.hpp"

using namespace ulrich;

namespace {

const Witness& primary(const Certificate& c) {
    for (const auto& w : c.witnesses)
        if (w.primary) return w;
    throw std::logic_error("no primary witness");
}

std::vector<CIConfig> grid(int n_max, long d_max, unsigned s_max) {
    std::vector<CIConfig> out;
    for (int n = 4; n <= n_max; ++n)
        for (long r : {1L, 2L, 3L})
            for (unsigned s = 1; s <= s_max; ++s)
                for (auto t : decreasing_tuples(s, d_max - 1)) {
                    for (auto& v : t) v += 1;
                    out.push_back(CIConfig{n, t, r});
                }
    return out;
}

} // namespace

TEST(Certify, Exceptions) {
    auto q = certify(CIConfig{4, {2}, 2});
    EXPECT_EQ(q.verdict, Verdict::Excluded);
    EXPECT_EQ(q.reason, Reason::QuadricException);
    for (long r : {2L, 3L}) {
        auto c = certify(CIConfig{4, {2, 2}, r});
        EXPECT_EQ(c.verdict, Verdict::Excluded);
        EXPECT_EQ(c.reason, Reason::Type22Exception);
    }
}

TEST(Certify, QuadricInHigherDimension) {
    for (int n = 5; n <= 8; ++n) {
        auto c = certify(CIConfig{n, {2}, 2});
        EXPECT_EQ(c.verdict, Verdict::NonExistence);
        EXPECT_EQ(c.reason, Reason::QPositivity);
        EXPECT_EQ(primary(c).value, Rational(180));
        EXPECT_EQ(primary(c).name, "d*q_{4,8}(2,1,1,1)");
    }
}

TEST(Certify, ParityAndLineBundles) {
    auto c = certify(CIConfig{4, {2}, 3});
    EXPECT_EQ(c.reason, Reason::ParityObstruction);
    EXPECT_EQ(primary(c).value, Rational(3));
    auto l = certify(CIConfig{6, {5, 3}, 1});
    EXPECT_EQ(l.verdict, Verdict::NonExistence);
    EXPECT_EQ(l.reason, Reason::LineBundle);
    EXPECT_EQ(primary(l).value, Rational(15));
}

TEST(Certify, RejectsInvalidInput) {
    EXPECT_THROW(certify(CIConfig{3, {3}, 2}), InvalidConfig);
    EXPECT_THROW(certify(CIConfig{4, {3, 1}, 2}), InvalidConfig);
    EXPECT_THROW(certify(CIConfig{4, {3}, 4}), InvalidConfig);
    EXPECT_THROW(certify(CIConfig{4, {}, 2}), InvalidConfig);
    EXPECT_THROW(certify(CIConfig{4, std::vector<long>(kMaxVars + 1, 2), 2}), InvalidConfig);
}

TEST(Certify, EveryConfigurationOffTheExceptionsIsDecided) {
    for (const auto& cfg : grid(6, 5, 4)) {
        auto c = certify(cfg);
        const bool excluded = cfg.n == 4 && ((cfg.degrees == std::vector<long>{2} && cfg.r == 2) ||
                                             (cfg.degrees == std::vector<long>{2, 2} && cfg.r > 1));
        if (excluded) {
            EXPECT_EQ(c.verdict, Verdict::Excluded);
            continue;
        }
        ASSERT_EQ(c.verdict, Verdict::NonExistence) << degrees_str(cfg.degrees) << " r=" << cfg.r;
        EXPECT_GT(primary(c).value, Rational(0));
    }
}

TEST(Certify, PaddingDoesNotChangeTheVerdict) {
    for (const auto& cfg : grid(5, 4, 3)) {
        auto base = certify(cfg);
        for (unsigned pad = std::max(4u, cfg.s()) + 1; pad <= 7; ++pad) {
            auto padded = certify_padded(cfg, pad);
            EXPECT_EQ(padded.verdict, base.verdict);
            EXPECT_EQ(padded.reason, base.reason);
        }
    }
}

TEST(Certify, DegreeOrderIsIrrelevant) {
    auto a = certify(CIConfig{4, {2, 3, 4}, 2});
    auto b = certify(CIConfig{4, {4, 2, 3}, 2});
    EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST(Certify, BatchKeepsOrderAcrossWorkers) {
    auto configs = grid(5, 4, 3);
    auto one = certify_batch(configs, 1);
    auto four = certify_batch(configs, 4);
    EXPECT_EQ(one, four);
    for (std::size_t i = 0; i < configs.size(); ++i) EXPECT_EQ(one[i].input, configs[i]);
    EXPECT_THROW(certify_batch(configs, 0), InvalidConfig);
    configs.push_back(CIConfig{4, {1, 3}, 2});
    EXPECT_THROW(certify_batch(configs, 2), InvalidConfig);
}

TEST(Certify, JsonRoundTripAndFieldOrder) {
    auto c = certify(CIConfig{5, {3, 2}, 3});
    Json j = to_json(c);
    EXPECT_EQ(certificate_from_json(j), c);
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "family", "input", "verdict", "reason",
                                              "witnesses", "hypotheses", "tool_version"}));
    EXPECT_EQ(to_json(certify(CIConfig{5, {3, 2}, 3})).dump(), j.dump());
}

TEST(Certify, Hypotheses) {
    auto four = certify(CIConfig{4, {3}, 2});
    EXPECT_EQ(four.hypotheses.size(), 2u);
    auto five = certify(CIConfig{5, {3}, 2});
    EXPECT_EQ(five.hypotheses.size(), 1u);
}

TEST(CertifyHypersurface, DimensionCountThresholds) {
    EXPECT_EQ(certify_hypersurface(4, 2).verdict, Verdict::Inconclusive);
    EXPECT_EQ(certify_hypersurface(4, 3).verdict, Verdict::NonExistence);
    EXPECT_EQ(certify_hypersurface(3, 5).verdict, Verdict::Inconclusive);
    EXPECT_EQ(certify_hypersurface(3, 6).verdict, Verdict::NonExistence);
    EXPECT_EQ(certify_hypersurface(2, 15).verdict, Verdict::Inconclusive);
    EXPECT_EQ(certify_hypersurface(2, 16).verdict, Verdict::NonExistence);
    EXPECT_EQ(certify_hypersurface(2, 2).verdict, Verdict::Inconclusive);
    auto five = certify_hypersurface(5, 2);
    EXPECT_EQ(five.family, "hypersurface");
    EXPECT_EQ(primary(five).value, Rational(180));
}
