#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toeplitz;

namespace {

const Coding& grig() {
    static Coding c = parse_coding("a:2 | x:2 y:2 z:2");
    return c;
}

// periodicity of the product sequence from `start` (1-based i) with `per`, checked over `reps` extra cycles
bool periodic_products(const Coding& c, std::size_t start, std::size_t per, std::size_t reps) {
    auto ws = bosh_products(c, start + (reps + 1) * per);
    for (std::size_t i = start; i + per <= ws.size(); ++i)
        if (ws[i - 1].product != ws[i - 1 + per].product) return false;
    return true;
}

} // namespace

TEST(Bosh, GrigorchukProductsAreTwo) {
    auto ws = bosh_products(grig(), 10);
    ASSERT_EQ(ws.size(), 10u);
    for (auto& w : ws) {
        EXPECT_EQ(w.product, 2);
        EXPECT_EQ(w.kappa_prev - 1, w.m + 1);
    }
    auto v = bosh_verdict(grig(), 8);
    EXPECT_EQ(v.verdict, Verdict::Satisfied);
    EXPECT_EQ(v.kind, VerdictKind::Exact);
    ASSERT_TRUE(v.liminf);
    EXPECT_TRUE(v.liminf->agrees);
    EXPECT_EQ(v.liminf->liminf, 2u);
    ASSERT_TRUE(v.power_of_two);
    EXPECT_TRUE(v.power_of_two->matches_products);
}

TEST(Bosh, TwoLetterCodingIsSatisfied) {
    auto c = parse_coding("| x:2 y:3");
    for (auto& w : bosh_products(c, 6)) EXPECT_EQ(w.product, 1);
    EXPECT_EQ(bosh_verdict(c, 6).verdict, Verdict::Satisfied);
}

TEST(Bosh, LiuQuStrictlyIncreasing) {
    auto c = parse_coding(preset_spec("liuqu"));
    auto v = bosh_verdict(c, 8);
    EXPECT_EQ(v.kind, VerdictKind::HorizonEstimate);
    EXPECT_EQ(v.verdict, Verdict::Inconclusive);
    EXPECT_EQ(v.trend, Trend::Increasing);
    const std::vector<int> want = {16, 64, 256, 1024, 4096, 16384, 65536, 262144};
    ASSERT_EQ(v.witness.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(v.witness[i].product, want[i]);
    ASSERT_TRUE(v.power_of_two);
    EXPECT_TRUE(v.power_of_two->matches_products);
}

TEST(Bosh, LiuQuIncreasingWithOtherPeriods) {
    for (auto periods : {std::vector<Period>{3}, std::vector<Period>{2, 5}, std::vector<Period>{4, 2, 3}}) {
        ParseOptions opt;
        opt.periods = periods;
        auto c = parse_coding("| @liuqu", opt);
        auto ws = bosh_products(c, 12);
        for (std::size_t i = 1; i < ws.size(); ++i) EXPECT_LT(ws[i - 1].product, ws[i].product);
        EXPECT_EQ(bosh_verdict(c, 12).verdict, Verdict::Inconclusive);
    }
}

TEST(Bosh, GeneratorHorizonExceeded) {
    ParseOptions opt;
    opt.generator_horizon = 60;
    auto c = parse_coding("| @liuqu", opt);
    try {
        bosh_products(c, 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HorizonExceeded);
    }
}

TEST(Bosh, BatteryAlwaysSatisfiedWithPeriodicWitness) {
    std::size_t three = 0;
    for (auto& b : oracle::random_battery(60)) {
        auto v = bosh_verdict(b.coding, 8);
        EXPECT_EQ(v.verdict, Verdict::Satisfied) << b.spec;
        EXPECT_EQ(v.kind, VerdictKind::Exact) << b.spec;
        ASSERT_TRUE(v.period) << b.spec;
        EXPECT_TRUE(periodic_products(b.coding, v.period->start, v.period->period, 4)) << b.spec;
        if (b.coding.eventual_alphabet().size() == 3) {
            ++three;
            ASSERT_TRUE(v.liminf);
            EXPECT_TRUE(v.liminf->agrees) << b.spec;
            EXPECT_TRUE(v.liminf->liminf) << b.spec;
        } else {
            EXPECT_FALSE(v.liminf);
        }
        if (v.power_of_two) EXPECT_TRUE(v.power_of_two->matches_products) << b.spec;
    }
    EXPECT_GT(three, 0u);
}

TEST(Bosh, PowerOfTwoWindows) {
    auto c = parse_coding("a:4 | x:2 y:8 z:2 x:4 y:2 z:2");
    auto v = bosh_verdict(c, 10);
    ASSERT_TRUE(v.power_of_two);
    EXPECT_TRUE(v.power_of_two->matches_products);
    EXPECT_FALSE(bosh_verdict(parse_coding("a:2 | x:3 y:2 z:2"), 6).power_of_two);
}

TEST(Bosh, ConstantSubsequenceDetection) {
    EXPECT_TRUE(detail::constant_subsequence_detected(std::vector<int>{5, 1, 7, 1, 9, 1}));
    EXPECT_FALSE(detail::constant_subsequence_detected(std::vector<int>{1, 2, 3, 4, 5, 6}));
    EXPECT_FALSE(detail::constant_subsequence_detected(std::vector<int>{1, 1, 1, 4, 5, 6, 7, 8}));
}

TEST(Eta, GrigorchukLetterZ) {
    auto est = estimate_eta(grig(), 1, std::size_t{1} << 20, 4);
    double f = est.min_frequency.convert_to<double>();
    EXPECT_NEAR(f, 1.0 / 14.0, 0.1 / 14.0);
    EXPECT_EQ(grig().alphabet().render(est.argmin), "z");
    EXPECT_EQ(est.language_size, 4u);
}

TEST(Eta, EmptyWordHasFrequencyOne) {
    EXPECT_EQ(estimate_eta(grig(), 0, 10).min_frequency, 1);
}

TEST(Eta, PrefixTooShort) {
    try {
        estimate_eta(grig(), 8, 50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrefixTooShort);
    }
}

TEST(Eta, ScaledStaysAwayFromZero) {
    for (std::size_t k = 0; k <= 5; ++k) {
        std::size_t L = std::size_t{1} << k;
        auto est = estimate_eta(grig(), L, std::size_t{1} << 20, 4);
        double scaled = static_cast<double>(L) * est.min_frequency.convert_to<double>();
        EXPECT_GT(scaled, 0.05) << "L=" << L;
        // envelope: min frequency is at most the uniform share plus slack
        EXPECT_LE(est.min_frequency.convert_to<double>(), 1.0 / static_cast<double>(est.language_size) + 1e-3);
    }
}

TEST(Eta, JobsDoNotChangeResult) {
    auto a = estimate_eta(grig(), 5, 100000, 1), b = estimate_eta(grig(), 5, 100000, 8);
    EXPECT_EQ(a.min_frequency, b.min_frequency);
    EXPECT_EQ(a.argmin, b.argmin);
}
