#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toeplitz;

namespace {

const Coding& grig() {
    static Coding c = parse_coding("a:2 | x:2 y:2 z:2");
    return c;
}

// frozen from the set-based oracle
const std::vector<int> kGrigorchuk = {1,  4,  6,  8,  10, 13, 16, 18, 20, 23, 26, 29, 32, 34, 36, 38, 40,
                                      43, 46, 49, 52, 55, 58, 61, 64, 66, 68, 70, 72, 74, 76, 78, 80, 83};

} // namespace

TEST(Complexity, GrigorchukFrozen) {
    for (std::size_t L = 0; L < kGrigorchuk.size(); ++L) {
        EXPECT_EQ(complexity_formula(grig(), L), kGrigorchuk[L]) << "L=" << L;
        EXPECT_EQ(language_size(grig(), L), static_cast<std::size_t>(kGrigorchuk[L])) << "L=" << L;
    }
}

TEST(Complexity, GrigorchukBranches) {
    auto p = [](int L) { return complexity_formula(grig(), static_cast<std::size_t>(L)); };
    EXPECT_EQ(p(1), 3 * 1 + 1);
    EXPECT_EQ(p(2), 3 * 2);
    EXPECT_EQ(p(3), 2 * 3 + 2);
    for (int k = 2; k <= 3; ++k) {
        int lo = 1 << k, mid = 3 << (k - 1), hi = (1 << (k + 1)) - 1;  // 2^k .. 3*2^(k-1) .. 2^(k+1)-1
        for (int L = lo; L <= mid; ++L) EXPECT_EQ(p(L), 3 * L - (1 << k) + (1 << (k - 1))) << "k=" << k << " L=" << L;
        for (int L = mid + 1; L <= hi; ++L) EXPECT_EQ(p(L), 2 * L + (1 << k)) << "k=" << k << " L=" << L;
    }
}

TEST(Complexity, OracleOnBatteryToLevelThree) {
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        std::size_t top = static_cast<std::size_t>(oracle::period_product(c, 3));  // |p(3)|+1
        for (std::size_t L = 0; L <= top; ++L)
            ASSERT_EQ(complexity_formula(c, L), BigInt(language_size(c, L))) << b.spec << " L=" << L;
    }
}

TEST(Complexity, GrowthTelescopes) {
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        BigInt acc = 1;
        std::size_t top = static_cast<std::size_t>(oracle::period_product(c, 3));
        for (std::size_t L = 0; L <= top; ++L) {
            ASSERT_EQ(complexity_formula(c, L), acc) << b.spec << " L=" << L;
            acc += growth_formula(c, L);
        }
    }
}

TEST(Complexity, GrowthExamples) {
    EXPECT_EQ(growth_formula(grig(), 0), 3);
    EXPECT_EQ(growth_formula(grig(), 1), 2);
    EXPECT_EQ(growth_formula(grig(), 4), 3);
    auto c = parse_coding("a:3 b:2 | c:2 d:3");
    EXPECT_EQ(growth_formula(c, 0), 3);  // |A_0| - 1 below |p(0)|
    EXPECT_EQ(growth_formula(c, 1), 3);
}

TEST(Complexity, Checkpoints) {
    EXPECT_EQ(checkpoint_complexity(grig(), 0), 6);
    EXPECT_EQ(checkpoint_complexity(grig(), 2), 20);
    auto two = parse_coding("| x:2 y:2");
    for (std::size_t k = 0; k < 8; ++k) {
        BigInt want = block_len(two, static_cast<long>(k)) + 1 + block_len(two, static_cast<long>(k) - 1) + 1;
        EXPECT_EQ(checkpoint_complexity(two, k), want);
        if (k < 5) EXPECT_EQ(want, BigInt(language_size(two, to_size(block_len(two, static_cast<long>(k))) + 1)));
    }
    for (auto& b : oracle::random_battery(60))
        for (std::size_t k = 0; k <= 3; ++k)
            EXPECT_EQ(checkpoint_complexity(b.coding, k),
                      complexity_formula(b.coding, to_size(block_len(b.coding, static_cast<long>(k))) + 1))
                << b.spec << " k=" << k;
}

TEST(Complexity, EventualFormAgrees) {
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        for (std::size_t k = c.eventual_index() + 1; k <= c.eventual_index() + 3; ++k) {
            auto lo = to_size(block_len(c, static_cast<long>(k) - 1)) + 2, hi = to_size(block_len(c, static_cast<long>(k))) + 1;
            if (hi > 20000) break;
            for (std::size_t L = lo; L <= hi; ++L)
                ASSERT_EQ(complexity_eventual_form(c, L), complexity_formula(c, L)) << b.spec << " L=" << L;
        }
    }
    EXPECT_THROW(complexity_eventual_form(grig(), 1), Error);
}

TEST(Complexity, QuotientExtrema) {
    auto q = quotient_extrema(grig(), 2);
    EXPECT_EQ(q.max_value, Rational(8, 3));
    EXPECT_EQ(q.argmax_L, 6);
    EXPECT_EQ(Rational(complexity_formula(grig(), 6), 6), Rational(8, 3));
    EXPECT_EQ(quotient_extrema(grig(), 5).max_value, Rational(3) - Rational(1, 3));
    EXPECT_THROW(quotient_extrema(grig(), 0), Error);

    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        Rational aev = Rational(BigInt(c.eventual_alphabet().size()));
        for (std::size_t k = c.eventual_index() + 1; k <= c.eventual_index() + 3; ++k) {
            auto lo = to_size(block_len(c, static_cast<long>(k) - 1)) + 2, hi = to_size(block_len(c, static_cast<long>(k))) + 1;
            if (hi > 20000) break;
            auto qe = quotient_extrema(c, k);
            Rational best = 0;
            BigInt arg = 0;
            for (std::size_t L = lo; L <= hi; ++L) {
                Rational r(complexity_formula(c, L), BigInt(L));
                EXPECT_LT(aev - 1, r) << b.spec << " L=" << L;
                EXPECT_LE(r, aev - Rational(1, 3)) << b.spec << " L=" << L;
                EXPECT_GE(r, qe.min_lower_bound) << b.spec << " L=" << L;
                if (r > best) {
                    best = r;
                    arg = L;
                }
            }
            EXPECT_EQ(best, qe.max_value) << b.spec << " k=" << k;
            EXPECT_EQ(arg, qe.argmax_L) << b.spec << " k=" << k;
        }
    }
}

TEST(Complexity, ProfileWithOracle) {
    auto recs = complexity_profile(grig(), 33, true, 4);
    ASSERT_EQ(recs.size(), 34u);
    for (auto& r : recs) {
        ASSERT_TRUE(r.oracle);
        EXPECT_EQ(r.formula, BigInt(*r.oracle));
    }
}
