#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toeplitz;

namespace {

ErrorKind kind_of(const std::string& spec) {
    try {
        parse_coding(spec);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for '" << spec << "'";
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST(Coding, GrigorchukParses) {
    auto c = parse_coding("a:2 | x:2 y:2 z:2");
    EXPECT_EQ(c.alphabet().size(), 4u);
    EXPECT_EQ(c.preperiod().size(), 1u);
    EXPECT_EQ(c.tail_entries().size(), 3u);
    EXPECT_TRUE(c.periodic());
    EXPECT_EQ(c.describe(), "a:2 | x:2 y:2 z:2");
    EXPECT_EQ(c.eventual_alphabet().size(), 3u);
    EXPECT_EQ(c.eventual_index(), 1u);
    EXPECT_EQ(c.alphabet().name(c.letter(7)), "x");
}

TEST(Coding, NormalizeWrapExample) {
    EXPECT_EQ(parse_coding("a:2 | x:2 y:2 x:3").describe(), "a:2 x:2 y:2 | x:6 y:2");
}

TEST(Coding, NormalizeMergesRuns) {
    EXPECT_EQ(parse_coding("a:2 a:3 | x:2 y:2").describe(), "a:6 | x:2 y:2");
    EXPECT_EQ(parse_coding("x:2 | x:3 y:2").describe(), "x:6 | y:2 x:3");
    EXPECT_EQ(parse_coding("| x:2 y:2 y:2").describe(), "| x:2 y:4");
}

TEST(Coding, NormalizeIsIdempotentOnBattery) {
    for (auto& b : oracle::random_battery(60)) {
        EXPECT_EQ(b.coding.describe(), b.spec);
        EXPECT_EQ(parse_coding(b.coding.describe()).describe(), b.spec);
    }
}

TEST(Coding, ErrorKinds) {
    EXPECT_EQ(kind_of("a:2 | x:2"), ErrorKind::AllLettersEqual);
    EXPECT_EQ(kind_of("| x:2 x:3"), ErrorKind::AllLettersEqual);
    EXPECT_EQ(kind_of("|"), ErrorKind::EmptyCoding);
    EXPECT_EQ(kind_of("a:1 | x:2 y:2"), ErrorKind::Parse);
    EXPECT_EQ(kind_of("a:2 x:2 y:2"), ErrorKind::Parse);
    EXPECT_EQ(kind_of("a:2 | x y"), ErrorKind::Parse);
    EXPECT_EQ(kind_of("a:2 | @nope"), ErrorKind::Parse);
    EXPECT_EQ(kind_of("a:2 | | x:2"), ErrorKind::Parse);
}

TEST(Coding, ValidatedRejectsUnnormalized) {
    auto raw = parse_raw("a:2 a:2 | x:2 y:2");
    try {
        Coding::validated(raw);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidCoding);
    }
}

TEST(Coding, MultiCharLetters) {
    auto c = parse_coding("s0:2 | t1:2 t2:3");
    EXPECT_FALSE(c.alphabet().single_char_names());
    EXPECT_EQ(c.alphabet().render(word_prefix(c, 4)), "s0 t1 s0 t2");
}

TEST(Coding, EventualIndex) {
    auto c = parse_coding("x:2 a:2 | x:2 y:2");
    EXPECT_EQ(c.eventual_index(), 2u);
    EXPECT_EQ(tail_alphabet(c, 0).letters.size(), 3u);
    EXPECT_EQ(tail_alphabet(c, 2).letters.size(), 2u);
}

TEST(Kappa, Grigorchuk) {
    auto c = parse_coding("a:2 | x:2 y:2 z:2");
    for (std::size_t k = 0; k < 20; ++k) EXPECT_EQ(kappa(c, k), k + 3);
    auto m = m_sequence_prefix(c, 10);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], i);
}

TEST(Kappa, LiuQuScan) {
    auto c = parse_coding(preset_spec("liuqu"));
    EXPECT_FALSE(c.periodic());
    // a b c a b a b d a b a b a b c ...
    EXPECT_EQ(c.alphabet().render(std::vector<Letter>{c.letter(0), c.letter(1), c.letter(2), c.letter(7), c.letter(8)}),
              "abcda");
    EXPECT_EQ(kappa(c, 0), 7u);
    EXPECT_EQ(kappa(c, 8), 23u);  // start of (ab)^3 -> the d after it
    EXPECT_EQ(c.alphabet().name(c.letter(23)), "d");
    std::vector<std::size_t> want{0, 2, 7, 14, 23, 34, 47, 62, 79};
    EXPECT_EQ(m_sequence_prefix(c, want.size()), want);
}

TEST(Kappa, BruteForceOnBattery) {
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        for (std::size_t k = 0; k < 12; ++k) {
            auto want = oracle::letters_from(c, k + 1);
            std::set<Letter> seen;
            std::size_t j = k;
            while (seen != want) seen.insert(c.letter(++j));
            EXPECT_EQ(kappa(c, k), j) << b.spec << " k=" << k;
        }
    }
}

TEST(Kappa, MSequenceWhenLettersDropOut) {
    // c leaves the alphabet after a_1, so kappa(0) = kappa(1) = kappa(2) = 5
    auto c = parse_coding("a:3 c:2 | b:4 a:2 b:2 d:2");
    EXPECT_EQ(m_sequence_prefix(c, 5), (std::vector<std::size_t>{0, 3, 5, 7, 9}));
}

TEST(Kappa, MSequenceMatchesGrowthPointsOnBattery) {
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        auto ms = m_sequence_prefix(c, 6);
        std::set<std::size_t> mset(ms.begin(), ms.end());
        for (std::size_t k = 1; k <= ms.back(); ++k) {
            bool grows = kappa(c, k) > kappa(c, k - 1);
            EXPECT_EQ(grows, mset.count(k) == 1) << b.spec << " k=" << k;
            EXPECT_EQ(c.letter(k) == c.letter(kappa(c, k)), grows) << b.spec << " k=" << k;
        }
    }
}

TEST(Generator, HorizonIsEnforced) {
    ParseOptions opt;
    opt.generator_horizon = 50;
    auto c = parse_coding("| @liuqu", opt);
    EXPECT_EQ(c.horizon(), 50u);
    EXPECT_NO_THROW(c.entry(49));
    try {
        c.entry(50);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::HorizonExceeded);
    }
}

TEST(Generator, LiuQuPeriodsCycle) {
    ParseOptions opt;
    opt.periods = {2, 3};
    auto c = parse_coding("| @liuqu", opt);
    EXPECT_EQ(c.period(0), 2u);
    EXPECT_EQ(c.period(1), 3u);
    EXPECT_EQ(c.period(2), 2u);
}

TEST(Generator, TowerSquares) {
    auto c = parse_coding("| @tower(2, 2, 3)");
    EXPECT_EQ(c.period(0), 2u);
    EXPECT_EQ(c.period(1), 4u);
    EXPECT_EQ(c.period(2), 16u);
    EXPECT_EQ(c.period(3), 256u);
    EXPECT_EQ(c.eventual_alphabet().size(), 3u);
}

TEST(Presets, LGrigorchuk) {
    EXPECT_EQ(preset_spec("l-grigorchuk(1,2)"), "a:2 | x:2 y:4 z:2 x:4 y:2 z:4");
    EXPECT_EQ(preset_spec("l-grigorchuk(1)"), "a:2 | x:2 y:2 z:2");
    EXPECT_THROW(preset_spec("l-grigorchuk()"), Error);
    EXPECT_THROW(preset_spec("nope"), Error);
}

TEST(EventualPeriod, Detect) {
    auto p = detect_eventual_period(std::vector<int>{5, 1, 2, 3, 1, 2, 3, 1, 2});
    ASSERT_TRUE(p);
    EXPECT_EQ(p->start, 1u);
    EXPECT_EQ(p->period, 3u);
    EXPECT_FALSE(detect_eventual_period(std::vector<int>{1, 2, 3, 4}));
}
