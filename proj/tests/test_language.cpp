#include <gtest/gtest.h>

#include "support/oracles.hpp"

using namespace toeplitz;

namespace {

std::vector<std::string> rendered(const Coding& c, const LanguageSet& s) {
    std::vector<std::string> out;
    for (auto& w : s.words) out.push_back(c.alphabet().render(w));
    return out;
}

} // namespace

TEST(Language, GrigorchukSmall) {
    auto c = parse_coding("a:2 | x:2 y:2 z:2");
    EXPECT_EQ(language(c, 0).size(), 1u);
    EXPECT_EQ(rendered(c, language(c, 1)), (std::vector<std::string>{"a", "x", "y", "z"}));
    EXPECT_EQ(rendered(c, language(c, 2)), (std::vector<std::string>{"ax", "ay", "az", "xa", "ya", "za"}));
    EXPECT_EQ(rendered(c, language(c, 3)),
              (std::vector<std::string>{"axa", "aya", "aza", "xax", "xay", "xaz", "yax", "zax"}));
}

TEST(Language, MatchesBruteForceOnBattery) {
    std::size_t compared = 0;
    for (auto& b : oracle::random_battery(60)) {
        auto& c = b.coding;
        std::size_t top = static_cast<std::size_t>(oracle::period_product(c, 2));  // |p(2)|+1
        for (std::size_t L = 1; L <= top; ++L) {
            auto ref = oracle::language(c, L);
            if (!ref) continue;
            auto got = language(c, L);
            ASSERT_EQ(got.size(), ref->size()) << b.spec << " L=" << L;
            EXPECT_TRUE(std::equal(got.words.begin(), got.words.end(), ref->begin())) << b.spec << " L=" << L;
            EXPECT_EQ(language_size(c, L), ref->size());
            ++compared;
        }
    }
    EXPECT_GT(compared, 500u);
}

TEST(Language, JobsDoNotChangeResult) {
    auto c = parse_coding("a:3 b:2 | c:4 d:2 c:3 e:2");
    for (std::size_t L : {1, 7, 40, 200}) EXPECT_EQ(language(c, L, 1).words, language(c, L, 8).words);
}

TEST(Language, PrefixOfKappaLevelCoversLanguage) {
    for (auto& b : oracle::random_battery(30)) {
        auto& c = b.coding;
        for (std::size_t L = 1; L <= 20; ++L) {
            std::size_t k = cover_level(c, L);
            auto M = to_size(block_len(c, static_cast<long>(kappa(c, k))));
            if (M > (1u << 22)) continue;
            auto pre = word_prefix(c, M);
            EXPECT_EQ(factor_set(pre, L).words, language(c, L).words) << b.spec << " L=" << L;
        }
    }
}

TEST(Language, ThreeBlockPrefixIsNotEnough) {
    // 3(|p(0)|+1) = 6 letters "axayax" miss az and za
    auto c = parse_coding("a:2 | x:2 y:2 z:2");
    EXPECT_EQ(factor_set(word_prefix(c, 6), 2).size(), 4u);
    EXPECT_EQ(language(c, 2).size(), 6u);
}

TEST(Language, FactorSetAndIndex) {
    auto s = factor_set(Word{0, 1, 0, 1}, 2);
    EXPECT_EQ(s.words, (std::vector<Word>{{0, 1}, {1, 0}}));
    EXPECT_EQ(s.index_of(Word{1, 0}), 1u);
    EXPECT_FALSE(s.index_of(Word{1, 1}));
    EXPECT_FALSE(s.contains(Word{0}));
}

TEST(Language, RightExtensions) {
    auto c = parse_coding("a:2 | x:2 y:2 z:2");
    auto& abc = c.alphabet();
    EXPECT_EQ(right_extensions(c, *abc.parse_word("a")).size(), 3u);
    auto xs = right_extensions(c, *abc.parse_word("x")).letters();
    ASSERT_EQ(xs.size(), 1u);
    EXPECT_EQ(abc.name(xs[0]), "a");
    try {
        right_extensions(c, *abc.parse_word("xx"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::WordNotInLanguage);
    }
}

TEST(Language, BlockSuffixExtendsByWholeTailAlphabet) {
    for (auto& b : oracle::random_battery(40)) {
        auto& c = b.coding;
        for (std::size_t k = 1; k <= 2; ++k) {
            auto Pk = to_size(block_len(c, static_cast<long>(k))), P1 = to_size(block_len(c, static_cast<long>(k) - 1));
            std::size_t len = Pk - P1 - 1;
            if (len == 0 || Pk > 5000) continue;
            auto blk = block(c, k).word();
            Word suf(blk.end() - static_cast<std::ptrdiff_t>(len), blk.end());
            EXPECT_EQ(right_extensions(c, suf).size(), tail_alphabet(c, k).letters.size()) << b.spec << " k=" << k;
        }
    }
}
