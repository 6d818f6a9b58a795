#pragma once

#include <algorithm>
#include <cstring>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coding.hpp"
#include "parallel.hpp"
#include "words.hpp"

namespace toeplitz {

struct LanguageSet {
    std::size_t length = 0;
    std::vector<Word> words;  // sorted lexicographically by letter id

    std::size_t size() const { return words.size(); }

    std::optional<std::size_t> index_of(std::span<const Letter> w) const {
        if (w.size() != length) return std::nullopt;
        auto it = std::lower_bound(words.begin(), words.end(), w, [](const Word& a, std::span<const Letter> b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        if (it == words.end() || !std::equal(it->begin(), it->end(), w.begin(), w.end())) return std::nullopt;
        return static_cast<std::size_t>(it - words.begin());
    }
    bool contains(std::span<const Letter> w) const { return index_of(w).has_value(); }
};

namespace detail {

// polynomial hash mod 2^61 - 1
struct RollingHash {
    static constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
    static constexpr std::uint64_t kBase = 0x9e3779b97f4a7c1ull % kMod;

    static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
        __uint128_t r = static_cast<__uint128_t>(a) * b;
        std::uint64_t s = static_cast<std::uint64_t>(r & kMod) + static_cast<std::uint64_t>(r >> 61);
        return s >= kMod ? s - kMod : s;
    }
    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s >= kMod ? s - kMod : s;
    }

    static std::uint64_t pow(std::size_t e) {
        std::uint64_t r = 1, b = kBase;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    static std::uint64_t of(std::span<const Letter> w) {
        std::uint64_t h = 0;
        for (auto x : w) h = add(mul(h, kBase), std::uint64_t{x} + 1);
        return h;
    }

    // hash of every length-L window of text, windows [begin, end)
    static std::vector<std::uint64_t> windows(std::span<const Letter> text, std::size_t L, std::size_t begin,
                                              std::size_t end) {
        std::vector<std::uint64_t> out;
        if (end <= begin) return out;
        out.reserve(end - begin);
        std::uint64_t top = pow(L == 0 ? 0 : L - 1);
        std::uint64_t h = of(text.subspan(begin, L));
        out.push_back(h);
        for (std::size_t s = begin + 1; s < end; ++s) {
            std::uint64_t drop = mul(std::uint64_t{text[s - 1]} + 1, top);
            h = add(h, kMod - drop);
            h = add(mul(h, kBase), std::uint64_t{text[s + L - 1]} + 1);
            out.push_back(h);
        }
        return out;
    }
};

// Exact dedup of equal-length words: hash buckets, byte comparison inside.
class FactorIndex {
public:
    explicit FactorIndex(std::size_t L) : L_(L) {}

    std::uint32_t intern(std::span<const Letter> w, std::uint64_t h) {
        auto& bucket = map_[h];
        for (auto id : bucket)
            if (same(words_[id], w)) return id;
        auto id = static_cast<std::uint32_t>(words_.size());
        words_.emplace_back(w.begin(), w.end());
        bucket.push_back(id);
        return id;
    }
    std::uint32_t intern(std::span<const Letter> w) { return intern(w, RollingHash::of(w)); }

    std::optional<std::uint32_t> find(std::span<const Letter> w, std::uint64_t h) const {
        auto it = map_.find(h);
        if (it == map_.end()) return std::nullopt;
        for (auto id : it->second)
            if (same(words_[id], w)) return id;
        return std::nullopt;
    }
    std::optional<std::uint32_t> find(std::span<const Letter> w) const { return find(w, RollingHash::of(w)); }

    std::size_t size() const { return words_.size(); }
    std::size_t length() const { return L_; }
    const std::vector<Word>& words() const { return words_; }

private:
    static bool same(const Word& a, std::span<const Letter> b) {
        return a.size() == b.size() && (a.empty() || std::memcmp(a.data(), b.data(), a.size()) == 0);
    }

    std::size_t L_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> map_;
    std::vector<Word> words_;
};

// distinct length-L windows over equal-length sources, partitioned over workers
inline FactorIndex distinct_windows(const std::vector<Word>& sources, std::size_t L, unsigned jobs) {
    FactorIndex global(L);
    if (sources.empty()) return global;
    std::size_t n = sources.front().size();
    if (n < L) return global;
    std::size_t per = n - L + 1, total = per * sources.size();
    std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(jobs ? jobs : 1, total));
    std::vector<FactorIndex> locals(parts, FactorIndex(L));
    parallel_chunks(total, static_cast<unsigned>(parts), [&](std::size_t b, std::size_t e, std::size_t p) {
        auto& local = locals[p];
        while (b < e) {
            std::size_t src = b / per, s0 = b % per;
            std::size_t s1 = std::min(per, s0 + (e - b));
            std::span<const Letter> text(sources[src]);
            auto hs = RollingHash::windows(text, L, s0, s1);
            for (std::size_t s = s0; s < s1; ++s) local.intern(text.subspan(s, L), hs[s - s0]);
            b += s1 - s0;
        }
    });
    for (auto& local : locals)
        for (auto& w : local.words()) global.intern(w);
    return global;
}

inline std::vector<Word> sorted_words(const FactorIndex& idx) {
    std::vector<Word> ws = idx.words();
    std::sort(ws.begin(), ws.end());
    return ws;
}

} // namespace detail

// the words p(k) a p(k), a in A_{k+1}, for the minimal k with |p(k)|+1 >= L
inline std::vector<Word> language_sources(const Coding& c, std::size_t L) {
    std::size_t k = cover_level(c, L);
    auto b = block(c, k);
    std::vector<Word> out;
    for (auto a : tail_alphabet(c, k + 1).letters.letters()) out.push_back(sandwich(b, a));
    return out;
}

inline LanguageSet language(const Coding& c, std::size_t L, unsigned jobs = 1) {
    if (L == 0) return {0, {Word{}}};
    auto idx = detail::distinct_windows(language_sources(c, L), L, jobs);
    return {L, detail::sorted_words(idx)};
}

inline std::size_t language_size(const Coding& c, std::size_t L, unsigned jobs = 1) {
    if (L == 0) return 1;
    return detail::distinct_windows(language_sources(c, L), L, jobs).size();
}

// all distinct length-L factors of a finite text
inline LanguageSet factor_set(std::span<const Letter> text, std::size_t L) {
    if (L == 0) return {0, {Word{}}};
    std::vector<Word> src{Word(text.begin(), text.end())};
    return {L, detail::sorted_words(detail::distinct_windows(src, L, 1))};
}

inline LetterSet right_extensions(const Coding& c, std::span<const Letter> u) {
    auto here = language(c, u.size());
    if (!here.contains(u)) fail(ErrorKind::WordNotInLanguage, "word is not a factor of the subshift");
    auto next = language(c, u.size() + 1);
    LetterSet out;
    for (auto& w : next.words)
        if (std::equal(u.begin(), u.end(), w.begin())) out.insert(w.back());
    return out;
}

} // namespace toeplitz
