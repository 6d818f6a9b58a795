#pragma once

// Brute-force references. Nothing here calls the closed forms or the
// block/sandwich machinery: words are built by filling holes of periodic
// patterns, factors are collected from prefixes into std::set.

#include <toeplitz/toeplitz.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using toeplitz::Coding;
using toeplitz::Letter;
using toeplitz::Word;

// First M letters of the limit word: step k writes a_k into every hole
// except each n_k-th one (counting holes from the left).
inline Word hole_filling_prefix(const Coding& c, std::size_t M) {
    std::vector<int> w(M, -1);
    std::vector<std::size_t> holes(M);
    for (std::size_t i = 0; i < M; ++i) holes[i] = i;
    for (std::size_t k = 0; !holes.empty(); ++k) {
        auto e = c.entry(k);
        std::vector<std::size_t> left;
        for (std::size_t i = 0; i < holes.size(); ++i) {
            if (i % e.period == e.period - 1)
                left.push_back(holes[i]);
            else
                w[holes[i]] = e.letter;
        }
        holes.swap(left);
    }
    return Word(w.begin(), w.end());
}

inline std::uint64_t period_product(const Coding& c, std::size_t J) {
    std::uint64_t p = 1;
    for (std::size_t j = 0; j <= J; ++j) p *= c.period(j);
    return p;
}

// {a_j : j >= k}; one full tail cycle past the preperiod shows all of them
inline std::set<Letter> letters_from(const Coding& c, std::size_t k) {
    std::size_t end = std::max(k, c.preperiod().size()) + c.tail_entries().size();
    std::set<Letter> s;
    for (std::size_t j = k; j < end; ++j) s.insert(c.letter(j));
    return s;
}

// Prefix length that is guaranteed to contain every factor of length L:
// |p(J)| with J the first index by which a_{k+1}, a_{k+2}, ... has shown
// every letter that occurs from k+1 on, k the least level with |p(k)|+1 >= L.
inline std::size_t covering_prefix_length(const Coding& c, std::size_t L) {
    std::size_t k = 0;
    while (period_product(c, k) < L) ++k;
    auto want = letters_from(c, k + 1);
    std::set<Letter> seen;
    std::size_t J = k;
    while (seen != want) seen.insert(c.letter(++J));
    return static_cast<std::size_t>(period_product(c, J) - 1);
}

inline std::set<Word> factors(const Word& w, std::size_t L) {
    std::set<Word> s;
    if (w.size() < L) return s;
    for (std::size_t i = 0; i + L <= w.size(); ++i) s.emplace(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + L));
    return s;
}

// nullopt when the covering prefix exceeds `cap`
inline std::optional<std::set<Word>> language(const Coding& c, std::size_t L, std::size_t cap = std::size_t{1} << 20) {
    std::size_t M = covering_prefix_length(c, L);
    if (M > cap) return std::nullopt;
    return factors(hole_filling_prefix(c, M), L);
}

inline bool is_pal(const Word& w) { return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2), w.rbegin()); }

inline std::size_t palindromes(const std::set<Word>& lang) {
    std::size_t n = 0;
    for (auto& w : lang) n += is_pal(w);
    return n;
}

// least Lt such that every length-Lt factor contains all length-L factors,
// by scanning windows of a prefix that covers length-Lt factors
inline std::optional<std::size_t> repetitivity(const Coding& c, std::size_t L, std::size_t cap = std::size_t{1} << 16) {
    auto small = language(c, L, cap);
    if (!small) return std::nullopt;
    for (std::size_t Lt = L;; ++Lt) {
        std::size_t M = covering_prefix_length(c, Lt);
        if (M > cap) return std::nullopt;
        Word w = hole_filling_prefix(c, M);
        bool ok = true;
        for (std::size_t s = 0; ok && s + Lt <= w.size(); ++s) {
            std::set<Word> seen;
            for (std::size_t t = s; t + L <= s + Lt; ++t)
                seen.emplace(w.begin() + static_cast<std::ptrdiff_t>(t), w.begin() + static_cast<std::ptrdiff_t>(t + L));
            ok = seen.size() == small->size();
        }
        if (ok) return Lt;
    }
}

struct BatteryCoding {
    std::string spec;
    Coding coding;
};

// Periodic-tail codings: alphabet of 2..5 letters (all used), n_k in {2,3,4},
// preperiod length <= 3, tail length 2..4. Fixed seed, so the battery is frozen.
inline std::vector<BatteryCoding> random_battery(std::size_t count, std::uint64_t seed = 0x70e91172ull) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::vector<BatteryCoding> out;
    std::set<std::string> seen;
    while (out.size() < count) {
        int s = pick(2, 5), pre = pick(0, 3), tail = pick(2, 4);
        std::vector<int> ls;
        for (int i = 0; i < pre + tail; ++i) {
            int l;
            do l = pick(0, s - 1);
            while (!ls.empty() && ls.back() == l);
            ls.push_back(l);
        }
        if (ls[static_cast<std::size_t>(pre)] == ls.back()) continue;  // tail wraps onto itself
        if (static_cast<int>(std::set<int>(ls.begin(), ls.end()).size()) != s) continue;
        std::string spec;
        for (int i = 0; i < pre + tail; ++i) {
            if (i == pre) spec += spec.empty() ? "| " : " | ";
            else if (i) spec += " ";
            spec += std::string(1, static_cast<char>('a' + ls[static_cast<std::size_t>(i)])) + ":" + std::to_string(pick(2, 4));
        }
        if (!seen.insert(spec).second) continue;
        out.push_back({spec, toeplitz::parse_coding(spec)});
    }
    return out;
}

} // namespace oracle
