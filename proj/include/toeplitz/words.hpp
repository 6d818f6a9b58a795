#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "bigint.hpp"
#include "coding.hpp"

namespace toeplitz {

// |p(k)| = n_0 ... n_k - 1, with |p(-1)| = 0
inline BigInt block_len(const Coding& c, long k) {
    BigInt prod = 1;
    for (long j = 0; j <= k; ++j) prod *= c.period(static_cast<std::size_t>(j));
    return prod - 1;
}

// minimal k >= 0 with |p(k)| + slack >= L
inline std::size_t min_level(const Coding& c, const BigInt& L, int slack) {
    BigInt prod = 1;
    for (std::size_t k = 0;; ++k) {
        prod *= c.period(k);
        if (prod - 1 + slack >= L) return k;
    }
}

// minimal k with |p(k)| + 1 >= L; the level whose p(k) a p(k) words carry language(L)
inline std::size_t cover_level(const Coding& c, std::size_t L) { return min_level(c, BigInt(L), 1); }

struct Block {
    std::size_t k = 0;
    std::shared_ptr<const std::vector<Letter>> storage;
    std::size_t length = 0;

    std::span<const Letter> symbols() const { return {storage->data(), length}; }
    Word word() const { return Word(storage->begin(), storage->begin() + static_cast<std::ptrdiff_t>(length)); }
};

inline Block block(const Coding& c, std::size_t k) {
    BigInt len = block_len(c, static_cast<long>(k));
    if (len > BigInt(c.symbol_budget()))
        fail(ErrorKind::BudgetExceeded, "block p(" + std::to_string(k) + ") has " + len.str() +
                                            " symbols, budget is " + std::to_string(c.symbol_budget()));
    std::size_t n = len.convert_to<std::size_t>();
    auto& cache = c.cache();
    std::lock_guard lock(cache.mu);
    if (cache.empty || cache.level < k) {
        std::vector<Letter> cur;
        std::size_t level;
        if (cache.empty) {
            cur.assign(static_cast<std::size_t>(c.period(0) - 1), c.letter(0));
            level = 0;
        } else {
            cur = *cache.symbols;
            level = cache.level;
        }
        while (level < k) {
            ++level;
            auto e = c.entry(level);
            std::vector<Letter> next;
            next.reserve(cur.size() * e.period + e.period);
            for (Period r = 0; r + 1 < e.period; ++r) {
                next.insert(next.end(), cur.begin(), cur.end());
                next.push_back(e.letter);
            }
            next.insert(next.end(), cur.begin(), cur.end());
            cur = std::move(next);
        }
        cache.symbols = std::make_shared<const std::vector<Letter>>(std::move(cur));
        cache.level = level;
        cache.empty = false;
    }
    return Block{k, cache.symbols, n};
}

// first L symbols of the one-sided limit word
inline Word word_prefix(const Coding& c, std::size_t L) {
    if (L == 0) return {};
    auto k = min_level(c, BigInt(L), 0);
    auto b = block(c, k);
    return Word(b.storage->begin(), b.storage->begin() + static_cast<std::ptrdiff_t>(L));
}

// p(k) a p(k)
inline Word sandwich(const Block& b, Letter a) {
    auto s = b.symbols();
    Word w;
    w.reserve(2 * s.size() + 1);
    w.insert(w.end(), s.begin(), s.end());
    w.push_back(a);
    w.insert(w.end(), s.begin(), s.end());
    return w;
}

struct UndeterminedPart {
    BigInt modulus;
    BigInt offset;
    friend bool operator==(const UndeterminedPart&, const UndeterminedPart&) = default;
};

// U_k = (n_0...n_k) Z + (r_0 + sum_j r_j n_0...n_{j-1})
inline UndeterminedPart undetermined_part(const Coding& c, std::size_t k, const std::vector<std::uint64_t>& r) {
    if (r.size() != k + 1)
        fail(ErrorKind::InvalidShift, "expected " + std::to_string(k + 1) + " shifts, got " + std::to_string(r.size()));
    BigInt mod = 1, off = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        Period n = c.period(j);
        if (r[j] >= n)
            fail(ErrorKind::InvalidShift, "r_" + std::to_string(j) + " = " + std::to_string(r[j]) +
                                              " not in [0, " + std::to_string(n) + ")");
        off += BigInt(r[j]) * mod;
        mod *= n;
    }
    return {mod, off % mod};
}

inline Word reversed(std::span<const Letter> w) { return Word(w.rbegin(), w.rend()); }

inline bool is_palindrome(std::span<const Letter> w) {
    for (std::size_t i = 0, j = w.size(); i + 1 < j; ++i, --j)
        if (w[i] != w[j - 1]) return false;
    return true;
}

} // namespace toeplitz
