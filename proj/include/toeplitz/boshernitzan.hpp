#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coding.hpp"
#include "language.hpp"
#include "parallel.hpp"
#include "verdict.hpp"
#include "words.hpp"

namespace toeplitz {

struct BoshWitness {
    std::size_t i = 0;
    std::size_t m = 0;           // m_i
    std::size_t kappa_prev = 0;  // kappa(m_i - 1)
    BigInt product;              // prod_{j = m_i+1}^{kappa(m_i-1)-1} n_j
};

inline std::vector<BoshWitness> bosh_products(const Coding& c, std::size_t horizon) {
    auto ms = m_sequence_prefix(c, horizon + 1);
    std::vector<BoshWitness> out;
    for (std::size_t i = 1; i < ms.size(); ++i) {
        BoshWitness w;
        w.i = i;
        w.m = ms[i];
        w.kappa_prev = kappa(c, ms[i] - 1);
        w.product = 1;
        for (std::size_t j = w.m + 1; j < w.kappa_prev; ++j) w.product *= c.period(j);
        out.push_back(std::move(w));
    }
    return out;
}

struct LiminfCheck {
    std::vector<Period> values;         // n_{m_i + 1}
    std::optional<Period> liminf;       // exact, periodic tails: min over one m-cycle
    Verdict verdict = Verdict::Inconclusive;
    bool agrees = false;
};

// revisit windows in the letter sequence before merging (n_k = 2^{j_k}):
// C_i = min C with {b_t..b_{t+C}} = {b_s : s >= t}, t the last copy of a_{m_i}
struct PowerOfTwoCheck {
    std::vector<std::size_t> windows;
    bool matches_products = false;
};

struct BoshVerdict {
    Verdict verdict = Verdict::Inconclusive;
    VerdictKind kind = VerdictKind::Exact;
    std::vector<BoshWitness> witness;
    std::optional<EventualPeriod> period;
    Trend trend = Trend::Mixed;
    std::optional<LiminfCheck> liminf;
    std::optional<PowerOfTwoCheck> power_of_two;
    std::string reason;
};

namespace detail {

// first (i0, i1) with m_{i0} = m_{i1} mod T, both past the preperiod (+1)
inline std::pair<std::size_t, std::size_t> m_cycle(const Coding& c) {
    const std::size_t T = c.tail_entries().size(), pre = c.preperiod().size();
    std::map<std::size_t, std::size_t> seen;
    std::size_t i = 0, m = 0;
    while (true) {
        if (m >= pre + 1) {
            auto [it, fresh] = seen.emplace(m % T, i);
            if (!fresh) return {it->second, i};
        }
        m = m_next(c, m);
        ++i;
    }
}

// some value recurs at least three times, the last time in the second half
template <class T>
bool constant_subsequence_detected(const std::vector<T>& s) {
    for (std::size_t a = 0; a < s.size(); ++a) {
        std::size_t hits = 0, last = 0;
        for (std::size_t b = a; b < s.size(); ++b)
            if (s[b] == s[a]) {
                ++hits;
                last = b;
            }
        if (hits >= 3 && 2 * last >= s.size()) return true;
    }
    return false;
}

inline bool power_of_two(Period n) { return n && !(n & (n - 1)); }

inline std::optional<PowerOfTwoCheck> power_of_two_windows(const Coding& c, const std::vector<BoshWitness>& ws) {
    if (ws.empty()) return std::nullopt;
    std::size_t last = 0;
    for (auto& w : ws) last = std::max(last, w.kappa_prev);
    for (std::size_t k = 0; k <= last; ++k)
        if (!power_of_two(c.period(k))) return std::nullopt;
    // unexpanded sequence b: a_k repeated log2(n_k) times
    std::vector<Letter> b;
    std::vector<std::size_t> last_copy(last + 1);
    for (std::size_t k = 0; k <= last; ++k) {
        auto reps = static_cast<std::size_t>(std::countr_zero(c.period(k)));
        b.insert(b.end(), reps, c.letter(k));
        last_copy[k] = b.size() - 1;
    }
    PowerOfTwoCheck pc;
    pc.matches_products = true;
    for (auto& w : ws) {
        std::size_t t = last_copy[w.m];
        auto target = tail_alphabet(c, w.m).letters;
        LetterSet seen;
        std::size_t C = 0;
        for (std::size_t s = t;; ++s) {
            seen.insert(b.at(s));
            if (seen.size() == target.size()) {
                C = s - t;
                break;
            }
        }
        pc.windows.push_back(C);
        std::size_t log2p = 0;
        for (std::size_t j = w.m + 1; j < w.kappa_prev; ++j) log2p += static_cast<std::size_t>(std::countr_zero(c.period(j)));
        if (C != log2p + 1) pc.matches_products = false;
    }
    return pc;
}

} // namespace detail

inline BoshVerdict bosh_verdict(const Coding& c, std::size_t horizon) {
    BoshVerdict v;
    v.witness = bosh_products(c, horizon);
    const bool three = c.eventual_alphabet().size() == 3;

    if (c.periodic()) {
        v.kind = VerdictKind::Exact;
        auto [i0, i1] = detail::m_cycle(c);
        if (v.witness.size() < i1) v.witness = bosh_products(c, i1);
        v.period = EventualPeriod{i0, i1 - i0};
        v.verdict = Verdict::Satisfied;
        v.reason = "products are eventually periodic with period " + std::to_string(i1 - i0) +
                   " in i from i = " + std::to_string(i0) + ", so a bounded subsequence exists";
    } else {
        v.kind = VerdictKind::HorizonEstimate;
        std::vector<BigInt> ps;
        for (auto& w : v.witness) ps.push_back(w.product);
        if (c.eventual_alphabet().size() == 2) {
            v.verdict = Verdict::Satisfied;
            v.reason = "two eventual letters: the products are empty from some index on";
        } else if (detail::constant_subsequence_detected(ps)) {
            v.verdict = Verdict::Satisfied;
            v.reason = "a constant-value subsequence recurs within the horizon";
        } else {
            v.verdict = Verdict::Inconclusive;
            v.reason = "no recurring product value within horizon " + std::to_string(v.witness.size());
        }
    }
    std::vector<BigInt> ps;
    for (auto& w : v.witness) ps.push_back(w.product);
    v.trend = trend_of(ps);

    if (three) {
        LiminfCheck lc;
        for (auto& w : v.witness) lc.values.push_back(c.period(w.m + 1));
        if (c.periodic()) {
            // n_{m_i+1} repeats with the m-cycle, so its liminf is the cycle minimum
            auto [i0, i1] = detail::m_cycle(c);
            auto ms = m_sequence_prefix(c, i1 + 1);
            for (std::size_t i = std::max<std::size_t>(i0, 1); i < i1; ++i) {
                Period n = c.period(ms[i] + 1);
                if (!lc.liminf || n < *lc.liminf) lc.liminf = n;
            }
            lc.verdict = lc.liminf ? Verdict::Satisfied : Verdict::Inconclusive;
        } else
            lc.verdict = detail::constant_subsequence_detected(lc.values) ? Verdict::Satisfied : Verdict::Inconclusive;
        lc.agrees = lc.verdict == v.verdict;
        v.liminf = std::move(lc);
    }
    v.power_of_two = detail::power_of_two_windows(c, v.witness);
    return v;
}

struct EtaEstimate {
    std::size_t L = 0;
    std::size_t M = 0;
    Rational min_frequency;
    Word argmin;
    std::size_t language_size = 0;
};

// empirical min cylinder frequency over the first M letters of the limit word
inline EtaEstimate estimate_eta(const Coding& c, std::size_t L, std::size_t M, unsigned jobs = 1) {
    EtaEstimate est;
    est.L = L;
    est.M = M;
    if (L == 0) {
        est.min_frequency = 1;
        est.language_size = 1;
        return est;
    }
    std::size_t k = cover_level(c, L);
    BigInt need = 10 * (block_len(c, static_cast<long>(k)) + 1);
    if (BigInt(M) < need)
        fail(ErrorKind::PrefixTooShort, "prefix length " + std::to_string(M) + " below 10(|p(" + std::to_string(k) +
                                            ")|+1) = " + need.str());
    auto lang = language(c, L, jobs);
    detail::FactorIndex ids(L);
    for (auto& w : lang.words) ids.intern(w);
    auto text = word_prefix(c, M);
    std::span<const Letter> t(text);
    std::size_t nwin = M - L + 1;
    std::size_t parts = std::max<std::size_t>(1, std::min<std::size_t>(jobs ? jobs : 1, nwin));
    std::vector<std::vector<std::uint64_t>> local(parts, std::vector<std::uint64_t>(ids.size(), 0));
    parallel_chunks(nwin, static_cast<unsigned>(parts), [&](std::size_t b, std::size_t e, std::size_t p) {
        auto hs = detail::RollingHash::windows(t, L, b, e);
        for (std::size_t s = b; s < e; ++s) {
            auto id = ids.find(t.subspan(s, L), hs[s - b]);
            if (!id) fail(ErrorKind::InvalidArgument, "prefix factor outside the language (internal)");
            ++local[p][*id];
        }
    });
    std::vector<std::uint64_t> cnt(ids.size(), 0);
    for (auto& l : local)
        for (std::size_t i = 0; i < cnt.size(); ++i) cnt[i] += l[i];
    std::size_t best = 0;
    for (std::size_t i = 0; i < cnt.size(); ++i) {
        if (cnt[i] == 0)
            fail(ErrorKind::PrefixTooShort, "prefix of length " + std::to_string(M) + " misses a factor of length " +
                                                std::to_string(L));
        if (cnt[i] < cnt[best] || (cnt[i] == cnt[best] && ids.words()[i] < ids.words()[best])) best = i;
    }
    est.min_frequency = Rational(BigInt(cnt[best]), BigInt(nwin));
    est.argmin = ids.words()[best];
    est.language_size = ids.size();
    return est;
}

} // namespace toeplitz
