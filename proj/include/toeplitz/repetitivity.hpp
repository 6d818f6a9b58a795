#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coding.hpp"
#include "complexity.hpp"
#include "language.hpp"
#include "parallel.hpp"
#include "verdict.hpp"
#include "words.hpp"

namespace toeplitz {

// first L of the validity range, |p(m_1)| - |p(m_1 - 1)| + 1
inline BigInt repetitivity_range_start(const Coding& c) {
    detail::Lengths len(c);
    long m1 = static_cast<long>(m_next(c, 0));
    return len(m1) - len(m1 - 1) + 1;
}

// R(L) for L >= |p(m_1)| - |p(m_1 - 1)| + 1
inline BigInt repetitivity_formula(const Coding& c, std::size_t Lsz) {
    detail::Lengths len(c);
    BigInt L = Lsz;
    std::size_t mi = m_next(c, 0);
    auto lo = [&](std::size_t m) { return len(static_cast<long>(m)) - len(static_cast<long>(m) - 1) + 1; };
    if (L < lo(mi))
        fail(ErrorKind::OutOfTheoremRange,
             "L = " + L.str() + " lies below the formula's range start " + lo(mi).str());
    while (true) {
        std::size_t next = m_next(c, mi);
        if (L <= lo(next) - 1) break;
        mi = next;
    }
    long m = static_cast<long>(mi);
    long K = static_cast<long>(kappa(c, mi));
    if (L <= len(m) + 1) return 2 * len(K - 1) + 1 - len(m) + len(m - 1) + L;
    return 2 * len(K - 1) + 1 + L;
}

namespace detail {

// every length-Lt factor contains every length-L factor?
inline bool contains_all(const Coding& c, std::size_t L, std::size_t Lt, unsigned jobs) {
    auto lang = language(c, L);
    FactorIndex ids(L);
    for (auto& w : lang.words) ids.intern(w);
    const std::size_t need = ids.size();
    if (Lt < L) return false;
    auto sources = language_sources(c, Lt);
    std::vector<char> ok(sources.size(), 1);
    parallel_chunks(sources.size(), jobs, [&](std::size_t b, std::size_t e, std::size_t) {
        for (std::size_t si = b; si < e; ++si) {
            std::span<const Letter> text(sources[si]);
            std::size_t nwin = text.size() - L + 1;
            auto hs = RollingHash::windows(text, L, 0, nwin);
            std::vector<std::uint32_t> id(nwin);
            for (std::size_t j = 0; j < nwin; ++j) {
                auto f = ids.find(text.subspan(j, L), hs[j]);
                if (!f) fail(ErrorKind::InvalidArgument, "factor outside the language (internal)");
                id[j] = *f;
            }
            // windows of length Lt cover factor starts [t, t + Lt - L]
            std::size_t span = Lt - L + 1;
            std::vector<std::uint32_t> cnt(need, 0);
            std::size_t distinct = 0;
            for (std::size_t j = 0; j < nwin; ++j) {
                if (cnt[id[j]]++ == 0) ++distinct;
                if (j >= span && --cnt[id[j - span]] == 0) --distinct;
                if (j + 1 >= span && distinct < need) {
                    ok[si] = 0;
                    break;
                }
            }
        }
    });
    for (char x : ok)
        if (!x) return false;
    return true;
}

} // namespace detail

// least Lt such that every word of length Lt contains every word of length L.
// The property is monotone in Lt, so a verified upper bound plus bisection gives
// the exact minimum; the formula (when in range) only seeds the upper bound.
inline std::size_t repetitivity_oracle(const Coding& c, std::size_t L, unsigned jobs = 1) {
    if (L == 0) return 0;
    std::size_t hi = 0;
    try {
        if (BigInt(L) >= repetitivity_range_start(c)) hi = to_size(repetitivity_formula(c, L));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfTheoremRange && e.kind() != ErrorKind::Overflow) throw;
    }
    if (hi == 0 || !detail::contains_all(c, L, hi, jobs)) {
        hi = std::max<std::size_t>(hi, 2 * L);
        while (!detail::contains_all(c, L, hi, jobs)) hi *= 2;
    }
    std::size_t lo = L;  // contains_all(L, L) fails whenever p(L) > 1
    if (detail::contains_all(c, L, lo, jobs)) return lo;
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (detail::contains_all(c, L, mid, jobs))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

struct RepetitivityRecord {
    std::size_t L = 0;
    std::optional<BigInt> formula;
    std::optional<std::size_t> oracle;
};

struct MSample {
    std::size_t i = 0;
    std::size_t m = 0;
    std::size_t kappa = 0;
    BigInt inner_product;  // prod_{j = m_i+1}^{kappa(m_i)-1} n_j
    double log_ratio = 0;  // log(prod_{j <= kappa(m_i)-1} n_j) / log(prod_{j <= m_i} n_j)
};

struct AlphaVerdict {
    Rational alpha;
    VerdictKind kind = VerdictKind::Exact;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<MSample> samples;
    std::optional<EventualPeriod> period;  // of the witness, in i
    BigInt limsup_product;                 // exact, alpha = 1 and periodic tails only
    Trend trend = Trend::Mixed;            // of the log-ratios
    std::string reason;

    std::vector<double> witness() const {
        std::vector<double> w;
        for (auto& s : samples) w.push_back(s.log_ratio);
        return w;
    }
    std::vector<std::size_t> kappa_gaps() const {
        std::vector<std::size_t> g;
        for (auto& s : samples) g.push_back(s.kappa - s.m);
        return g;
    }
};

namespace detail {

inline MSample m_sample(const Coding& c, std::size_t i, std::size_t m) {
    MSample s;
    s.i = i;
    s.m = m;
    s.kappa = kappa(c, m);
    s.inner_product = 1;
    for (std::size_t j = m + 1; j < s.kappa; ++j) s.inner_product *= c.period(j);
    double num = 0, den = 0;
    for (std::size_t j = 0; j < s.kappa; ++j) {
        double lg = std::log(static_cast<double>(c.period(j)));
        num += lg;
        if (j <= m) den += lg;
    }
    s.log_ratio = num / den;
    return s;
}

} // namespace detail

// alpha-repetitivity through the m-sequence: 0 < limsup (n_0..n_{kappa(m_i)-1}) / (n_0..n_{m_i})^alpha < oo
inline AlphaVerdict alpha_verdict(const Coding& c, const Rational& alpha, std::size_t horizon) {
    AlphaVerdict v;
    v.alpha = alpha;
    std::vector<std::size_t> ms = m_sequence_prefix(c, horizon + 1);
    for (std::size_t i = 1; i < ms.size(); ++i) v.samples.push_back(detail::m_sample(c, i, ms[i]));
    std::vector<double> lr = v.witness();
    v.trend = trend_of(lr);

    if (!c.periodic()) {
        v.kind = VerdictKind::HorizonEstimate;
        v.verdict = Verdict::Inconclusive;
        v.reason = "generator tail: limsup not decidable from " + std::to_string(v.samples.size()) + " samples";
        return v;
    }

    // Past the preperiod, m_{i+1} depends only on m_i mod T; find the first
    // repeated residue. One cycle multiplies both products by the same G > 1,
    // so the log of the quotient drifts by (1 - alpha) log G per cycle.
    v.kind = VerdictKind::Exact;
    const std::size_t T = c.tail_entries().size(), pre = c.preperiod().size();
    std::map<std::size_t, std::size_t> seen;  // residue -> i
    std::size_t i = 0, m = 0, i0 = 0, i1 = 0;
    while (true) {
        if (m >= pre) {
            auto [it, fresh] = seen.emplace(m % T, i);
            if (!fresh) {
                i0 = it->second;
                i1 = i;
                break;
            }
        }
        m = m_next(c, m);
        ++i;
    }
    v.period = EventualPeriod{i0, i1 - i0};
    // make sure the reported witness covers at least one full cycle
    for (std::size_t j = v.samples.size() + 1; j <= i1; ++j) {
        if (ms.size() <= j) ms.push_back(m_next(c, ms.back()));
        v.samples.push_back(detail::m_sample(c, j, ms[j]));
    }
    if (alpha == 1) {
        v.verdict = Verdict::Satisfied;
        v.limsup_product = 0;
        for (auto& s : v.samples)
            if (s.i >= std::max<std::size_t>(i0, 1) && s.i < i1 && s.inner_product > v.limsup_product)
                v.limsup_product = s.inner_product;
        v.reason = "quotient is the eventually periodic product over (m_i, kappa(m_i)); limsup = " +
                   v.limsup_product.str();
    } else {
        v.verdict = Verdict::Violated;
        v.reason = alpha > 1 ? "log-quotient drifts to -infinity by (1 - alpha) log G per cycle; limsup = 0"
                             : "log-quotient drifts to +infinity by (1 - alpha) log G per cycle; limsup = infinity";
    }
    return v;
}

// linear repetitivity = 1-repetitivity
inline AlphaVerdict linear_repetitivity(const Coding& c, std::size_t horizon) { return alpha_verdict(c, Rational(1), horizon); }

// kappa(m_i) - alpha (m_i + 1); the constant-period criterion asks its limsup to be finite
inline std::vector<Rational> constant_period_criterion(const Coding& c, const Rational& alpha, std::size_t horizon) {
    std::vector<Rational> out;
    auto ms = m_sequence_prefix(c, horizon + 1);
    for (std::size_t i = 1; i < ms.size(); ++i)
        out.push_back(Rational(BigInt(kappa(c, ms[i]))) - alpha * Rational(BigInt(ms[i] + 1)));
    return out;
}

inline std::vector<RepetitivityRecord> repetitivity_profile(const Coding& c, std::size_t max_len, bool with_oracle,
                                                            unsigned jobs = 1) {
    std::vector<RepetitivityRecord> out;
    BigInt start = repetitivity_range_start(c);
    for (std::size_t L = 1; L <= max_len; ++L) {
        RepetitivityRecord r;
        r.L = L;
        if (BigInt(L) >= start) r.formula = repetitivity_formula(c, L);
        if (with_oracle || !r.formula) r.oracle = repetitivity_oracle(c, L, jobs);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace toeplitz
