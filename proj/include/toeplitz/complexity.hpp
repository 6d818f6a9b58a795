#pragma once

#include <optional>
#include <vector>

#include "bigint.hpp"
#include "coding.hpp"
#include "language.hpp"
#include "words.hpp"

namespace toeplitz {

namespace detail {

// lazily extended |p(k)| table; |p(k)| = 0 for k < 0
class Lengths {
public:
    explicit Lengths(const Coding& c) : c_(c) {}

    BigInt operator()(long k) {
        if (k < 0) return 0;
        while (static_cast<long>(prod_.size()) <= k) {
            BigInt last = prod_.empty() ? BigInt(1) : prod_.back();
            prod_.push_back(last * c_.period(prod_.size()));
            len_.push_back(prod_.back() - 1);
        }
        return len_[static_cast<std::size_t>(k)];
    }

    // least k >= 1 with |p(k-1)| + lo <= L <= |p(k)| + hi (ranges tile for lo = hi + 1)
    std::size_t level_at(const BigInt& L, int hi) {
        for (long k = 1;; ++k)
            if (L <= (*this)(k) + hi) return static_cast<std::size_t>(k);
    }

private:
    const Coding& c_;
    std::vector<BigInt> prod_, len_;
};

inline int alpha_size(const Coding& c, long k) {
    return static_cast<int>(tail_alphabet(c, static_cast<std::size_t>(k < 0 ? 0 : k)).letters.size());
}
inline bool in_tail(const Coding& c, long k, Letter a) {
    return tail_alphabet(c, static_cast<std::size_t>(k)).letters.contains(a);
}

} // namespace detail

// p(|p(k)|+1) = (|A_k|-1)(|p(k)|+1) + 1_{A_{k+1}}(a_k) (|p(k-1)|+1)
inline BigInt checkpoint_complexity(const Coding& c, std::size_t k) {
    detail::Lengths len(c);
    long kk = static_cast<long>(k);
    BigInt v = BigInt(detail::alpha_size(c, kk) - 1) * (len(kk) + 1);
    if (detail::in_tail(c, kk + 1, c.letter(k))) v += len(kk - 1) + 1;
    return v;
}

// exact p(L)
inline BigInt complexity_formula(const Coding& c, std::size_t Lsz) {
    detail::Lengths len(c);
    BigInt L = Lsz;
    BigInt P0 = len(0);
    int A0 = detail::alpha_size(c, 0);
    if (L <= P0) return BigInt(A0 - 1) * L + 1;
    if (L == P0 + 1) return BigInt(A0 - 1) * L + (detail::in_tail(c, 1, c.letter(0)) ? 1 : 0);

    long k = static_cast<long>(len.level_at(L, 1));  // |p(k-1)|+2 <= L <= |p(k)|+1
    BigInt Pk = len(k), P1 = len(k - 1), P2 = len(k - 2);
    bool prev_in = detail::in_tail(c, k, c.letter(static_cast<std::size_t>(k - 1)));

    if (c.period(static_cast<std::size_t>(k)) == 2) {
        int Akp1 = detail::alpha_size(c, k + 1), Akm1 = detail::alpha_size(c, k - 1);
        BigInt v = BigInt(Akp1 - 1) * L + BigInt(Akm1 - Akp1) * (P1 + 1);
        if (prev_in) v += (L <= Pk - P2) ? BigInt(L - P1 + P2) : BigInt(P1 + 1);
        return v;
    }
    int Ak = detail::alpha_size(c, k);
    BigInt v = (P1 + 1) + BigInt(Ak - 1) * L;
    if (L <= 2 * P1 - P2 + 1) {
        if (prev_in) v += L - 2 * P1 + P2 - 1;
    } else if (L <= Pk - P1) {
        // nothing
    } else if (!detail::in_tail(c, k + 1, c.letter(static_cast<std::size_t>(k)))) {
        v -= L - Pk + P1;
    }
    return v;
}

// the merged form valid once A_{k-1} = A_ev, i.e. k >= N_ev + 1
inline BigInt complexity_eventual_form(const Coding& c, std::size_t Lsz) {
    detail::Lengths len(c);
    BigInt L = Lsz;
    if (L <= len(0) + 1) fail(ErrorKind::OutOfTheoremRange, "eventual form needs L >= |p(0)| + 2");
    long k = static_cast<long>(len.level_at(L, 1));
    if (static_cast<std::size_t>(k) < c.eventual_index() + 1)
        fail(ErrorKind::OutOfTheoremRange, "eventual form needs k >= N_ev + 1");
    int Aev = static_cast<int>(c.eventual_alphabet().size());
    BigInt P1 = len(k - 1), P2 = len(k - 2);
    if (L <= 2 * P1 - P2 + 1) return BigInt(Aev) * L - P1 + P2;
    return BigInt(Aev - 1) * L + P1 + 1;
}

// R(L) = p(L+1) - p(L)
inline BigInt growth_formula(const Coding& c, std::size_t Lsz) {
    detail::Lengths len(c);
    BigInt L = Lsz;
    BigInt P0 = len(0);
    if (L + 1 <= P0) return detail::alpha_size(c, 0) - 1;
    if (L == P0) return detail::alpha_size(c, 1) - 1;
    long k = static_cast<long>(len.level_at(L, 0));  // |p(k-1)|+1 <= L <= |p(k)|
    BigInt Pk = len(k), P1 = len(k - 1), P2 = len(k - 2);
    int Ak = detail::alpha_size(c, k), Akp1 = detail::alpha_size(c, k + 1);
    BigInt v = Ak - 1;
    if (L >= Pk - P1) v -= Ak - Akp1;
    if (L <= 2 * P1 - P2 && detail::in_tail(c, k, c.letter(static_cast<std::size_t>(k - 1)))) v += 1;
    return v;
}

struct QuotientExtrema {
    Rational max_value;
    BigInt argmax_L;
    Rational min_lower_bound;
};

inline QuotientExtrema quotient_extrema(const Coding& c, std::size_t k) {
    if (k < c.eventual_index() + 1) fail(ErrorKind::OutOfTheoremRange, "quotient extrema need k >= N_ev + 1");
    detail::Lengths len(c);
    long kk = static_cast<long>(k);
    BigInt aev = c.eventual_alphabet().size();
    BigInt nk = c.period(k), nk1 = c.period(k - 1);
    QuotientExtrema q;
    q.max_value = Rational(aev) - Rational(nk1 - 1, 2 * nk1 - 1);
    q.argmax_L = 2 * len(kk - 1) - len(kk - 2) + 1;
    Rational b1 = Rational(aev) - Rational(nk - 1, nk), b2 = Rational(aev) - Rational(nk1 - 1, nk1);
    q.min_lower_bound = b1 < b2 ? b1 : b2;
    return q;
}

struct ComplexityRecord {
    std::size_t L = 0;
    BigInt formula;
    std::optional<std::size_t> oracle;
    BigInt growth;
};

inline std::vector<ComplexityRecord> complexity_profile(const Coding& c, std::size_t max_len, bool with_oracle,
                                                        unsigned jobs = 1) {
    std::vector<ComplexityRecord> out;
    for (std::size_t L = 0; L <= max_len; ++L) {
        ComplexityRecord r;
        r.L = L;
        r.formula = complexity_formula(c, L);
        r.growth = growth_formula(c, L);
        if (with_oracle) r.oracle = language_size(c, L, jobs);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace toeplitz
