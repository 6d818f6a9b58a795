#pragma once

#include <bitset>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace toeplitz {

using Letter = std::uint8_t;
using Period = std::uint64_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kMaxAlphabet = 255;
inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 24;

class Alphabet {
public:
    Letter intern(std::string_view name) {
        if (auto id = find(name)) return *id;
        if (name.empty()) fail(ErrorKind::Parse, "empty letter name");
        if (names_.size() >= kMaxAlphabet) fail(ErrorKind::InvalidCoding, "alphabet larger than 255 letters");
        names_.emplace_back(name);
        return static_cast<Letter>(names_.size() - 1);
    }

    std::optional<Letter> find(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<Letter>(i);
        return std::nullopt;
    }

    const std::string& name(Letter l) const { return names_.at(l); }
    std::size_t size() const { return names_.size(); }

    bool single_char_names() const {
        for (auto& n : names_)
            if (n.size() != 1) return false;
        return true;
    }

    // letters glued together for one-char names, space separated otherwise
    std::string render(std::span<const Letter> w) const {
        std::string out;
        bool glue = single_char_names();
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!glue && i) out += ' ';
            out += names_.at(w[i]);
        }
        return out;
    }

    std::optional<Word> parse_word(std::string_view s) const {
        Word w;
        if (single_char_names()) {
            for (char ch : s) {
                if (ch == ' ') continue;
                auto id = find(std::string_view(&ch, 1));
                if (!id) return std::nullopt;
                w.push_back(*id);
            }
            return w;
        }
        std::size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && s[i] == ' ') ++i;
            std::size_t j = i;
            while (j < s.size() && s[j] != ' ') ++j;
            if (j > i) {
                auto id = find(s.substr(i, j - i));
                if (!id) return std::nullopt;
                w.push_back(*id);
            }
            i = j;
        }
        return w;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
};

class LetterSet {
public:
    LetterSet() = default;
    LetterSet(std::initializer_list<Letter> ls) {
        for (auto l : ls) insert(l);
    }

    void insert(Letter l) { bits_.set(l); }
    bool contains(Letter l) const { return bits_.test(l); }
    std::size_t size() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    bool subset_of(const LetterSet& o) const { return (bits_ & ~o.bits_).none(); }
    LetterSet& operator|=(const LetterSet& o) {
        bits_ |= o.bits_;
        return *this;
    }

    std::vector<Letter> letters() const {
        std::vector<Letter> out;
        for (std::size_t i = 0; i < 256; ++i)
            if (bits_.test(i)) out.push_back(static_cast<Letter>(i));
        return out;
    }

    friend bool operator==(const LetterSet&, const LetterSet&) = default;

private:
    std::bitset<256> bits_;
};

struct CodingEntry {
    Letter letter = 0;
    Period period = 2;
    friend bool operator==(const CodingEntry&, const CodingEntry&) = default;
};

struct PeriodicTail {
    std::vector<CodingEntry> entries;
};

// A named rule, materialized up to its horizon. The rule certifies its
// eventual alphabet: from index `eventual_from` (relative to the tail) on,
// every letter lies in `eventual` and every letter of `eventual` recurs.
struct GeneratorTail {
    std::string rule;
    std::vector<CodingEntry> entries;
    LetterSet eventual;
    std::size_t eventual_from = 0;
};

using Tail = std::variant<PeriodicTail, GeneratorTail>;

struct RawCoding {
    Alphabet alphabet;
    std::vector<CodingEntry> preperiod;
    Tail tail;
};

struct TailAlphabet {
    std::size_t k = 0;
    LetterSet letters;
};

namespace detail {

// Largest materialized block; smaller blocks are prefixes of it.
struct BlockCache {
    std::mutex mu;
    std::shared_ptr<const std::vector<Letter>> symbols;
    std::size_t level = 0;
    bool empty = true;
};

} // namespace detail

class Coding {
public:
    // Checks every invariant; does not repair anything (see normalize).
    static Coding validated(RawCoding raw) {
        Coding c;
        c.alphabet_ = std::move(raw.alphabet);
        c.pre_ = std::move(raw.preperiod);
        if (auto* p = std::get_if<PeriodicTail>(&raw.tail)) {
            c.periodic_ = true;
            c.tail_ = std::move(p->entries);
            if (c.tail_.empty()) fail(ErrorKind::EmptyCoding, "periodic tail is empty");
            for (auto& e : c.tail_) c.eventual_.insert(e.letter);
            c.eventual_from_ = c.pre_.size();
        } else {
            auto& g = std::get<GeneratorTail>(raw.tail);
            c.periodic_ = false;
            c.rule_ = g.rule;
            c.tail_ = std::move(g.entries);
            c.eventual_ = g.eventual;
            if (g.eventual_from > c.tail_.size())
                fail(ErrorKind::HorizonExceeded, "generator '" + g.rule + "' cannot certify its eventual alphabet within its horizon");
            c.eventual_from_ = c.pre_.size() + g.eventual_from;
        }
        c.check();
        c.compute_nev();
        return c;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<CodingEntry>& preperiod() const { return pre_; }
    const std::vector<CodingEntry>& tail_entries() const { return tail_; }
    bool periodic() const { return periodic_; }
    const std::string& rule() const { return rule_; }

    // number of addressable indices; unlimited for periodic tails
    std::size_t horizon() const {
        return periodic_ ? std::numeric_limits<std::size_t>::max() : pre_.size() + tail_.size();
    }

    CodingEntry entry(std::size_t k) const {
        if (k < pre_.size()) return pre_[k];
        std::size_t t = k - pre_.size();
        if (periodic_) return tail_[t % tail_.size()];
        if (t >= tail_.size())
            fail(ErrorKind::HorizonExceeded,
                 "index " + std::to_string(k) + " beyond generator horizon " + std::to_string(horizon()));
        return tail_[t];
    }
    Letter letter(std::size_t k) const { return entry(k).letter; }
    Period period(std::size_t k) const { return entry(k).period; }

    const LetterSet& eventual_alphabet() const { return eventual_; }
    std::size_t eventual_index() const { return nev_; }

    std::size_t symbol_budget() const { return budget_; }
    Coding with_budget(std::size_t b) const {
        Coding c = *this;
        c.budget_ = b;
        c.cache_ = std::make_shared<detail::BlockCache>();
        return c;
    }

    detail::BlockCache& cache() const { return *cache_; }

    // canonical spec text
    std::string describe() const {
        auto entries = [&](const std::vector<CodingEntry>& es) {
            std::string s;
            for (std::size_t i = 0; i < es.size(); ++i) {
                if (i) s += ' ';
                s += alphabet_.name(es[i].letter) + ":" + std::to_string(es[i].period);
            }
            return s;
        };
        std::string s = entries(pre_);
        s += s.empty() ? "| " : " | ";
        s += periodic_ ? entries(tail_) : "@" + rule_;
        return s;
    }

private:
    Coding() : cache_(std::make_shared<detail::BlockCache>()) {}

    void check() const {
        auto bad = [](const std::string& m) { fail(ErrorKind::InvalidCoding, m); };
        auto all = pre_;
        all.insert(all.end(), tail_.begin(), tail_.end());
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (all[i].period < 2) bad("period at index " + std::to_string(i) + " is below 2");
            if (all[i].letter >= alphabet_.size()) bad("letter id out of alphabet range");
            if (i + 1 < all.size() && all[i].letter == all[i + 1].letter)
                bad("equal consecutive letters at index " + std::to_string(i));
        }
        if (periodic_) {
            if (tail_.front().letter == tail_.back().letter && tail_.size() > 1)
                bad("periodic tail wraps onto an equal letter");
            if (eventual_.size() < 2)
                fail(ErrorKind::AllLettersEqual, "periodic tail uses a single letter; the word would be periodic");
        } else {
            if (eventual_.size() < 2) bad("generator certifies fewer than two eventual letters");
            LetterSet seen;
            for (std::size_t t = eventual_from_ - pre_.size(); t < tail_.size(); ++t) {
                if (!eventual_.contains(tail_[t].letter)) bad("generator letter outside its certified eventual alphabet");
                seen.insert(tail_[t].letter);
            }
            if (!(seen == eventual_) && !tail_.empty()) bad("generator horizon does not exhibit its whole eventual alphabet");
        }
    }

    void compute_nev() {
        nev_ = 0;
        for (std::size_t j = 0; j < eventual_from_; ++j)
            if (!eventual_.contains(entry(j).letter)) nev_ = j + 1;
    }

    Alphabet alphabet_;
    std::vector<CodingEntry> pre_;
    std::vector<CodingEntry> tail_;
    bool periodic_ = true;
    std::string rule_;
    LetterSet eventual_;
    std::size_t eventual_from_ = 0;
    std::size_t nev_ = 0;
    std::size_t budget_ = kDefaultBudget;
    std::shared_ptr<detail::BlockCache> cache_;
};

namespace detail {

inline CodingEntry merge(CodingEntry a, CodingEntry b) { return {a.letter, checked_mul(a.period, b.period)}; }

inline std::vector<CodingEntry> merge_runs(const std::vector<CodingEntry>& in) {
    std::vector<CodingEntry> out;
    for (auto e : in) {
        if (e.period < 2) fail(ErrorKind::InvalidCoding, "period below 2");
        if (!out.empty() && out.back().letter == e.letter)
            out.back() = merge(out.back(), e);
        else
            out.push_back(e);
    }
    return out;
}

} // namespace detail

// Merge equal neighbours by multiplying periods. A periodic tail whose last
// and first letters agree is unrolled once into the preperiod and refolded.
inline Coding normalize(RawCoding raw) {
    auto pre = detail::merge_runs(raw.preperiod);
    if (auto* p = std::get_if<PeriodicTail>(&raw.tail)) {
        if (p->entries.empty()) fail(ErrorKind::EmptyCoding, "coding has no tail");
        auto tail = detail::merge_runs(p->entries);
        if (tail.size() == 1) fail(ErrorKind::AllLettersEqual, "tail collapses to one letter");
        if (tail.front().letter == tail.back().letter) {
            pre.insert(pre.end(), tail.begin(), tail.end() - 1);
            std::vector<CodingEntry> t2;
            t2.push_back(detail::merge(tail.back(), tail.front()));
            t2.insert(t2.end(), tail.begin() + 1, tail.end() - 1);
            tail = std::move(t2);
            pre = detail::merge_runs(pre);
        }
        if (tail.size() < 2) fail(ErrorKind::AllLettersEqual, "tail collapses to one letter");
        if (!pre.empty() && pre.back().letter == tail.front().letter) {
            pre.back() = detail::merge(pre.back(), tail.front());
            std::rotate(tail.begin(), tail.begin() + 1, tail.end());
        }
        p->entries = std::move(tail);
    } else {
        auto& g = std::get<GeneratorTail>(raw.tail);
        g.entries = detail::merge_runs(g.entries);
        if (!pre.empty() && !g.entries.empty() && pre.back().letter == g.entries.front().letter) {
            pre.back() = detail::merge(pre.back(), g.entries.front());
            g.entries.erase(g.entries.begin());
            if (g.eventual_from > 0) --g.eventual_from;
        }
    }
    raw.preperiod = std::move(pre);
    return Coding::validated(std::move(raw));
}

inline RawCoding to_raw(const Coding& c) {
    RawCoding r;
    r.alphabet = c.alphabet();
    r.preperiod = c.preperiod();
    if (c.periodic()) {
        r.tail = PeriodicTail{c.tail_entries()};
    } else {
        GeneratorTail g;
        g.rule = c.rule();
        g.entries = c.tail_entries();
        g.eventual = c.eventual_alphabet();
        g.eventual_from = 0;
        // recover the certificate offset: first tail index after which only eventual letters occur
        for (std::size_t t = 0; t < g.entries.size(); ++t)
            if (!g.eventual.contains(g.entries[t].letter)) g.eventual_from = t + 1;
        r.tail = std::move(g);
    }
    return r;
}

// A_k = {a_j : j >= k}
inline TailAlphabet tail_alphabet(const Coding& c, std::size_t k) {
    TailAlphabet t{k, c.eventual_alphabet()};
    for (std::size_t j = k; j < c.eventual_index(); ++j) t.letters.insert(c.letter(j));
    return t;
}

// least j > k with {a_{k+1}, ..., a_j} = A_{k+1}
inline std::size_t kappa(const Coding& c, std::size_t k) {
    auto target = tail_alphabet(c, k + 1).letters;
    LetterSet seen;
    for (std::size_t j = k + 1;; ++j) {
        seen.insert(c.letter(j));
        if (seen.size() == target.size()) return j;
    }
}

// m_0 = 0 and m_{i+1} is the next place where kappa grows. The backward-scan
// characterization max{ j <= kappa(m_i) : {a_j..a_kappa(m_i)} = A_{m_i+1} }
// only agrees with this while no letter drops out of A_k.
inline std::size_t m_next(const Coding& c, std::size_t m) {
    std::size_t kap = kappa(c, m);
    for (std::size_t j = m + 1;; ++j)
        if (kappa(c, j) > kap) return j;
}

inline std::vector<std::size_t> m_sequence_prefix(const Coding& c, std::size_t count) {
    std::vector<std::size_t> m;
    if (count == 0) return m;
    m.push_back(0);
    while (m.size() < count) m.push_back(m_next(c, m.back()));
    return m;
}

inline std::size_t m_sequence(const Coding& c, std::size_t i) { return m_sequence_prefix(c, i + 1).back(); }

struct EventualPeriod {
    std::size_t start = 0;
    std::size_t period = 0;
};

// Smallest period p (then smallest start s) with seq[j] == seq[j+p] for all
// s <= j < n-p, requiring the periodic part to cover two full periods.
template <class T>
std::optional<EventualPeriod> detect_eventual_period(const std::vector<T>& seq) {
    std::size_t n = seq.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        // scan backwards for the earliest start that still works
        std::size_t s = n - p;
        while (s > 0 && seq[s - 1] == seq[s - 1 + p]) --s;
        if (n - s >= 2 * p) return EventualPeriod{s, p};
    }
    return std::nullopt;
}

} // namespace toeplitz
