#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coding.hpp"

namespace toeplitz {

inline constexpr std::size_t kDefaultGeneratorHorizon = 4096;

// (ab) c (ab)^2 d (ab)^3 c (ab)^4 d ...   periods cycle through `periods`
inline GeneratorTail liuqu_tail(Alphabet& abc, const std::vector<Period>& periods, std::size_t horizon) {
    const Letter a = abc.intern("a"), b = abc.intern("b"), cc = abc.intern("c"), d = abc.intern("d");
    std::vector<Period> ps = periods.empty() ? std::vector<Period>{2} : periods;
    GeneratorTail g;
    g.rule = "liuqu";
    auto push = [&](Letter l) {
        if (g.entries.size() < horizon) g.entries.push_back({l, ps[g.entries.size() % ps.size()]});
    };
    for (std::size_t run = 1; g.entries.size() < horizon; ++run) {
        for (std::size_t r = 0; r < run; ++r) {
            push(a);
            push(b);
        }
        push(run % 2 ? cc : d);
    }
    g.eventual = LetterSet{a, b, cc, d};
    g.eventual_from = 0;
    return g;
}

// letters cycle through `width` letters a, b, c, ...; n_0 = base, n_{j+1} = n_j^exponent.
// The horizon ends where the next period would overflow 64 bits.
inline GeneratorTail tower_tail(Alphabet& abc, Period base, unsigned exponent, unsigned width, std::size_t horizon) {
    if (base < 2) fail(ErrorKind::InvalidCoding, "tower base must be at least 2");
    if (exponent < 1) fail(ErrorKind::InvalidCoding, "tower exponent must be at least 1");
    if (width < 2 || width > 26) fail(ErrorKind::InvalidCoding, "tower width must be in [2, 26]");
    std::vector<Letter> ls;
    for (unsigned i = 0; i < width; ++i) ls.push_back(abc.intern(std::string(1, char('a' + i))));
    GeneratorTail g;
    g.rule = "tower(" + std::to_string(base) + "," + std::to_string(exponent) + "," + std::to_string(width) + ")";
    Period n = base;
    for (std::size_t j = 0; j < horizon; ++j) {
        g.entries.push_back({ls[j % width], n});
        Period next = 1;
        bool ok = true;
        for (unsigned e = 0; e < exponent && ok; ++e) ok = !__builtin_mul_overflow(next, n, &next);
        if (!ok) break;
        n = next;
    }
    for (auto l : ls) g.eventual.insert(l);
    if (g.entries.size() < width) fail(ErrorKind::HorizonExceeded, "tower overflows before showing every letter");
    return g;
}

} // namespace toeplitz
