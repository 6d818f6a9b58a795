#pragma once

#include <string_view>

namespace toeplitz {

enum class Verdict { Satisfied, Violated, Inconclusive };
enum class VerdictKind { Exact, HorizonEstimate };
enum class Trend { Increasing, Decreasing, Constant, Mixed };

inline std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

inline std::string_view to_string(VerdictKind k) { return k == VerdictKind::Exact ? "exact" : "horizon-estimate"; }

inline std::string_view to_string(Trend t) {
    switch (t) {
    case Trend::Increasing: return "increasing";
    case Trend::Decreasing: return "decreasing";
    case Trend::Constant: return "constant";
    case Trend::Mixed: return "mixed";
    }
    return "?";
}

// strict monotonicity over the whole sequence
template <class Seq>
Trend trend_of(const Seq& s) {
    bool inc = true, dec = true, cst = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i - 1] < s[i])) inc = false;
        if (!(s[i] < s[i - 1])) dec = false;
        if (!(s[i] == s[i - 1])) cst = false;
    }
    if (s.size() < 2) return Trend::Constant;
    if (cst) return Trend::Constant;
    if (inc) return Trend::Increasing;
    if (dec) return Trend::Decreasing;
    return Trend::Mixed;
}

} // namespace toeplitz
