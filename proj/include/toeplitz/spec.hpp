#pragma once

#include <cctype>
#include <charconv>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "coding.hpp"
#include "generators.hpp"

namespace toeplitz {

struct ParseOptions {
    std::vector<Period> periods;  // generator periods, cycled; empty = all 2
    std::size_t generator_horizon = kDefaultGeneratorHorizon;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (true) {
        auto j = s.find(sep, i);
        out.push_back(s.substr(i, j == std::string_view::npos ? s.size() - i : j - i));
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view s, const std::string& ctx) {
    s = trim(s);
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
        fail(ErrorKind::Parse, ctx + ": expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

inline std::vector<CodingEntry> parse_entries(std::string_view s, Alphabet& abc) {
    std::vector<CodingEntry> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i == s.size()) break;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        auto tok = s.substr(i, j - i);
        auto colon = tok.rfind(':');
        if (colon == std::string_view::npos || colon == 0)
            fail(ErrorKind::Parse, "entry '" + std::string(tok) + "' is not of the form letter:period");
        auto name = tok.substr(0, colon);
        auto n = parse_uint(tok.substr(colon + 1), "period of '" + std::string(name) + "'");
        if (n < 2) fail(ErrorKind::Parse, "period of '" + std::string(name) + "' must be at least 2");
        out.push_back({abc.intern(name), n});
        i = j;
    }
    return out;
}

} // namespace detail

// spec := entries "|" entries  |  entries "|" "@" name [ "(" args ")" ]
inline RawCoding parse_raw(std::string_view spec, const ParseOptions& opt = {}) {
    auto bar = spec.find('|');
    if (bar == std::string_view::npos) fail(ErrorKind::Parse, "missing '|' between preperiod and tail");
    if (spec.find('|', bar + 1) != std::string_view::npos) fail(ErrorKind::Parse, "more than one '|'");
    RawCoding raw;
    raw.preperiod = detail::parse_entries(spec.substr(0, bar), raw.alphabet);
    auto rhs = detail::trim(spec.substr(bar + 1));
    if (!rhs.empty() && rhs.front() == '@') {
        auto body = rhs.substr(1);
        std::string_view name = body;
        std::vector<std::uint64_t> args;
        if (auto lp = body.find('('); lp != std::string_view::npos) {
            if (body.back() != ')') fail(ErrorKind::Parse, "unterminated generator arguments");
            name = body.substr(0, lp);
            auto inner = detail::trim(body.substr(lp + 1, body.size() - lp - 2));
            if (!inner.empty())
                for (auto a : detail::split(inner, ','))
                    args.push_back(detail::parse_uint(a, "generator argument"));
        }
        name = detail::trim(name);
        if (name == "liuqu") {
            if (!args.empty()) fail(ErrorKind::Parse, "liuqu takes no arguments (periods come from --periods)");
            raw.tail = liuqu_tail(raw.alphabet, opt.periods, opt.generator_horizon);
        } else if (name == "tower") {
            if (args.size() < 2 || args.size() > 3) fail(ErrorKind::Parse, "tower expects (base, exponent[, width])");
            raw.tail = tower_tail(raw.alphabet, args[0], static_cast<unsigned>(args[1]),
                                  args.size() > 2 ? static_cast<unsigned>(args[2]) : 2u, opt.generator_horizon);
        } else {
            fail(ErrorKind::Parse, "unknown generator '" + std::string(name) + "'");
        }
    } else {
        raw.tail = PeriodicTail{detail::parse_entries(rhs, raw.alphabet)};
    }
    if (raw.preperiod.empty()) {
        if (auto* p = std::get_if<PeriodicTail>(&raw.tail); p && p->entries.empty())
            fail(ErrorKind::EmptyCoding, "coding has no entries");
    }
    return raw;
}

inline Coding parse_coding(std::string_view spec, const ParseOptions& opt = {}) { return normalize(parse_raw(spec, opt)); }

struct PresetInfo {
    std::string name;
    std::string example_spec;
    std::string summary;
};

inline std::vector<PresetInfo> preset_list() {
    return {
        {"grigorchuk", "a:2 | x:2 y:2 z:2", "standard Grigorchuk subshift"},
        {"l-grigorchuk(l1,...,lm)", "a:2 | x:2^l1 y:2^l2 z:2^l3 ...",
         "letters a,x,y,z,x,y,z,...; n_0 = 2, n_j = 2^l_j with the l list cycled"},
        {"liuqu", "| @liuqu", "(ab)c(ab)^2d(ab)^3c...; periods from --periods (default all 2)"},
    };
}

// grigorchuk | l-grigorchuk(l1,...) | liuqu
inline std::string preset_spec(std::string_view preset) {
    preset = detail::trim(preset);
    if (preset == "grigorchuk") return "a:2 | x:2 y:2 z:2";
    if (preset == "liuqu") return "| @liuqu";
    if (preset.starts_with("l-grigorchuk")) {
        auto lp = preset.find('(');
        if (lp == std::string_view::npos || preset.back() != ')')
            fail(ErrorKind::Parse, "l-grigorchuk expects arguments, e.g. l-grigorchuk(1,2)");
        std::vector<std::uint64_t> ls;
        for (auto a : detail::split(preset.substr(lp + 1, preset.size() - lp - 2), ','))
            ls.push_back(detail::parse_uint(a, "l-grigorchuk exponent"));
        if (ls.empty()) fail(ErrorKind::Parse, "l-grigorchuk needs at least one exponent");
        for (auto l : ls)
            if (l < 1 || l > 62) fail(ErrorKind::Parse, "l-grigorchuk exponents must lie in [1, 62]");
        std::size_t len = std::lcm<std::size_t>(3, ls.size());
        const char* xyz[] = {"x", "y", "z"};
        std::string s = "a:2 |";
        for (std::size_t j = 0; j < len; ++j)
            s += std::string(" ") + xyz[j % 3] + ":" + std::to_string(std::uint64_t{1} << ls[j % ls.size()]);
        return s;
    }
    fail(ErrorKind::Parse, "unknown preset '" + std::string(preset) + "'");
}

} // namespace toeplitz
