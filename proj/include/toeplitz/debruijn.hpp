#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coding.hpp"
#include "complexity.hpp"
#include "language.hpp"
#include "words.hpp"

namespace toeplitz {

struct DeBruijnEdge {
    std::uint32_t from = 0, to = 0;
    Letter label = 0;
};

struct RightSpecial {
    std::uint32_t vertex = 0;
    std::size_t out_degree = 0;
};

struct DeBruijnGraph {
    std::size_t L = 0;
    LanguageSet vertices;
    std::vector<DeBruijnEdge> edges;  // sorted by (from, label)
    std::vector<RightSpecial> right_special;

    // governing level and designated words; empty for synthetic graphs
    std::optional<std::size_t> level;
    std::optional<Word> u1, v1, u2, v2;

    std::size_t out_degree(std::uint32_t v) const {
        auto lo = std::lower_bound(edges.begin(), edges.end(), v, [](const DeBruijnEdge& e, std::uint32_t x) { return e.from < x; });
        auto hi = std::upper_bound(edges.begin(), edges.end(), v, [](std::uint32_t x, const DeBruijnEdge& e) { return x < e.from; });
        return static_cast<std::size_t>(hi - lo);
    }

    Word edge_word(const DeBruijnEdge& e) const {
        Word w = vertices.words[e.from];
        w.push_back(e.label);
        return w;
    }
};

namespace detail {

inline void fill_right_special(DeBruijnGraph& g) {
    g.right_special.clear();
    std::vector<std::size_t> deg(g.vertices.size(), 0);
    for (auto& e : g.edges) ++deg[e.from];
    for (std::uint32_t v = 0; v < deg.size(); ++v)
        if (deg[v] >= 2) g.right_special.push_back({v, deg[v]});
}

} // namespace detail

// Graph on arbitrary vertex/edge word sets; each edge word w (length L+1)
// joins w[0..L) to w[1..L]. Both endpoints must be vertices.
inline DeBruijnGraph graph_from_words(LanguageSet vertices, const LanguageSet& edge_words) {
    DeBruijnGraph g;
    g.L = vertices.length;
    g.vertices = std::move(vertices);
    for (auto& w : edge_words.words) {
        if (w.size() != g.L + 1) fail(ErrorKind::InvalidArgument, "edge word of wrong length");
        std::span<const Letter> s(w);
        auto from = g.vertices.index_of(s.first(g.L));
        auto to = g.vertices.index_of(s.subspan(1));
        if (!from || !to) fail(ErrorKind::InvalidArgument, "edge word whose ends are not vertices");
        g.edges.push_back({static_cast<std::uint32_t>(*from), static_cast<std::uint32_t>(*to), w.back()});
    }
    std::sort(g.edges.begin(), g.edges.end(),
              [](const DeBruijnEdge& a, const DeBruijnEdge& b) { return std::tie(a.from, a.label) < std::tie(b.from, b.label); });
    detail::fill_right_special(g);
    return g;
}

inline DeBruijnGraph build_graph(const Coding& c, std::size_t L, unsigned jobs = 1) {
    auto g = graph_from_words(language(c, L, jobs), language(c, L + 1, jobs));
    if (L == 0) return g;
    detail::Lengths len(c);
    BigInt BL = L;
    std::size_t k = BL <= len(0) ? 0 : len.level_at(BL, 0);
    g.level = k;
    auto pk = block(c, k);
    auto s = pk.symbols();
    g.u1 = Word(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(L));
    g.v1 = Word(s.end() - static_cast<std::ptrdiff_t>(L), s.end());
    if (k >= 1) {
        long kk = static_cast<long>(k);
        Letter prev = c.letter(k - 1);
        if (detail::in_tail(c, kk, prev) && BL <= 2 * len(kk - 1) - len(kk - 2)) {
            auto mid = sandwich(block(c, k - 1), prev);
            g.u2 = Word(mid.begin(), mid.begin() + static_cast<std::ptrdiff_t>(L));
            g.v2 = Word(mid.end() - static_cast<std::ptrdiff_t>(L), mid.end());
        }
    }
    return g;
}

inline std::vector<RightSpecial> right_special_report(const DeBruijnGraph& g) { return g.right_special; }

inline bool strongly_connected(const DeBruijnGraph& g) {
    std::size_t n = g.vertices.size();
    if (n == 0) return true;
    auto reach = [&](bool forward) {
        std::vector<std::vector<std::uint32_t>> adj(n);
        for (auto& e : g.edges) forward ? adj[e.from].push_back(e.to) : adj[e.to].push_back(e.from);
        std::vector<char> seen(n, 0);
        std::deque<std::uint32_t> q{0};
        seen[0] = 1;
        std::size_t cnt = 1;
        while (!q.empty()) {
            auto v = q.front();
            q.pop_front();
            for (auto w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push_back(w);
                }
        }
        return cnt == n;
    };
    return reach(true) && reach(false);
}

// u -> reverse(u) maps V onto V and (u,v) in E iff (rev v, rev u) in E.
// An edge is its (L+1)-word, and the reflected edge is the reversed word.
inline bool reflection_check(const DeBruijnGraph& g) {
    for (auto& w : g.vertices.words)
        if (!g.vertices.contains(reversed(w))) return false;
    std::vector<Word> ew;
    ew.reserve(g.edges.size());
    for (auto& e : g.edges) ew.push_back(g.edge_word(e));
    std::sort(ew.begin(), ew.end());
    for (auto& w : ew)
        if (!std::binary_search(ew.begin(), ew.end(), reversed(w))) return false;
    return true;
}

inline std::vector<std::uint32_t> palindromic_vertices(const DeBruijnGraph& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i)
        if (is_palindrome(g.vertices.words[i])) out.push_back(i);
    return out;
}

// fixed points of u -> reverse(u)
inline std::vector<std::uint32_t> reflection_fixed_points(const DeBruijnGraph& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < g.vertices.size(); ++i) {
        auto r = g.vertices.index_of(reversed(g.vertices.words[i]));
        if (r && *r == i) out.push_back(i);
    }
    return out;
}

struct AnnotationFinding {
    std::string message;
    bool advisory = false;
};

// Checks the designated words against the arc structure: v1 (and v2) are the
// right-special vertices with the expected out-degrees; for every b in A_{k+1}
// the labelled walk b p(k) out of v1 exists, sits on u1 after L+1 edges and is
// back on v1 after |p(k)|+1; the arcs (maximal non-branching paths leaving
// right-special vertices) number sum(out-degree) and cover E exactly once.
// Arc findings at L = |p(k)| are advisory.
inline std::vector<AnnotationFinding> validate_annotations(const Coding& c, const DeBruijnGraph& g) {
    std::vector<AnnotationFinding> out;
    if (!g.level || g.L == 0) return out;
    std::size_t k = *g.level;
    long kk = static_cast<long>(k);
    detail::Lengths len(c);
    BigInt L = g.L, Pk = len(kk), P1 = len(kk - 1);
    auto idx = [&](const std::optional<Word>& w) { return w ? g.vertices.index_of(*w) : std::nullopt; };
    auto u1 = idx(g.u1), v1 = idx(g.v1), u2 = idx(g.u2), v2 = idx(g.v2);
    if (!u1 || !v1) {
        out.push_back({"u1 or v1 is not a vertex", false});
        return out;
    }
    if ((g.u2 && !u2) || (g.v2 && !v2)) out.push_back({"u2 or v2 is not a vertex", false});

    std::size_t want = L <= Pk - P1 - 1 ? tail_alphabet(c, k).letters.size() : tail_alphabet(c, k + 1).letters.size();
    if (g.out_degree(static_cast<std::uint32_t>(*v1)) != want)
        out.push_back({"v1 out-degree " + std::to_string(g.out_degree(static_cast<std::uint32_t>(*v1))) +
                           ", expected " + std::to_string(want),
                       false});
    if (v2) {
        if (*v2 == *v1) out.push_back({"v2 coincides with v1", false});
        if (g.out_degree(static_cast<std::uint32_t>(*v2)) != 2) out.push_back({"v2 out-degree is not 2", false});
        if (g.u2 && reversed(*g.v2) != *g.u2) out.push_back({"u2 is not the reversal of v2", false});
    }
    std::size_t want_rs = 1 + (v2 ? 1 : 0);
    if (g.right_special.size() != want_rs)
        out.push_back({std::to_string(g.right_special.size()) + " right-special vertices, expected " + std::to_string(want_rs), false});

    bool advisory = (L == Pk);
    auto step = [&](std::uint32_t v, Letter b) -> std::optional<std::uint32_t> {
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::pair{v, b},
                                   [](const DeBruijnEdge& e, std::pair<std::uint32_t, Letter> x) {
            return std::tie(e.from, e.label) < std::tie(x.first, x.second);
        });
        if (it == g.edges.end() || it->from != v || it->label != b) return std::nullopt;
        return it->to;
    };
    auto pk = block(c, k);
    auto ps = pk.symbols();
    for (Letter b : tail_alphabet(c, k + 1).letters.letters()) {
        std::string tag = "walk from v1 via '" + c.alphabet().name(b) + "'";
        auto cur = step(static_cast<std::uint32_t>(*v1), b);
        std::size_t edges = 1;
        for (std::size_t i = 0; cur && i < ps.size(); ++i, ++edges) {
            if (edges == g.L + 1 && *cur != *u1) {
                out.push_back({tag + " misses u1 after L+1 edges", advisory});
                break;
            }
            cur = step(*cur, ps[i]);
        }
        if (!cur)
            out.push_back({tag + " leaves the graph after " + std::to_string(edges) + " edges", advisory});
        else if (edges == ps.size() + 1 && *cur != *v1)
            out.push_back({tag + " does not return to v1 after |p(k)|+1 edges", advisory});
    }

    // arcs: maximal paths whose inner vertices have in- and out-degree 1
    std::vector<std::size_t> deg(g.vertices.size(), 0), indeg(g.vertices.size(), 0);
    for (auto& e : g.edges) ++deg[e.from], ++indeg[e.to];
    auto plain = [&](std::uint32_t v) { return deg[v] == 1 && indeg[v] == 1; };
    std::size_t arcs = 0, covered = 0, expected_arcs = 0;
    for (std::uint32_t s0 = 0; s0 < g.vertices.size(); ++s0) {
        if (plain(s0)) continue;
        expected_arcs += deg[s0];
        for (auto& e : g.edges) {
            if (e.from != s0) continue;
            ++arcs;
            std::size_t len = 1;
            for (auto v = e.to; plain(v) && len <= g.edges.size(); ++len)
                v = std::lower_bound(g.edges.begin(), g.edges.end(), v,
                                     [](const DeBruijnEdge& x, std::uint32_t y) { return x.from < y; })->to;
            covered += len;
        }
    }
    if (arcs != expected_arcs || covered != g.edges.size())
        out.push_back({"arcs cover " + std::to_string(covered) + " of " + std::to_string(g.edges.size()) + " edges", advisory});
    return out;
}

// palindromic factors of length L >= 1, closed form
inline BigInt palindrome_formula(const Coding& c, std::size_t Lsz) {
    if (Lsz == 0) fail(ErrorKind::InvalidArgument, "palindrome formula needs L >= 1");
    detail::Lengths len(c);
    BigInt L = Lsz;
    BigInt Lm2 = L % 2;
    if (L <= len(0)) return BigInt(detail::alpha_size(c, 0) - 1) * Lm2 + 1;
    long k = static_cast<long>(len.level_at(L, 0));
    BigInt Pk = len(k), P1 = len(k - 1), P2 = len(k - 2);
    BigInt r = L % (P1 + 1), rt = L % (P2 + 1);
    auto mod2 = [](const BigInt& x) { return BigInt(((x % 2) + 2) % 2); };
    BigInt v = BigInt(detail::alpha_size(c, k) - 1) * Lm2 + mod2(P1 + 1 - r);
    if (L <= Pk - P1 - 1)
        v += mod2(r);
    else if (detail::in_tail(c, k + 1, c.letter(static_cast<std::size_t>(k))))
        v += mod2(r);
    if (detail::in_tail(c, k, c.letter(static_cast<std::size_t>(k - 1))) && L <= 2 * P1 - P2)
        v += mod2(rt) + mod2(P2 + 1 - rt) - Lm2;
    return v;
}

inline std::size_t palindrome_oracle(const Coding& c, std::size_t L, unsigned jobs = 1) {
    auto lang = language(c, L, jobs);
    return static_cast<std::size_t>(
        std::count_if(lang.words.begin(), lang.words.end(), [](const Word& w) { return is_palindrome(w); }));
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
    std::string o;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') o += '\\';
        o += ch;
    }
    return o;
}
} // namespace detail

// right-special vertices doubled and filled; palindromes boxed; each
// reflection pair {u, rev u} shares a rank
inline void write_dot(std::ostream& os, const DeBruijnGraph& g, const Alphabet& abc) {
    auto label = [&](std::uint32_t v) {
        auto s = abc.render(g.vertices.words[v]);
        return s.empty() ? std::string("ε") : s;
    };
    std::vector<std::size_t> deg(g.vertices.size(), 0);
    for (auto& rs : g.right_special) deg[rs.vertex] = rs.out_degree;
    os << "digraph G" << g.L << " {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=ellipse, fontname=\"monospace\"];\n";
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        os << "  v" << v << " [label=\"" << detail::dot_escape(label(v)) << "\"";
        if (is_palindrome(g.vertices.words[v])) os << ", shape=box";
        if (deg[v] >= 2) os << ", style=filled, fillcolor=lightgray, peripheries=2";
        os << "];\n";
    }
    for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
        auto r = g.vertices.index_of(reversed(g.vertices.words[v]));
        if (r && *r > v) os << "  { rank=same; v" << v << "; v" << *r << "; }\n";
    }
    for (auto& e : g.edges)
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << detail::dot_escape(abc.name(e.label)) << "\"];\n";
    os << "}\n";
}

} // namespace toeplitz
