#include <CLI11.hpp>
#include <json.hpp>

#include <toeplitz/toeplitz.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace toeplitz;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

// every failure leaving main carries the flag it blames
struct CliError {
    int code;
    std::string flag;
    std::string msg;
};

[[noreturn]] void usage(const std::string& flag, const std::string& msg) { throw CliError{kUsage, flag, msg}; }

int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::HorizonExceeded:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow:
    case ErrorKind::PrefixTooShort: return kBudget;
    default: return kUsage;
    }
}

struct Globals {
    std::string coding, preset;
    std::size_t budget = kDefaultBudget;
    unsigned jobs = default_jobs();
    std::optional<std::string> json;  // "" = stdout
    std::string csv;
    bool check = false;
    std::string periods;
    std::size_t gen_horizon = kDefaultGeneratorHorizon;
};

// run fn; library errors get the flag that most plausibly caused them
template <class Fn>
auto blame(const std::string& flag, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        std::string f = flag;
        if (e.kind() == ErrorKind::BudgetExceeded) f = "--budget";
        throw CliError{exit_code_for(e.kind()), f, e.what()};
    }
}

Coding load_coding(const Globals& g) {
    if (g.coding.empty() == g.preset.empty()) usage("--coding", "give exactly one of --coding or --preset");
    const std::string flag = g.coding.empty() ? "--preset" : "--coding";
    ParseOptions opt;
    opt.generator_horizon = g.gen_horizon;
    if (!g.periods.empty()) {
        std::stringstream ss(g.periods);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                opt.periods.push_back(detail::parse_uint(tok, "--periods"));
            } catch (const Error& e) {
                usage("--periods", e.what());
            }
            if (opt.periods.back() < 2) usage("--periods", "every period must be at least 2");
        }
    }
    if (g.budget == 0) usage("--budget", "budget must be positive");
    Coding c = blame(flag, [&] {
        std::string spec = g.coding.empty() ? preset_spec(g.preset) : g.coding;
        return parse_coding(spec, opt);
    });
    return c.with_budget(g.budget);
}

// write to a file, or stdout for an empty path
void emit(const std::string& path, const std::string& flag, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) usage(flag, "cannot open '" + path + "' for writing");
    f << text;
    if (!f) usage(flag, "write to '" + path + "' failed");
}

void emit_json(const Globals& g, const ordered_json& j) { emit(*g.json, "--json", j.dump(2) + "\n"); }

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void reject(const Globals& g, const char* cmd, bool csv, bool check) {
    if (!csv && !g.csv.empty()) usage("--csv", std::string("not supported by '") + cmd + "'");
    if (!check && g.check) usage("--check", std::string("not supported by '") + cmd + "'");
}

std::string render(const Coding& c, std::span<const Letter> w) { return c.alphabet().render(w); }

// ---- subcommands ----

int cmd_gen(const Globals& g, std::size_t length, const std::string& out) {
    reject(g, "gen", false, false);
    auto c = load_coding(g);
    auto w = blame("--length", [&] { return word_prefix(c, length); });
    if (g.json) {
        ordered_json j{{"coding", c.describe()}, {"length", length}, {"word", render(c, w)}};
        emit_json(g, j);
    }
    if (!g.json || !out.empty()) emit(out, "--out", render(c, w) + "\n");
    return kOk;
}

int cmd_language(const Globals& g, std::size_t L) {
    reject(g, "language", true, false);
    auto c = load_coding(g);
    auto lang = blame("-L", [&] { return language(c, L, g.jobs); });
    if (g.json) {
        ordered_json words = ordered_json::array();
        for (auto& w : lang.words) words.push_back(render(c, w));
        emit_json(g, {{"L", L}, {"count", lang.size()}, {"words", words}});
    }
    if (!g.csv.empty()) {
        std::string s = "word\n";
        for (auto& w : lang.words) s += render(c, w) + "\n";
        emit(g.csv, "--csv", s);
    }
    if (!g.json && g.csv.empty()) {
        std::string s;
        for (auto& w : lang.words) s += render(c, w) + "\n";
        std::cout << s;
    }
    return kOk;
}

int cmd_complexity(const Globals& g, std::size_t max_len) {
    reject(g, "complexity", true, true);
    auto c = load_coding(g);
    auto recs = blame("--max-len", [&] { return complexity_profile(c, max_len, g.check, g.jobs); });
    int rc = kOk;
    std::string csv = "L,formula,oracle,growth\n";
    ordered_json rows = ordered_json::array();
    for (auto& r : recs) {
        bool bad = r.oracle && BigInt(*r.oracle) != r.formula;
        if (bad) {
            rc = kMismatch;
            std::cerr << "mismatch at L=" << r.L << ": formula " << r.formula << ", oracle " << *r.oracle << "\n";
        }
        csv += std::to_string(r.L) + "," + r.formula.str() + "," + (r.oracle ? std::to_string(*r.oracle) : "") + "," +
               r.growth.str() + "\n";
        ordered_json row{{"L", r.L}, {"formula", r.formula.str()}};
        row["oracle"] = r.oracle ? ordered_json(*r.oracle) : ordered_json(nullptr);
        row["growth"] = r.growth.str();
        rows.push_back(row);
    }
    if (g.json) emit_json(g, {{"coding", c.describe()}, {"checked", g.check}, {"records", rows}});
    if (!g.csv.empty() || !g.json) emit(g.csv, "--csv", csv);
    return rc;
}

int cmd_palindrome(const Globals& g, std::size_t max_len) {
    reject(g, "palindrome", true, true);
    auto c = load_coding(g);
    if (max_len == 0) usage("--max-len", "must be at least 1");
    int rc = kOk;
    std::string csv = "L,formula,oracle\n";
    ordered_json rows = ordered_json::array();
    blame("--max-len", [&] {
        for (std::size_t L = 1; L <= max_len; ++L) {
            BigInt f = palindrome_formula(c, L);
            std::optional<std::size_t> o;
            if (g.check) o = palindrome_oracle(c, L, g.jobs);
            if (o && BigInt(*o) != f) {
                rc = kMismatch;
                std::cerr << "mismatch at L=" << L << ": formula " << f << ", oracle " << *o << "\n";
            }
            csv += std::to_string(L) + "," + f.str() + "," + (o ? std::to_string(*o) : "") + "\n";
            ordered_json row{{"L", L}, {"formula", f.str()}};
            row["oracle"] = o ? ordered_json(*o) : ordered_json(nullptr);
            rows.push_back(row);
        }
        return 0;
    });
    if (g.json) emit_json(g, {{"coding", c.describe()}, {"checked", g.check}, {"records", rows}});
    if (!g.csv.empty() || !g.json) emit(g.csv, "--csv", csv);
    return rc;
}

int cmd_debruijn(const Globals& g, std::size_t L, const std::string& dot) {
    reject(g, "debruijn", false, true);
    auto c = load_coding(g);
    auto gr = blame("-L", [&] { return build_graph(c, L, g.jobs); });
    auto findings = blame("-L", [&] { return validate_annotations(c, gr); });
    bool sc = strongly_connected(gr), refl = reflection_check(gr);
    auto pals = palindromic_vertices(gr);
    auto fixed = reflection_fixed_points(gr);

    int rc = kOk;
    if (g.check) {
        auto expect_v = blame("-L", [&] { return complexity_formula(c, L); });
        auto expect_e = blame("-L", [&] { return complexity_formula(c, L + 1); });
        auto fail_check = [&](const std::string& m) {
            std::cerr << "check failed: " << m << "\n";
            rc = kMismatch;
        };
        if (BigInt(gr.vertices.size()) != expect_v) fail_check("vertex count differs from p(L)");
        if (BigInt(gr.edges.size()) != expect_e) fail_check("edge count differs from p(L+1)");
        if (!sc) fail_check("graph is not strongly connected");
        if (!refl) fail_check("reflection is not an anti-automorphism");
        if (pals != fixed) fail_check("palindromes differ from reflection fixed points");
        for (auto& f : findings)
            if (!f.advisory) fail_check("annotation: " + f.message);
    }

    if (!dot.empty()) {
        std::ostringstream os;
        write_dot(os, gr, c.alphabet());
        emit(dot, "--dot", os.str());
    }
    auto word_or_null = [&](const std::optional<Word>& w) { return w ? ordered_json(render(c, *w)) : ordered_json(nullptr); };
    if (g.json) {
        ordered_json j;
        j["L"] = L;
        j["level"] = gr.level ? ordered_json(*gr.level) : ordered_json(nullptr);
        ordered_json vs = ordered_json::array();
        for (auto& w : gr.vertices.words) vs.push_back(render(c, w));
        j["vertices"] = vs;
        ordered_json es = ordered_json::array();
        for (auto& e : gr.edges) es.push_back({{"from", e.from}, {"to", e.to}, {"label", c.alphabet().name(e.label)}});
        j["edges"] = es;
        ordered_json rs = ordered_json::array();
        for (auto& r : gr.right_special) rs.push_back({{"vertex", r.vertex}, {"out_degree", r.out_degree}});
        j["right_special"] = rs;
        j["u1"] = word_or_null(gr.u1);
        j["v1"] = word_or_null(gr.v1);
        j["u2"] = word_or_null(gr.u2);
        j["v2"] = word_or_null(gr.v2);
        j["strongly_connected"] = sc;
        j["reflection"] = refl;
        j["palindromes"] = pals;
        ordered_json fs = ordered_json::array();
        for (auto& f : findings) fs.push_back({{"message", f.message}, {"advisory", f.advisory}});
        j["annotation_findings"] = fs;
        emit_json(g, j);
    } else {
        std::ostringstream os;
        os << "L=" << L << " vertices=" << gr.vertices.size() << " edges=" << gr.edges.size()
           << " right_special=" << gr.right_special.size() << " palindromes=" << pals.size() << "\n";
        os << "strongly_connected=" << (sc ? "yes" : "no") << " reflection=" << (refl ? "yes" : "no") << "\n";
        if (gr.u1) os << "u1=" << render(c, *gr.u1) << " v1=" << render(c, *gr.v1) << "\n";
        if (gr.u2) os << "u2=" << render(c, *gr.u2) << " v2=" << render(c, *gr.v2) << "\n";
        for (auto& f : findings) os << (f.advisory ? "note: " : "finding: ") << f.message << "\n";
        std::cout << os.str();
    }
    return rc;
}

ordered_json alpha_json(const AlphaVerdict& v) {
    ordered_json w = ordered_json::array();
    for (auto& s : v.samples)
        w.push_back({{"i", s.i}, {"m", s.m}, {"kappa", s.kappa}, {"inner_product", s.inner_product.str()},
                     {"log_ratio", num(s.log_ratio)}});
    ordered_json j{{"alpha", to_string(v.alpha)}, {"kind", std::string(to_string(v.kind))},
                   {"verdict", std::string(to_string(v.verdict))}, {"witness", w}};
    if (v.period) j["period"] = {{"start", v.period->start}, {"length", v.period->period}};
    if (v.kind == VerdictKind::Exact && v.verdict == Verdict::Satisfied) j["limsup_product"] = v.limsup_product.str();
    j["trend"] = std::string(to_string(v.trend));
    j["reason"] = v.reason;
    return j;
}

int cmd_repetitivity(const Globals& g, std::size_t max_len, const std::string& alpha_s, std::size_t horizon) {
    reject(g, "repetitivity", true, true);
    auto c = load_coding(g);
    Rational alpha;
    try {
        alpha = parse_rational(alpha_s);
    } catch (const Error& e) {
        usage("--alpha", e.what());
    }
    if (alpha <= 0) usage("--alpha", "alpha must be positive");
    auto recs = blame("--max-len", [&] { return repetitivity_profile(c, max_len, g.check, g.jobs); });
    auto v = blame("--horizon", [&] { return alpha_verdict(c, alpha, horizon); });
    int rc = kOk;
    std::string csv = "L,formula,oracle\n";
    for (auto& r : recs) {
        if (r.formula && r.oracle && *r.formula != BigInt(*r.oracle)) {
            rc = kMismatch;
            std::cerr << "mismatch at L=" << r.L << ": formula " << *r.formula << ", oracle " << *r.oracle << "\n";
        }
        csv += std::to_string(r.L) + "," + (r.formula ? r.formula->str() : "") + "," +
               (r.oracle ? std::to_string(*r.oracle) : "") + "\n";
    }
    if (!g.csv.empty()) emit(g.csv, "--csv", csv);
    auto j = alpha_json(v);
    if (g.json) {
        emit_json(g, j);
    } else {
        if (g.csv.empty()) std::cout << csv;
        std::cout << j.dump() << "\n";
    }
    return rc;
}

int cmd_bosh(const Globals& g, std::size_t horizon, std::optional<std::size_t> eta_L, std::optional<std::size_t> prefix) {
    reject(g, "bosh", false, true);
    auto c = load_coding(g);
    if (prefix && !eta_L) usage("--prefix", "needs --eta");
    auto v = blame("--horizon", [&] { return bosh_verdict(c, horizon); });
    ordered_json j;
    j["coding"] = c.describe();
    j["kind"] = std::string(to_string(v.kind));
    j["verdict"] = std::string(to_string(v.verdict));
    ordered_json w = ordered_json::array();
    for (auto& x : v.witness)
        w.push_back({{"i", x.i}, {"m", x.m}, {"kappa_prev", x.kappa_prev}, {"product", x.product.str()}});
    j["witness"] = w;
    if (v.period) j["period"] = {{"start", v.period->start}, {"length", v.period->period}};
    j["trend"] = std::string(to_string(v.trend));
    j["reason"] = v.reason;
    int rc = kOk;
    if (v.liminf) {
        j["liminf"] = {{"values", v.liminf->values},
                       {"liminf", v.liminf->liminf ? ordered_json(*v.liminf->liminf) : ordered_json(nullptr)},
                       {"verdict", std::string(to_string(v.liminf->verdict))},
                       {"agrees", v.liminf->agrees}};
        if (g.check && !v.liminf->agrees) {
            std::cerr << "check failed: liminf criterion disagrees with the product criterion\n";
            rc = kMismatch;
        }
    }
    if (v.power_of_two) {
        j["power_of_two"] = {{"windows", v.power_of_two->windows}, {"matches_products", v.power_of_two->matches_products}};
        if (g.check && !v.power_of_two->matches_products) {
            std::cerr << "check failed: revisit windows differ from log2(products) + 1\n";
            rc = kMismatch;
        }
    }
    if (eta_L) {
        std::size_t M = 0;
        if (prefix) {
            M = *prefix;
        } else {
            auto k = blame("--eta", [&] { return cover_level(c, *eta_L); });
            M = blame("--eta", [&] { return to_size(10 * (block_len(c, static_cast<long>(k)) + 1)); });
        }
        auto est = blame("--prefix", [&] { return estimate_eta(c, *eta_L, M, g.jobs); });
        j["eta"] = {{"L", est.L},
                    {"M", est.M},
                    {"min_frequency", to_string(est.min_frequency)},
                    {"min_frequency_decimal", num(est.min_frequency.convert_to<double>())},
                    {"argmin", render(c, est.argmin)},
                    {"language_size", est.language_size}};
    }
    if (g.json)
        emit_json(g, j);
    else
        std::cout << j.dump() << "\n";
    return rc;
}

std::vector<double> parse_energies(const std::string& s) {
    double lo, hi;
    std::size_t steps;
    char c1, c2, extra;
    std::istringstream is(s);
    if (!(is >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || (is >> extra))
        usage("--energies", "expected lo:hi:steps, got '" + s + "'");
    if (steps < 1) usage("--energies", "steps must be at least 1");
    if (!(hi >= lo)) usage("--energies", "hi must not be below lo");
    std::vector<double> out;
    for (std::size_t i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1));
    return out;
}

int cmd_spectrum(const Globals& g, const std::string& qs, const std::string& ps, std::size_t N, double delta,
                 const std::string& energies, std::size_t lyap_n) {
    reject(g, "spectrum", true, true);
    auto c = load_coding(g);
    CoefficientMap<double> cm;
    try {
        cm.q = parse_letter_values(qs, c.alphabet(), 0.0, "--q");
    } catch (const Error& e) {
        usage("--q", e.what());
    }
    try {
        cm.p = parse_letter_values(ps, c.alphabet(), 1.0, "--p");
    } catch (const Error& e) {
        usage("--p", e.what());
    }
    for (double p : cm.p)
        if (p == 0) usage("--p", "off-diagonal values must be nonzero");
    if (!(delta > 0)) usage("--delta", "must be positive");
    auto sa = blame("--size", [&] { return finite_section_spectrum(c, cm, N, delta); });
    if (sa.degenerate_coefficients)
        std::cerr << "warning: every eventual letter carries the same (p, q); the coefficients are eventually periodic\n";

    int rc = kOk;
    if (g.check) {
        // eigenvalues inside [min q - 2 max|p|, max q + 2 max|p|]
        double qmin = *std::min_element(cm.q.begin(), cm.q.end()), qmax = *std::max_element(cm.q.begin(), cm.q.end());
        double pmax = 0;
        for (double p : cm.p) pmax = std::max(pmax, std::abs(p));
        for (double e : sa.eigenvalues)
            if (e < qmin - 2 * pmax - 1e-9 || e > qmax + 2 * pmax + 1e-9) {
                std::cerr << "check failed: eigenvalue " << num(e) << " outside the a-priori bound\n";
                rc = kMismatch;
                break;
            }
    }

    std::vector<double> grid;
    std::vector<LyapunovEstimate> lyap;
    if (!energies.empty()) {
        grid = parse_energies(energies);
        if (lyap_n == 0) usage("--lyapunov", "must be at least 1");
        lyap = blame("--lyapunov", [&] {
            return parallel_map<LyapunovEstimate>(grid.size(), g.jobs,
                                                  [&](std::size_t i) { return lyapunov_estimate(c, cm, grid[i], lyap_n); });
        });
    }

    std::string csv;
    if (grid.empty()) {
        csv = "j,eigenvalue\n";
        for (std::size_t i = 0; i < sa.eigenvalues.size(); ++i) csv += std::to_string(i) + "," + num(sa.eigenvalues[i]) + "\n";
    } else {
        csv = "E,n,lyapunov_quarter,lyapunov_half,lyapunov\n";
        for (std::size_t i = 0; i < grid.size(); ++i) {
            auto& s = lyap[i].samples;
            csv += num(grid[i]) + "," + std::to_string(lyap_n) + "," + num(s[0].second) + "," + num(s[1].second) + "," +
                   num(s[2].second) + "\n";
        }
    }
    if (!g.csv.empty()) emit(g.csv, "--csv", csv);

    ordered_json j;
    j["coding"] = c.describe();
    j["N"] = sa.N;
    j["delta"] = num(sa.delta);
    ordered_json ev = ordered_json::array();
    for (double e : sa.eigenvalues) ev.push_back(num(e));
    j["eigenvalues"] = ev;
    ordered_json cover = ordered_json::array();
    for (auto& iv : sa.cover) cover.push_back({num(iv.lo), num(iv.hi)});
    j["cover"] = cover;
    j["cover_length"] = num(sa.cover_length());
    j["degenerate_coefficients"] = sa.degenerate_coefficients;
    if (!grid.empty()) {
        ordered_json ly = ordered_json::array();
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ordered_json samples = ordered_json::array();
            for (auto& [n, v] : lyap[i].samples) samples.push_back({{"n", n}, {"value", num(v)}});
            ly.push_back({{"E", num(grid[i])}, {"value", num(lyap[i].value)}, {"samples", samples}});
        }
        j["lyapunov"] = ly;
    }
    if (g.json) {
        emit_json(g, j);
    } else if (g.csv.empty()) {
        std::cout << csv;
    } else {
        std::cout << "N=" << sa.N << " cover_length=" << num(sa.cover_length()) << " intervals=" << sa.cover.size() << "\n";
    }
    return rc;
}

int cmd_presets(const Globals& g) {
    reject(g, "presets", false, false);
    auto list = preset_list();
    if (g.json) {
        ordered_json a = ordered_json::array();
        for (auto& p : list) a.push_back({{"name", p.name}, {"spec", p.example_spec}, {"summary", p.summary}});
        emit_json(g, a);
    } else {
        for (auto& p : list) std::cout << p.name << "\t" << p.example_spec << "\t" << p.summary << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simple Toeplitz subshifts: words, languages, complexity, graphs, repetitivity, spectra"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    std::string json_path;
    auto* coding_opt = app.add_option("--coding", g.coding, "coding spec, e.g. \"a:2 | x:2 y:2 z:2\"");
    auto* preset_opt = app.add_option("--preset", g.preset, "grigorchuk | l-grigorchuk(l1,...) | liuqu");
    coding_opt->excludes(preset_opt);
    app.add_option("--budget", g.budget, "maximum symbols materialized per block");
    app.add_option("--jobs", g.jobs, "worker threads (default: logical cores)")->check(CLI::Range(1u, 1024u));
    auto* json_opt = app.add_option("--json", json_path, "emit JSON (to a file if given, else stdout)")->expected(0, 1);
    app.add_option("--csv", g.csv, "write tabular output as CSV to this file");
    app.add_flag("--check", g.check, "compare closed forms against brute-force oracles; exit 1 on mismatch");
    app.add_option("--periods", g.periods, "generator periods, comma separated, cycled (default all 2)");
    app.add_option("--gen-horizon", g.gen_horizon, "indices materialized for generator tails")->check(CLI::PositiveNumber);

    std::size_t gen_len = 0;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "print a prefix of the limit word");
    gen->add_option("--length", gen_len, "prefix length")->required();
    gen->add_option("--out", gen_out, "write to this file instead of stdout");

    std::size_t lang_L = 0;
    auto* lang = app.add_subcommand("language", "list the factors of one length");
    lang->add_option("-L", lang_L, "factor length")->required();

    std::size_t cx_max = 0;
    auto* cx = app.add_subcommand("complexity", "complexity p(L) for L = 0..max-len");
    cx->add_option("--max-len", cx_max, "largest L")->required();

    std::size_t pal_max = 0;
    auto* pal = app.add_subcommand("palindrome", "palindrome complexity for L = 1..max-len");
    pal->add_option("--max-len", pal_max, "largest L")->required();

    std::size_t db_L = 0;
    std::string db_dot;
    auto* db = app.add_subcommand("debruijn", "de Bruijn graph of length-L factors");
    db->add_option("-L", db_L, "vertex word length")->required()->check(CLI::PositiveNumber);
    db->add_option("--dot", db_dot, "write Graphviz DOT to this file");

    std::size_t rep_max = 0, rep_horizon = 8;
    std::string rep_alpha = "1";
    auto* rep = app.add_subcommand("repetitivity", "repetitivity R(L) and the alpha-repetitivity verdict");
    rep->add_option("--max-len", rep_max, "largest L")->required();
    rep->add_option("--alpha", rep_alpha, "exponent, e.g. 1, 3/2 or 1.5")->capture_default_str();
    rep->add_option("--horizon", rep_horizon, "m-sequence samples")->capture_default_str()->check(CLI::PositiveNumber);

    std::size_t b_horizon = 8;
    std::optional<std::size_t> b_eta, b_prefix;
    auto* bosh = app.add_subcommand("bosh", "Boshernitzan condition verdict and frequency estimate");
    bosh->add_option("--horizon", b_horizon, "m-sequence samples")->capture_default_str()->check(CLI::PositiveNumber);
    bosh->add_option("--eta", b_eta, "estimate the minimal frequency of length-L factors");
    bosh->add_option("--prefix", b_prefix, "prefix length for --eta (default 10(|p(k)|+1))");

    std::string sp_q = "const=0", sp_p = "const=1", sp_energies;
    std::size_t sp_size = 256, sp_lyap = 4096;
    double sp_delta = 0.05;
    auto* sp = app.add_subcommand("spectrum", "finite-section spectra and Lyapunov estimates");
    sp->add_option("--q", sp_q, "diagonal values per letter")->capture_default_str();
    sp->add_option("--p", sp_p, "off-diagonal values per letter")->capture_default_str();
    sp->add_option("--size", sp_size, "finite section size N")->capture_default_str()->check(CLI::Range(std::size_t{2}, std::size_t{1} << 16));
    sp->add_option("--delta", sp_delta, "cover half-width")->capture_default_str();
    sp->add_option("--energies", sp_energies, "Lyapunov grid lo:hi:steps");
    sp->add_option("--lyapunov", sp_lyap, "cocycle length n for the grid")->capture_default_str();

    auto* presets = app.add_subcommand("presets", "list named codings");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (json_opt->count() > 0) g.json = json_path;

    try {
        if (*gen) return cmd_gen(g, gen_len, gen_out);
        if (*lang) return cmd_language(g, lang_L);
        if (*cx) return cmd_complexity(g, cx_max);
        if (*pal) return cmd_palindrome(g, pal_max);
        if (*db) return cmd_debruijn(g, db_L, db_dot);
        if (*rep) return cmd_repetitivity(g, rep_max, rep_alpha, rep_horizon);
        if (*bosh) return cmd_bosh(g, b_horizon, b_eta, b_prefix);
        if (*sp) return cmd_spectrum(g, sp_q, sp_p, sp_size, sp_delta, sp_energies, sp_lyap);
        if (*presets) return cmd_presets(g);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.flag << ": " << e.msg << "\n";
        return e.code;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    }
    return kUsage;
}
