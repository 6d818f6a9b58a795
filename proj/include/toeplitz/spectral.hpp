#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "coding.hpp"
#include "errors.hpp"
#include "words.hpp"

namespace toeplitz {

// p: off-diagonal (nonzero), q: diagonal, one value per letter
template <class T = double>
struct CoefficientMap {
    std::vector<T> p, q;

    static CoefficientMap uniform(std::size_t letters, T p0, T q0) { return {std::vector<T>(letters, p0), std::vector<T>(letters, q0)}; }

    void validate(std::size_t letters) const {
        if (p.size() < letters || q.size() < letters) fail(ErrorKind::InvalidArgument, "coefficient map misses letters");
        for (auto& x : p)
            if (x == T(0)) fail(ErrorKind::InvalidArgument, "off-diagonal coefficient p must be nonzero");
    }

    // every letter of the eventual alphabet carries the same (p, q): the
    // coefficient sequence is eventually constant, hence periodic
    bool degenerate(const Coding& c) const {
        auto ls = c.eventual_alphabet().letters();
        for (auto l : ls)
            if (p[l] != p[ls.front()] || q[l] != q[ls.front()]) return false;
        return true;
    }
};

template <class T>
struct Matrix2 {
    std::array<T, 4> a{T(1), T(0), T(0), T(1)};  // row major

    static Matrix2 identity() { return {}; }
    T& operator()(int r, int c) { return a[static_cast<std::size_t>(2 * r + c)]; }
    const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(2 * r + c)]; }
    T det() const { return a[0] * a[3] - a[1] * a[2]; }

    friend Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
        Matrix2 r;
        r.a = {x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
               x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]};
        return r;
    }
};

// largest singular value of a real 2x2 matrix
inline double operator_norm(const Matrix2<double>& m) {
    double s = m.a[0] * m.a[0] + m.a[1] * m.a[1] + m.a[2] * m.a[2] + m.a[3] * m.a[3];
    double d = m.det();
    double disc = std::max(0.0, s * s - 4 * d * d);
    return std::sqrt((s + std::sqrt(disc)) / 2);
}

// M^E at position k: [[(E - q(w_{k+1})) / p(w_{k+2}), -p(w_{k+1}) / p(w_{k+2})], [1, 0]]
template <class T>
Matrix2<T> transfer_matrix(const CoefficientMap<T>& cm, const T& E, Letter first, Letter second) {
    Matrix2<T> m;
    m.a = {(E - cm.q[first]) / cm.p[second], -cm.p[first] / cm.p[second], T(1), T(0)};
    return m;
}

// M(n, S^start w) = M(S^{start+n-1} w) ... M(S^start w)
template <class T>
Matrix2<T> transfer_cocycle(const Coding& c, const CoefficientMap<T>& cm, const T& E, std::size_t n, std::size_t start = 0) {
    cm.validate(c.alphabet().size());
    if (n == 0) return Matrix2<T>::identity();
    auto w = word_prefix(c, start + n + 2);
    Matrix2<T> acc;
    for (std::size_t k = start; k < start + n; ++k) acc = transfer_matrix(cm, E, w[k + 1], w[k + 2]) * acc;
    return acc;
}

struct LyapunovEstimate {
    double value = 0;
    std::vector<std::pair<std::size_t, double>> samples;  // (n/4, .), (n/2, .), (n, .)
};

// (1/n) ln ||M(n)||, the running product rescaled every 32 steps
inline LyapunovEstimate lyapunov_estimate(const Coding& c, const CoefficientMap<double>& cm, double E, std::size_t n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "lyapunov estimate needs n >= 1");
    cm.validate(c.alphabet().size());
    auto w = word_prefix(c, n + 2);
    std::vector<std::size_t> marks{std::max<std::size_t>(1, n / 4), std::max<std::size_t>(1, n / 2), n};
    LyapunovEstimate est;
    Matrix2<double> acc;
    double logsum = 0;
    std::size_t next_mark = 0;
    for (std::size_t k = 0; k < n; ++k) {
        acc = transfer_matrix(cm, E, w[k + 1], w[k + 2]) * acc;
        std::size_t steps = k + 1;
        if (steps % 32 == 0) {
            double nm = operator_norm(acc);
            logsum += std::log(nm);
            for (auto& x : acc.a) x /= nm;
        }
        while (next_mark < marks.size() && marks[next_mark] == steps) {
            est.samples.emplace_back(steps, (logsum + std::log(operator_norm(acc))) / static_cast<double>(steps));
            ++next_mark;
        }
    }
    est.value = est.samples.back().second;
    return est;
}

struct Interval {
    double lo = 0, hi = 0;
};

struct SpectrumApproximation {
    std::size_t N = 0;
    std::vector<double> eigenvalues;  // ascending
    double delta = 0;
    std::vector<Interval> cover;      // merged [lambda - delta, lambda + delta]
    bool degenerate_coefficients = false;

    double cover_length() const {
        double s = 0;
        for (auto& i : cover) s += i.hi - i.lo;
        return s;
    }
};

inline std::vector<Interval> merge_cover(const std::vector<double>& sorted, double delta) {
    std::vector<Interval> out;
    for (double x : sorted) {
        if (!out.empty() && x - delta <= out.back().hi)
            out.back().hi = std::max(out.back().hi, x + delta);
        else
            out.push_back({x - delta, x + delta});
    }
    return out;
}

// eigenvalues of a symmetric tridiagonal matrix (diag d, sub-diagonal e)
inline std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& d, const std::vector<double>& e) {
    Eigen::VectorXd dd = Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
    Eigen::VectorXd ee = Eigen::Map<const Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(dd, ee, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) fail(ErrorKind::InvalidArgument, "tridiagonal eigensolver did not converge");
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(out.begin(), out.end());
    return out;
}

// sites 0..N-1 of the limit word, zero boundary: H[k][k] = q(w_k), H[k][k-1] = H[k-1][k] = p(w_k)
inline SpectrumApproximation finite_section_spectrum(const Coding& c, const CoefficientMap<double>& cm, std::size_t N,
                                                     double delta = 0.05) {
    if (N < 2) fail(ErrorKind::InvalidArgument, "finite section needs N >= 2");
    cm.validate(c.alphabet().size());
    auto w = word_prefix(c, N);
    std::vector<double> d(N), e(N - 1);
    for (std::size_t k = 0; k < N; ++k) d[k] = cm.q[w[k]];
    for (std::size_t k = 1; k < N; ++k) e[k - 1] = cm.p[w[k]];
    SpectrumApproximation sa;
    sa.N = N;
    sa.delta = delta;
    sa.eigenvalues = tridiagonal_eigenvalues(d, e);
    sa.cover = merge_cover(sa.eigenvalues, delta);
    sa.degenerate_coefficients = cm.degenerate(c);
    return sa;
}

// "a=0,x=1" or "const=1"; letters not named keep `fallback`
inline std::vector<double> parse_letter_values(const std::string& s, const Alphabet& abc, double fallback,
                                               const std::string& flag) {
    std::vector<double> out(abc.size(), fallback);
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string::npos) j = s.size();
        std::string tok = s.substr(i, j - i);
        i = j + 1;
        if (tok.find_first_not_of(' ') == std::string::npos) {
            if (j >= s.size()) break;
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos) fail(ErrorKind::Parse, flag + ": expected letter=value, got '" + tok + "'");
        std::string name = tok.substr(0, eq);
        name.erase(0, name.find_first_not_of(' '));
        name.erase(name.find_last_not_of(' ') + 1);
        double v;
        try {
            std::size_t used = 0;
            v = std::stod(tok.substr(eq + 1), &used);
        } catch (const std::exception&) {
            fail(ErrorKind::Parse, flag + ": bad number in '" + tok + "'");
        }
        if (name == "const") {
            std::fill(out.begin(), out.end(), v);
        } else {
            auto id = abc.find(name);
            if (!id) fail(ErrorKind::Parse, flag + ": unknown letter '" + name + "'");
            out[*id] = v;
        }
        if (j >= s.size()) break;
    }
    return out;
}

} // namespace toeplitz
