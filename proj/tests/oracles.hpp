#pragma once

// Independent reference computations used to cross-check the library.
// Everything here is written as plain loops, deliberately separate from the
// implementations under test.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace oracles {

using Table = std::vector<std::vector<double>>;  // row-major

// Column-normalize then row-average, straight off the formulas.
inline std::vector<double> weights_by_normalize_then_average(const Table& a) {
    const std::size_t n = a.size();
    std::vector<double> colsum(n, 0.0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) colsum[j] += a[i][j];
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += a[i][j] / colsum[j];
        w[i] = acc / static_cast<double>(n);
    }
    return w;
}

// Dominant eigenvalue of a positive matrix by power iteration.
inline double principal_eigenvalue(const Table& a, int iterations = 2000) {
    const std::size_t n = a.size();
    std::vector<double> x(n, 1.0);
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
        double norm = 0.0;
        for (double v : y) norm += v * v;
        norm = std::sqrt(norm);
        for (double& v : y) v /= norm;
        // Rayleigh quotient of the normalized iterate.
        std::vector<double> ay(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) ay[i] += a[i][j] * y[j];
        double num = 0.0;
        for (std::size_t i = 0; i < n; ++i) num += y[i] * ay[i];
        lambda = num;
        x = y;
    }
    return lambda;
}

// Stationary vector of a column-stochastic matrix: solve (S - I) x = 0 with
// sum(x) = 1 by Gaussian elimination with partial pivoting.
inline std::vector<double> stationary_distribution(const Table& s) {
    const std::size_t n = s.size();
    Table m(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = s[i][j] - (i == j ? 1.0 : 0.0);
        m[i][n] = 0.0;
    }
    for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = 1.0;
    m[n - 1][n] = 1.0;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
        std::swap(m[pivot], m[col]);
        if (std::abs(m[col][col]) < 1e-14)
            throw std::runtime_error("stationary_distribution: singular system");
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const double factor = m[r][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[r][j] -= factor * m[col][j];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
    return x;
}

// The full ranking pipeline in one straight line: Euclidean column
// normalization, shared weights, ideal/anti-ideal by direction, Euclidean
// separations, closeness C = S- / (S+ + S-) with the 0.5 degenerate rule.
inline std::vector<double> topsis_closeness(const Table& decision,
                                            const std::vector<double>& weights,
                                            const std::vector<bool>& is_benefit) {
    const std::size_t m = decision.size();
    const std::size_t n = decision[0].size();

    Table v(m, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (std::size_t i = 0; i < m; ++i) sq += decision[i][j] * decision[i][j];
        const double norm = std::sqrt(sq);
        for (std::size_t i = 0; i < m; ++i)
            v[i][j] = norm == 0.0 ? 0.0 : weights[j] * decision[i][j] / norm;
    }

    std::vector<double> ideal(n), anti(n);
    for (std::size_t j = 0; j < n; ++j) {
        double lo = v[0][j], hi = v[0][j];
        for (std::size_t i = 1; i < m; ++i) {
            if (v[i][j] < lo) lo = v[i][j];
            if (v[i][j] > hi) hi = v[i][j];
        }
        ideal[j] = is_benefit[j] ? hi : lo;
        anti[j] = is_benefit[j] ? lo : hi;
    }

    std::vector<double> c(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double sp = 0.0, sm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            sp += (v[i][j] - ideal[j]) * (v[i][j] - ideal[j]);
            sm += (v[i][j] - anti[j]) * (v[i][j] - anti[j]);
        }
        sp = std::sqrt(sp);
        sm = std::sqrt(sm);
        c[i] = (sp + sm) == 0.0 ? 0.5 : sm / (sp + sm);
    }
    return c;
}

}  // namespace oracles
