#pragma once

// Test-only reference implementations. Nothing here may call into the code it
// checks: the solvers, distributions and reservoirs are written out by hand.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

namespace qrc::testing {

using Matrix = std::vector<std::vector<double>>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> gauss_solve(Matrix a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) throw std::runtime_error("gauss_solve: singular system");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double acc = b[i];
        for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// Ridge solution from the normal equations (lambda I + X^T X) w = X^T y.
inline std::vector<double> batch_ridge(const Matrix& rows, const std::vector<double>& y, double lambda) {
    const std::size_t d = rows.front().size();
    Matrix gram(d, std::vector<double>(d, 0.0));
    std::vector<double> rhs(d, 0.0);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            rhs[i] += rows[k][i] * y[k];
            for (std::size_t j = 0; j < d; ++j) gram[i][j] += rows[k][i] * rows[k][j];
        }
    }
    for (std::size_t i = 0; i < d; ++i) gram[i][i] += lambda;
    return gauss_solve(std::move(gram), std::move(rhs));
}

/// P(X <= k) for X ~ Binomial(n, p), by summing the pmf term by term.
inline double binomial_cdf_bruteforce(int n, double p, int k) {
    double cdf = 0.0;
    for (int i = 0; i <= k; ++i) {
        const double log_pmf = std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) +
                               i * std::log(p) + (n - i) * std::log1p(-p);
        cdf += std::exp(log_pmf);
    }
    return cdf;
}

/// Classical delay line: row k holds drive[k-1], ..., drive[k-d] (0 before the start).
inline std::vector<std::vector<double>> delay_line_states(const std::vector<double>& drive, int taps) {
    std::vector<std::vector<double>> rows(drive.size(), std::vector<double>(static_cast<std::size_t>(taps), 0.0));
    for (std::size_t k = 0; k < drive.size(); ++k) {
        for (int j = 1; j <= taps; ++j) {
            if (k >= static_cast<std::size_t>(j)) rows[k][static_cast<std::size_t>(j - 1)] = drive[k - j];
        }
    }
    return rows;
}

/// Average ranks (ties share the mean rank), 1-based.
inline std::vector<double> ranks(const std::vector<double>& x) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
        i = j + 1;
    }
    return r;
}

inline double pearson_plain(const std::vector<double>& a, const std::vector<double>& b) {
    const double ma = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
    const double mb = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

struct SpearmanResult {
    double rho = 0.0;
    double p_value = 1.0;  ///< two-sided, t approximation with n - 2 degrees of freedom
};

inline SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
    SpearmanResult out;
    out.rho = pearson_plain(ranks(x), ranks(y));
    const double n = static_cast<double>(x.size());
    if (std::abs(out.rho) >= 1.0) {
        out.p_value = 0.0;
        return out;
    }
    const double t = out.rho * std::sqrt((n - 2.0) / (1.0 - out.rho * out.rho));
    const boost::math::students_t dist(n - 2.0);
    out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
    return out;
}

/// Least-squares slope of y against x.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace qrc::testing
