#include "robin/stats.hpp"
#include "robin/errors.hpp"
#include "robin/rectangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace robin::stats {

std::vector<std::pair<std::size_t, double>> cumulative_mean(const GapSeries& gaps)
{
    if (gaps.entries.empty())
        throw std::domain_error("cumulative_mean: empty gap series");
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(gaps.entries.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < gaps.entries.size(); ++i) {
        sum += gaps.entries[i].d;
        out.emplace_back(i + 1, sum / double(i + 1));
    }
    return out;
}

bool is_sum_two_squares(std::int64_t m)
{
    if (m < 0)
        throw std::domain_error("is_sum_two_squares: requires m >= 0");
    if (m == 0)
        return true;
    while (m % 2 == 0)
        m /= 2;
    for (std::int64_t p = 3; p * p <= m; p += 2) {
        if (m % p != 0)
            continue;
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 != 0)
            return false;
    }
    if (m > 1 && m % 4 == 3)
        return false;
    return true;
}

std::vector<std::int64_t> list_s_values(std::int64_t limit)
{
    if (limit < 0)
        throw std::domain_error("list_s_values: requires limit >= 0");
    // smallest prime factor sieve, then the parity test per number
    const std::size_t n = std::size_t(limit) + 1;
    std::vector<std::int32_t> spf(n, 0);
    for (std::size_t i = 2; i < n; ++i) {
        if (spf[i] != 0)
            continue;
        for (std::size_t j = i; j < n; j += i)
            if (spf[j] == 0)
                spf[j] = std::int32_t(i);
    }
    std::vector<std::int64_t> out;
    for (std::int64_t m = 0; m <= limit; ++m) {
        std::int64_t v = m;
        bool ok = true;
        while (v > 1) {
            const std::int64_t p = spf[std::size_t(v)];
            int e = 0;
            while (v % p == 0) {
                v /= p;
                ++e;
            }
            if (p % 4 == 3 && e % 2 != 0) {
                ok = false;
                break;
            }
        }
        if (ok)
            out.push_back(m);
    }
    return out;
}

SpacingStats spacing_cdf(std::span<const double> ordered_values, std::span<const double> y_grid)
{
    if (ordered_values.size() < 2)
        throw std::domain_error("spacing_cdf: need at least two levels");
    const std::size_t n_gaps = ordered_values.size() - 1;
    const double span = ordered_values.back() - ordered_values.front();
    if (!(span > 0.0))
        throw std::domain_error("spacing_cdf: degenerate window");
    const double c = span / double(n_gaps);

    std::vector<double> deltas(n_gaps);
    for (std::size_t i = 0; i < n_gaps; ++i)
        deltas[i] = (ordered_values[i + 1] - ordered_values[i]) / c;
    std::sort(deltas.begin(), deltas.end());

    SpacingStats st;
    st.sample_count = n_gaps;
    st.normalization = c;
    st.cdf_samples.reserve(y_grid.size());
    for (double y : y_grid) {
        const auto it = std::upper_bound(deltas.begin(), deltas.end(), y);
        st.cdf_samples.emplace_back(y, double(it - deltas.begin()) / double(n_gaps));
    }
    return st;
}

SpacingStats spacing_cdf(const Spectrum& spectrum, std::span<const double> y_grid)
{
    const std::vector<double> vals = spectrum.expanded();
    return spacing_cdf(std::span<const double>(vals), y_grid);
}

ClusterDecomposition cluster_analysis(double sigma, std::size_t N, Exec exec)
{
    const Spectrum rob = rectangle::desym_square_spectrum(sigma, N, exec);
    const Spectrum neu = rectangle::desym_square_spectrum(0.0, N, exec);
    if (rob.levels.size() < N || neu.levels.size() < N)
        throw convergence_error("cluster_analysis: spectra shorter than requested rank");

    ClusterDecomposition cd;
    std::size_t i = 0;
    while (i < N) {
        const std::int64_t s = std::int64_t(neu.levels[i].a) * neu.levels[i].a
                             + std::int64_t(neu.levels[i].b) * neu.levels[i].b;
        std::size_t j = i;
        double lo = rob.levels[i].value, hi = rob.levels[i].value;
        while (j + 1 < N) {
            const Level& l = neu.levels[j + 1];
            if (std::int64_t(l.a) * l.a + std::int64_t(l.b) * l.b != s)
                break;
            ++j;
            lo = std::min(lo, rob.levels[j].value);
            hi = std::max(hi, rob.levels[j].value);
        }
        cd.s_values.push_back(s);
        cd.cluster_sizes.push_back(std::int32_t(j - i + 1));
        cd.diameters.push_back(hi - lo);
        i = j + 1;
    }
    // the last cluster may be truncated by the rank window; drop it so every
    // reported diameter covers a full multiplicity class
    if (cd.s_values.size() > 1) {
        cd.s_values.pop_back();
        cd.cluster_sizes.pop_back();
        cd.diameters.pop_back();
    }
    return cd;
}

} // namespace robin::stats
