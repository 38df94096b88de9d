#pragma once

#include "robin/spectrum.hpp"
#include "robin/threads.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace robin::stats {

// Running averages (N, mean of d_0..d_{N-1}) for N = 1..size.
std::vector<std::pair<std::size_t, double>> cumulative_mean(const GapSeries& gaps);

// Classic two-squares criterion: m is a sum of two squares iff every prime
// p = 3 (mod 4) divides m to an even power.
bool is_sum_two_squares(std::int64_t m);

// Ordered s_1 = 0 < s_2 = 1 < s_3 = 2 < ... <= limit, via a smallest-prime
// factor sieve.
std::vector<std::int64_t> list_s_values(std::int64_t limit);

// Nearest-neighbour gap statistics of an ordered spectrum, normalized by the
// empirical mean gap over the window.
struct SpacingStats {
    std::size_t sample_count = 0;
    double normalization = 0.0; // empirical mean gap c
    std::vector<std::pair<double, double>> cdf_samples; // (y, fraction of delta_n <= y)
};

SpacingStats spacing_cdf(const Spectrum& spectrum, std::span<const double> y_grid);
SpacingStats spacing_cdf(std::span<const double> ordered_values, std::span<const double> y_grid);

// Desymmetrized square levels grouped by the integer s = a^2 + b^2 their
// Neumann ranks share; diameters measure how far sigma spreads each group.
struct ClusterDecomposition {
    std::vector<std::int64_t> s_values;
    std::vector<std::int32_t> cluster_sizes;
    std::vector<double> diameters;
};

ClusterDecomposition cluster_analysis(double sigma, std::size_t N, Exec exec = Exec::Parallel);

} // namespace robin::stats
