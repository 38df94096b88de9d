#pragma once

#include "robin/spectrum.hpp"
#include "robin/threads.hpp"

#include <cstddef>

namespace robin::rectangle {

inline constexpr std::size_t kDefaultLevelCap = 40'000'000;

// Ordered spectrum of the rectangle Q_L = [0,1] x [0,L], complete up to
// lambda_max.  Levels are Lambda_{n,m} = k_n(.)^2 + (1/L^2) k_m(. L)^2 with
// the frequencies of the [0,L] side given by (1/L) k_m(sigma L); Dirichlet
// frequencies are (n+1) pi.
Spectrum rect_spectrum(double L, double sigma, BoundaryKind bc, double lambda_max,
                       Exec exec = Exec::Parallel, std::size_t level_cap = kDefaultLevelCap);

// First N Robin-Neumann gaps d_n = lambda_n^sigma - lambda_n^0, paired by
// rank.  Both spectra are computed complete up to the exact N-th Dirichlet
// eigenvalue, which bounds lambda_N^sigma, so the ranks are certified.
GapSeries rect_gaps(double L, double sigma, std::size_t N, Exec exec = Exec::Parallel);

// Desymmetrized square spectrum: labels restricted to a <= b, complete to
// rank N (with some overshoot beyond the rank-N cutoff).
Spectrum desym_square_spectrum(double sigma, std::size_t N, Exec exec = Exec::Parallel);

// Limiting mean of the gap series, 2 * perimeter / area * sigma.
double mean_gap_limit(double L, double sigma);

// Exact N-th (0-indexed) Dirichlet eigenvalue of Q_L; an upper bound for
// lambda_N^sigma at every sigma, hence a certified completeness cutoff.
double dirichlet_rank_value(double L, std::size_t N, Exec exec = Exec::Parallel);

} // namespace robin::rectangle
