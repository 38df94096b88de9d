#include "robin/rectangle.hpp"
#include "robin/errors.hpp"
#include "robin/robin1d.hpp"
#include "robin/threads.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

namespace robin::rectangle {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_rect_args(double L, double sigma)
{
    if (!std::isfinite(L) || L <= 0.0 || L > 1.0)
        throw std::domain_error("rectangle: aspect ratio must satisfy 0 < L <= 1, got " + std::to_string(L));
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("rectangle: sigma must be finite and >= 0");
}

// Squared frequencies of one side, for every index whose square stays below
// bound.  side_scale multiplies the frequency (1/L for the [0,L] side).
std::vector<double> side_squares(double sigma_eff, double side_scale, BoundaryKind bc,
                                 double bound, Exec exec)
{
    const double scale2 = side_scale * side_scale;
    // k_n <= (n+1) pi, so n_max below is never an undercount.
    const std::size_t n_max = std::size_t(std::sqrt(bound / scale2) / kPi) + 1;
    std::vector<double> sq(n_max + 1);
    const int threads = (exec == Exec::Parallel) ? effective_threads() : 1;
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::size_t n = 0; n <= n_max; ++n) {
        double k;
        switch (bc) {
        case BoundaryKind::Neumann:
            k = double(n) * kPi;
            break;
        case BoundaryKind::Robin:
            k = robin1d::frequency(int(n), sigma_eff).k;
            break;
        default:
            k = robin1d::dirichlet_frequency(int(n));
            break;
        }
        sq[n] = scale2 * k * k;
    }
    while (!sq.empty() && sq.back() > bound)
        sq.pop_back();
    return sq;
}

Spectrum assemble(double L, double sigma, BoundaryKind bc, double lambda_max, Exec exec,
                  std::size_t level_cap, bool desym)
{
    const double sigma_x = (bc == BoundaryKind::Robin) ? sigma : 0.0;
    const std::vector<double> ax = side_squares(sigma_x, 1.0, bc, lambda_max, exec);
    const std::vector<double> by = desym ? ax : side_squares(sigma_x * L, 1.0 / L, bc, lambda_max, exec);

    // count first so the cap check precedes any large allocation
    std::size_t total = 0;
    std::vector<std::size_t> row_len(ax.size(), 0);
    for (std::size_t n = 0; n < ax.size(); ++n) {
        const double room = lambda_max - ax[n];
        if (room < 0.0)
            break;
        std::size_t m = std::size_t(std::upper_bound(by.begin(), by.end(), room) - by.begin());
        if (desym)
            m = std::min(m, n + 1); // labels (a, b) with a <= b: a = m-index
        row_len[n] = m;
        total += m;
    }
    if (total > level_cap)
        throw resource_error("rect_spectrum: level count " + std::to_string(total)
                             + " exceeds cap " + std::to_string(level_cap));

    std::vector<std::size_t> offset(ax.size() + 1, 0);
    for (std::size_t n = 0; n < ax.size(); ++n)
        offset[n + 1] = offset[n] + row_len[n];

    // on the square, non-Robin eigenvalues are pi^2 (p^2 + q^2); computing
    // them from the integer part keeps arithmetic degeneracies exact
    const bool exact_square = (L == 1.0 && bc != BoundaryKind::Robin);
    const int shift = (bc == BoundaryKind::Dirichlet) ? 1 : 0;

    std::vector<Level> levels(total);
    const int threads = (exec == Exec::Parallel) ? effective_threads() : 1;
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::size_t n = 0; n < ax.size(); ++n) {
        Level* out = levels.data() + offset[n];
        for (std::size_t m = 0; m < row_len[n]; ++m) {
            double value = ax[n] + by[m];
            if (exact_square) {
                const double p = double(n + shift), q = double(m + shift);
                value = kPi * kPi * (p * p + q * q);
            }
            // desymmetrized labels are stored (min, max) = (m, n)
            if (desym)
                out[m] = {value, std::int32_t(m), std::int32_t(n), 1};
            else
                out[m] = {value, std::int32_t(n), std::int32_t(m), 1};
        }
    }
    sort_levels(levels);

    Spectrum sp;
    sp.domain = Domain::Rectangle;
    sp.aspect = L;
    sp.sigma = sigma_x;
    sp.bc = bc;
    sp.cutoff = lambda_max;
    sp.levels = std::move(levels);
    return sp;
}

// Exact N-th Dirichlet eigenvalue (0-indexed), which strictly bounds
// lambda_N^sigma from above for every sigma >= 0.
double dirichlet_rank_value_impl(double L, std::size_t N, Exec exec, bool desym)
{
    double guess = 4.0 * kPi * double(N + 1) / L + 64.0;
    if (desym)
        guess = 2.0 * guess + 64.0;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Spectrum d = assemble(L, 0.0, BoundaryKind::Dirichlet, guess, exec,
                              kDefaultLevelCap, desym);
        if (d.levels.size() > N)
            return d.levels[N].value;
        guess *= 1.4;
    }
    throw convergence_error("rect: Dirichlet rank cutoff search failed");
}

} // namespace

Spectrum rect_spectrum(double L, double sigma, BoundaryKind bc, double lambda_max, Exec exec,
                       std::size_t level_cap)
{
    check_rect_args(L, sigma);
    if (!std::isfinite(lambda_max) || lambda_max <= 0.0)
        throw std::domain_error("rect_spectrum: lambda_max must be positive");
    return assemble(L, sigma, bc, lambda_max, exec, level_cap, false);
}

GapSeries rect_gaps(double L, double sigma, std::size_t N, Exec exec)
{
    check_rect_args(L, sigma);
    if (N < 1)
        throw std::domain_error("rect_gaps: N must be >= 1");

    const double cutoff = dirichlet_rank_value_impl(L, N, exec, false);
    const Spectrum neumann = assemble(L, 0.0, BoundaryKind::Neumann, cutoff, exec,
                                      kDefaultLevelCap, false);
    const Spectrum rob = assemble(L, sigma, BoundaryKind::Robin, cutoff, exec,
                                  kDefaultLevelCap, false);
    if (neumann.levels.size() < N || rob.levels.size() < N)
        throw convergence_error("rect_gaps: rank cutoff did not certify N levels");

    GapSeries gs;
    gs.domain = Domain::Rectangle;
    gs.aspect = L;
    gs.sigma = sigma;
    gs.entries.reserve(N);
    for (std::size_t n = 0; n < N; ++n)
        gs.entries.push_back({n, rob.levels[n].value - neumann.levels[n].value});
    return gs;
}

Spectrum desym_square_spectrum(double sigma, std::size_t N, Exec exec)
{
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("desym_square_spectrum: sigma must be finite and >= 0");
    if (N < 1)
        throw std::domain_error("desym_square_spectrum: N must be >= 1");
    const double cutoff = dirichlet_rank_value_impl(1.0, N, exec, true);
    Spectrum sp = assemble(1.0, sigma, (sigma == 0.0) ? BoundaryKind::Neumann : BoundaryKind::Robin,
                           cutoff, exec, kDefaultLevelCap, true);
    if (sp.levels.size() < N)
        throw convergence_error("desym_square_spectrum: rank cutoff did not certify N levels");
    return sp;
}

double mean_gap_limit(double L, double sigma)
{
    check_rect_args(L, sigma);
    return 2.0 * (2.0 + 2.0 * L) / L * sigma;
}

double dirichlet_rank_value(double L, std::size_t N, Exec exec)
{
    check_rect_args(L, 0.0);
    return dirichlet_rank_value_impl(L, N, exec, false);
}

} // namespace robin::rectangle
