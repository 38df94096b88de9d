#include "robin/lattice.hpp"
#include "robin/disk.hpp"
#include "robin/errors.hpp"
#include "robin/specfun.hpp"
#include "robin/threads.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

namespace robin::lattice {

namespace {

constexpr double kBoundaryTol = 1e-12;

void check_mu(double mu, double mu_cap)
{
    if (!std::isfinite(mu) || mu <= 0.0)
        throw std::domain_error("lattice: mu must be positive, got " + std::to_string(mu));
    if (mu > mu_cap)
        throw resource_error("lattice: mu exceeds cap " + std::to_string(mu_cap));
}

// Shifted ordinate of the label (n, k).
double label_y(std::int64_t n, std::int64_t k)
{
    return double(k) + std::max(0.0, double(-n)) - 0.75;
}

bool label_in(std::int64_t n, std::int64_t k, double mu)
{
    return in_domain_d(double(n) / mu, label_y(n, k) / mu);
}

// Count of k >= 1 with (n, y(k)) in mu D for one row, exactly equal to the
// pointwise predicate: the closed-form bound is corrected by testing the
// two labels around it.
std::int64_t row_count(std::int64_t n, double mu)
{
    const double x = double(n) / mu;
    if (std::fabs(x) > 1.0 + kBoundaryTol)
        return 0;
    const double xc = std::clamp(x, -1.0, 1.0);
    const double gx = specfun::g(xc);
    const double bound = mu * (gx + kBoundaryTol * std::max(1.0, gx))
                         - std::max(0.0, double(-n)) + 0.75;
    std::int64_t k = std::int64_t(std::floor(bound));
    while (k >= 1 && !label_in(n, k, mu))
        --k;
    while (label_in(n, k + 1, mu))
        ++k;
    return std::max<std::int64_t>(k, 0);
}

LatticeCount decompose(double mu, std::int64_t count)
{
    LatticeCount lc;
    lc.mu = mu;
    lc.count = count;
    lc.area_term = 0.25 * mu * mu;
    lc.perimeter_term = 0.5 * mu;
    lc.residual = double(count) - lc.area_term - lc.perimeter_term;
    return lc;
}

} // namespace

bool in_domain_d(double x, double y)
{
    if (!std::isfinite(x) || !std::isfinite(y))
        return false;
    if (std::fabs(x) > 1.0 + kBoundaryTol)
        return false;
    const double xc = std::clamp(x, -1.0, 1.0);
    const double hi = specfun::g(xc);
    const double lo = std::max(0.0, -x);
    return y >= lo - kBoundaryTol * std::max(1.0, lo)
        && y <= hi + kBoundaryTol * std::max(1.0, hi);
}

LatticeCount count_lattice(double mu, Exec exec, double mu_cap)
{
    check_mu(mu, mu_cap);
    const std::int64_t n_hi = std::int64_t(std::floor(mu * (1.0 + 2.0 * kBoundaryTol)));
    const std::int64_t rows = 2 * n_hi + 1;

    std::int64_t total = 0;
    const int threads = (exec == Exec::Parallel) ? effective_threads() : 1;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : total)
    for (std::int64_t i = 0; i < rows; ++i) {
        const std::int64_t n = i - n_hi;
        total += row_count(n, mu);
    }
    return decompose(mu, total);
}

std::int64_t count_lattice_brute(double mu)
{
    check_mu(mu, 5000.0);
    const std::int64_t n_hi = std::int64_t(std::ceil(mu)) + 1;
    const std::int64_t k_hi = std::int64_t(std::ceil(mu)) + 2;
    std::int64_t total = 0;
    for (std::int64_t n = -n_hi; n <= n_hi; ++n)
        for (std::int64_t k = 1; k <= k_hi; ++k)
            if (label_in(n, k, mu))
                ++total;
    return total;
}

SandwichReport sandwich_check_with_count(double sigma, double mu, double c_margin,
                                         std::int64_t n_disk, Exec exec)
{
    if (!(mu >= 10.0))
        throw std::domain_error("sandwich_check: requires mu >= 10");
    if (!(c_margin > 0.0))
        throw std::domain_error("sandwich_check: requires c_margin > 0");

    const auto holds_at = [&](double c) {
        const double shift = c * std::pow(mu, -3.0 / 7.0);
        const double bulge = c * std::pow(mu, 4.0 / 7.0);
        if (mu - shift <= 0.0)
            return false;
        const std::int64_t lo = count_lattice(mu - shift, exec).count;
        const std::int64_t hi = count_lattice(mu + shift, exec).count;
        return double(lo) - bulge <= double(n_disk) && double(n_disk) <= double(hi) + bulge;
    };

    SandwichReport rep;
    rep.mu = mu;
    rep.sigma = sigma;
    rep.n_disk = n_disk;
    rep.holds = holds_at(c_margin);
    rep.c_min = c_margin;
    if (!rep.holds)
        return rep;

    double lo = 0.0, hi = c_margin;
    for (int it = 0; it < 40 && hi - lo > 1e-4 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (holds_at(mid))
            hi = mid;
        else
            lo = mid;
    }
    rep.c_min = hi;
    return rep;
}

SandwichReport sandwich_check(double sigma, double mu, double c_margin, Exec exec)
{
    const std::int64_t n_disk = std::int64_t(disk::disk_counting(sigma, mu * mu, exec));
    return sandwich_check_with_count(sigma, mu, c_margin, n_disk, exec);
}

} // namespace robin::lattice
