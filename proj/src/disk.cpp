#include "robin/disk.hpp"
#include "robin/errors.hpp"
#include "robin/specfun.hpp"
#include "robin/threads.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <omp.h>

namespace robin::disk {

namespace {

struct RowRequest {
    bool dirichlet = false;
    bool neumann = false;
    std::vector<double> sigmas; // nonzero sigmas only
};

Spectrum make_spectrum(double sigma, BoundaryKind bc, double mu_max)
{
    Spectrum sp;
    sp.domain = Domain::Disk;
    sp.aspect = 1.0;
    sp.sigma = sigma;
    sp.bc = bc;
    sp.cutoff = mu_max * mu_max;
    return sp;
}

void append_row(std::vector<Level>& levels, int n, const std::vector<double>& zeros)
{
    const std::int32_t mult = (n == 0) ? 1 : 2;
    for (std::size_t k = 0; k < zeros.size(); ++k)
        levels.push_back({zeros[k] * zeros[k], std::int32_t(n), std::int32_t(k + 1), mult});
}

void check_disk_args(double sigma, double mu_max)
{
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("disk: sigma must be finite and >= 0");
    if (!std::isfinite(mu_max) || mu_max <= 0.0)
        throw std::domain_error("disk: mu_max must be positive");
    if (mu_max > 1.9e3)
        throw resource_error("disk: mu_max beyond supported Bessel order range");
}

} // namespace

SpectrumSet disk_spectra(const std::vector<double>& sigmas, bool with_neumann,
                         bool with_dirichlet, double mu_max, Exec exec, std::size_t level_cap)
{
    check_disk_args(0.0, mu_max);
    for (double s : sigmas)
        check_disk_args(s, mu_max);

    RowRequest req;
    req.dirichlet = with_dirichlet;
    req.neumann = with_neumann;
    for (double s : sigmas) {
        if (s == 0.0)
            req.neumann = true; // sigma = 0 is the Neumann problem
        else
            req.sigmas.push_back(s);
    }

    // kappa_{n,k} >= j'_{n,1} >= n, so angular orders beyond mu contribute
    // nothing.
    const int n_max = int(mu_max);
    std::vector<specfun::ZeroLadder> rows(n_max + 1);
    const int threads = (exec == Exec::Parallel) ? effective_threads() : 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int n = 0; n <= n_max; ++n)
        rows[n] = specfun::zero_ladder(double(n), std::numeric_limits<int>::max(), mu_max,
                                       req.neumann, req.sigmas);

    std::size_t total_estimate = 0;
    for (const auto& r : rows) {
        total_estimate += r.j.size() + r.jprime.size();
        for (const auto& v : r.robin)
            total_estimate += v.size();
    }
    if (total_estimate > level_cap)
        throw resource_error("disk_spectra: level count exceeds cap");

    SpectrumSet set;
    set.neumann = make_spectrum(0.0, BoundaryKind::Neumann, mu_max);
    set.dirichlet = make_spectrum(0.0, BoundaryKind::Dirichlet, mu_max);
    for (double s : req.sigmas)
        set.robin.push_back(make_spectrum(s, BoundaryKind::Robin, mu_max));

    for (int n = 0; n <= n_max; ++n) {
        if (with_dirichlet)
            append_row(set.dirichlet.levels, n, rows[n].j);
        if (req.neumann)
            append_row(set.neumann.levels, n, rows[n].jprime);
        for (std::size_t s = 0; s < req.sigmas.size(); ++s)
            append_row(set.robin[s].levels, n, rows[n].robin[s]);
    }
    if (with_dirichlet)
        sort_levels(set.dirichlet.levels);
    if (req.neumann)
        sort_levels(set.neumann.levels);
    for (Spectrum& sp : set.robin)
        sort_levels(sp.levels);

    // sigma = 0 entries in `sigmas` alias the Neumann spectrum
    for (std::size_t i = 0; i < sigmas.size(); ++i)
        if (sigmas[i] == 0.0)
            set.robin.insert(set.robin.begin() + long(i), set.neumann);
    return set;
}

Spectrum disk_spectrum(double sigma, double mu_max, Exec exec, std::size_t level_cap)
{
    SpectrumSet set = disk_spectra({sigma}, sigma == 0.0, false, mu_max, exec, level_cap);
    if (sigma == 0.0)
        return set.neumann;
    return set.robin.front();
}

Spectrum disk_dirichlet_spectrum(double mu_max, Exec exec, std::size_t level_cap)
{
    SpectrumSet set = disk_spectra({}, false, true, mu_max, exec, level_cap);
    return set.dirichlet;
}

std::size_t disk_counting(double sigma, double x, Exec exec)
{
    if (!std::isfinite(x))
        throw std::domain_error("disk_counting: x must be finite");
    if (x < 0.0)
        return 0;
    if (x == 0.0)
        return (sigma == 0.0) ? 1 : 0;
    return disk_spectrum(sigma, std::sqrt(x), exec).counting(x);
}

GapSeries disk_gaps(double sigma, std::size_t N, Exec exec)
{
    if (N < 1)
        throw std::domain_error("disk_gaps: N must be >= 1");
    check_disk_args(sigma, 1.0);

    // Weyl start: N(mu^2) ~ mu^2/4 + mu/2; grow until both ranks certified.
    double mu = 2.0 * std::sqrt(double(N + 1)) + 2.0;
    for (int attempt = 0; attempt < 32; ++attempt) {
        SpectrumSet set = disk_spectra({sigma}, true, false, mu, exec);
        const Spectrum& rob = (sigma == 0.0) ? set.neumann : set.robin.front();
        const std::vector<double> lam_s = rob.expanded();
        const std::vector<double> lam_0 = set.neumann.expanded();
        if (lam_s.size() >= N && lam_0.size() >= N) {
            GapSeries gs;
            gs.domain = Domain::Disk;
            gs.sigma = sigma;
            gs.entries.reserve(N);
            for (std::size_t n = 0; n < N; ++n)
                gs.entries.push_back({n, lam_s[n] - lam_0[n]});
            return gs;
        }
        mu *= 1.15;
    }
    throw convergence_error("disk_gaps: cutoff search failed");
}

double kappa_approx(int n, int k)
{
    if (k < 1)
        throw std::domain_error("kappa_approx: requires k >= 1");
    const double nn = n;
    const double y = double(k) + std::max(0.0, -nn) - 0.75;
    return specfun::F(nn, y);
}

} // namespace robin::disk
