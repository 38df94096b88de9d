#include "robin/robin1d.hpp"
#include "robin/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robin::robin1d {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_args(int n, double sigma)
{
    if (n < 0)
        throw std::domain_error("robin1d: index n must be >= 0");
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("robin1d: sigma must be finite and >= 0, got " + std::to_string(sigma));
}

// Secular equation in terms of the offset delta = k - n pi, which removes
// the large-argument trig cancellation: G(k) = (-1)^n H(delta) with
//   H(delta) = (k^2 - sigma^2) sin(delta) - 2 k sigma cos(delta),
// and H has a single root in (0, pi) with H(0+) < 0 < H(pi-).
struct HVal {
    double f;
    double df;
};

HVal secular_h(int n, double sigma, double delta)
{
    const double k = n * kPi + delta;
    const double s = std::sin(delta);
    const double c = std::cos(delta);
    const double f = (k * k - sigma * sigma) * s - 2.0 * k * sigma * c;
    const double df = 2.0 * k * s + (k * k - sigma * sigma) * c - 2.0 * sigma * c + 2.0 * k * sigma * s;
    return {f, df};
}

} // namespace

namespace detail {

double frequency_offset(int n, double sigma)
{
    check_args(n, sigma);
    if (sigma == 0.0)
        return 0.0;

    double lo = (n == 0) ? 1e-12 : 0.0;
    double hi = kPi;
    // tan(delta) = 2 k sigma / (k^2 - sigma^2) on the (0, pi) branch gives a
    // near-exact start once k is replaced by its own estimate
    const double k_est = n * kPi + ((n == 0) ? std::min(std::sqrt(2.0 * sigma), 3.0) : 0.5);
    double x = std::atan2(2.0 * k_est * sigma, k_est * k_est - sigma * sigma);
    if (!(x > lo && x < hi))
        x = 0.5 * (lo + hi);

    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const HVal v = secular_h(n, sigma, x);
        if (v.f == 0.0)
            return x;
        if (v.f < 0.0)
            lo = x;
        else
            hi = x;
        double xn = x - v.f / v.df;
        if (!std::isfinite(xn) || xn <= lo || xn >= hi)
            xn = 0.5 * (lo + hi);
        x = xn;
    }
    for (int polish = 0; polish < 2; ++polish) {
        const HVal v = secular_h(n, sigma, x);
        if (v.df == 0.0)
            break;
        const double xn = x - v.f / v.df;
        if (std::isfinite(xn) && xn > 0.0 && xn < kPi)
            x = xn;
    }
    return x;
}

} // namespace detail

SecularRoot frequency(int n, double sigma)
{
    const double delta = detail::frequency_offset(n, sigma);
    return {n, sigma, n * kPi + delta};
}

double dirichlet_frequency(int n)
{
    if (n < 0)
        throw std::domain_error("dirichlet_frequency: index n must be >= 0");
    return (n + 1) * kPi;
}

double gap1d(int n, double sigma)
{
    const double delta = detail::frequency_offset(n, sigma);
    return delta * (2.0 * n * kPi + delta);
}

} // namespace robin::robin1d
