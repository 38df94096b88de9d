#include "robin/specfun.hpp"
#include "robin/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace robin::specfun {

namespace {

using ld = long double;
constexpr ld kPi = 3.141592653589793238462643383279502884L;

// Right-hand side of 2/3 (-zeta)^{3/2} = sqrt(z^2-1) - arccos(1/z) and its
// z-derivative sqrt(z^2-1)/z.
ld zeta_rhs(ld z)
{
    return std::sqrt(z * z - 1.0L) - std::acos(1.0L / z);
}

} // namespace

double g(double x)
{
    if (!std::isfinite(x) || std::fabs(x) > 1.0)
        throw std::domain_error("g: requires |x| <= 1, got " + std::to_string(x));
    const ld xl = x;
    return double((std::sqrt(1.0L - xl * xl) - xl * std::acos(xl)) / kPi);
}

double zeta_of_z(double z)
{
    if (!std::isfinite(z) || z < 1.0)
        throw std::domain_error("zeta_of_z: requires z >= 1, got " + std::to_string(z));
    if (z == 1.0)
        return 0.0;
    const ld r = zeta_rhs(z);
    return double(-std::pow(1.5L * r, 2.0L / 3.0L));
}

double z_of_zeta(double zeta)
{
    if (!std::isfinite(zeta) || zeta > 0.0)
        throw std::domain_error("z_of_zeta: requires zeta <= 0, got " + std::to_string(zeta));
    if (zeta == 0.0)
        return 1.0;

    const ld target = std::pow(ld(-zeta), 1.5L) * (2.0L / 3.0L); // = zeta_rhs(z)
    // zeta_rhs(z) <= z - pi/2 ... z, so [max(1,target), target + pi/2 + 1]
    // brackets the solution.
    ld lo = std::max(1.0L, target);
    ld hi = target + 0.5L * kPi + 1.0L;
    ld z = (target < 0.25L) ? 1.0L + std::pow(2.0L, -1.0L / 3.0L) * ld(-zeta)
                            : target + 0.5L * kPi;
    z = std::min(std::max(z, lo), hi);
    for (int it = 0; it < 200; ++it) {
        const ld f = zeta_rhs(z) - target;
        if (f > 0.0L)
            hi = z;
        else
            lo = z;
        const ld df = std::sqrt(z * z - 1.0L) / z;
        ld step = (df > 0.0L) ? f / df : 0.0L;
        ld znew = z - step;
        if (!(znew > lo && znew < hi))
            znew = 0.5L * (lo + hi);
        if (std::fabs(znew - z) < 1e-18L * std::max(1.0L, z) || hi - lo < 1e-18L * std::max(1.0L, hi)) {
            z = znew;
            break;
        }
        z = znew;
    }
    return double(z);
}

double F(double x, double y)
{
    if (!std::isfinite(x) || !std::isfinite(y) || y < std::max(0.0, -x))
        throw std::domain_error("F: point outside the sector {y >= max(0,-x)}");
    if (x < 0.0)
        return F(-x, y + x);
    if (x == 0.0)
        return double(kPi * ld(y));
    if (y == 0.0)
        return x;
    const ld xl = x;
    const ld zeta = -std::pow(xl, -2.0L / 3.0L) * std::pow(1.5L * kPi * ld(y), 2.0L / 3.0L);
    return double(xl * ld(z_of_zeta(double(zeta))));
}

double zero_estimate(double nu, int k, ZeroKind kind)
{
    if (k < 1)
        throw std::domain_error("zero_estimate: requires k >= 1");
    switch (kind) {
    case ZeroKind::J:
        return F(nu, k - 0.25);
    case ZeroKind::JPrime:
    case ZeroKind::RobinCombo:
        if (nu == 0.0 && k == 1 && kind == ZeroKind::JPrime)
            return 0.0;
        return F(nu, k - 0.75);
    }
    throw std::domain_error("zero_estimate: bad kind");
}

} // namespace robin::specfun
