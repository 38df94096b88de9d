#include "robin/specfun.hpp"
#include "robin/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace robin::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FD {
    double f;
    double df;
};

// f and f' for the three zero families, from one shared J/J' evaluation.
FD eval_j(double nu, double x)
{
    JPair p = bessel_j_pair(nu, x);
    return {p.j, p.jp};
}

FD eval_jprime(double nu, double x)
{
    JPair p = bessel_j_pair(nu, x);
    return {p.jp, -(1.0 - nu * nu / (x * x)) * p.j - p.jp / x};
}

FD eval_robin(double nu, double x, double sigma)
{
    JPair p = bessel_j_pair(nu, x);
    return {x * p.jp + sigma * p.j, sigma * p.jp + (nu * nu / x - x) * p.j};
}

FD eval_kind(double nu, double x, ZeroKind kind, double sigma)
{
    switch (kind) {
    case ZeroKind::J:
        return eval_j(nu, x);
    case ZeroKind::JPrime:
        return eval_jprime(nu, x);
    default:
        return eval_robin(nu, x, sigma);
    }
}

int sgn(double v)
{
    return (v > 0.0) - (v < 0.0);
}

// Bracketed Newton: keeps the sign-change interval and falls back to
// bisection whenever the Newton proposal leaves it, so convergence is
// guaranteed; two plain Newton steps recover full precision at the end.
double refine(double nu, ZeroKind kind, double sigma, double lo, double hi, int sign_lo,
              double start)
{
    const double scale = std::max(1.0, std::fabs(hi));
    double x = std::min(std::max(start, lo + 0.02 * (hi - lo)), hi - 0.02 * (hi - lo));
    for (int it = 0; it < 200 && hi - lo > 1e-12 * scale; ++it) {
        const FD v = eval_kind(nu, x, kind, sigma);
        if (v.f == 0.0)
            return x;
        if (sgn(v.f) == sign_lo)
            lo = x;
        else
            hi = x;
        double xn = x - v.f / v.df;
        if (!std::isfinite(xn) || xn <= lo || xn >= hi)
            xn = 0.5 * (lo + hi);
        x = xn;
    }
    x = std::min(std::max(x, lo), hi);
    const double slack = std::max(hi - lo, 1e-9 * scale);
    for (int polish = 0; polish < 2; ++polish) {
        const FD v = eval_kind(nu, x, kind, sigma);
        if (v.df == 0.0)
            break;
        const double xn = x - v.f / v.df;
        if (std::isfinite(xn) && xn > lo - slack && xn < hi + slack)
            x = xn;
    }
    return x;
}

void check_zero_args(double nu, int k)
{
    if (!std::isfinite(nu) || nu < 0.0)
        throw std::domain_error("bessel zero: order must be finite and >= 0");
    if (k < 1)
        throw std::domain_error("bessel zero: index k must be >= 1");
}

// Expands [guess-h, guess+h] by 1.25 until the function changes sign with
// the parity expected of the k-th zero.  The cap just under half the local
// spacing keeps neighbouring zeros out, so failure signals an accuracy bug.
ZeroBracket expand_bracket(double nu, int k, ZeroKind kind, double lo_floor)
{
    const double guess = zero_estimate(nu, k, kind);
    const double spacing = zero_estimate(nu, k + 1, kind) - guess;
    const int want_lo = (k % 2 == 1) ? 1 : -1;
    double h = 0.18 * spacing;
    const double h_cap = 0.48 * spacing;
    for (int it = 0; it < 64; ++it) {
        const double lo = std::max(guess - h, lo_floor);
        const double hi = guess + h;
        if (sgn(eval_kind(nu, lo, kind, 0.0).f) == want_lo
            && sgn(eval_kind(nu, hi, kind, 0.0).f) == -want_lo)
            return {lo, hi, k, kind};
        if (h >= h_cap)
            break;
        h = std::min(h * 1.25, h_cap);
    }
    throw convergence_error("bessel zero: no sign change near estimate " + std::to_string(guess)
                            + " (nu=" + std::to_string(nu) + ", k=" + std::to_string(k) + ")");
}

double lo_floor_for(double nu, int k, ZeroKind kind)
{
    const double guess = zero_estimate(nu, k, kind);
    return std::max(nu, (kind == ZeroKind::J ? 0.5 : 0.25) * guess);
}

} // namespace

ZeroBracket zero_bracket(double nu, int k, ZeroKind kind, double sigma)
{
    check_zero_args(nu, k);
    if (kind == ZeroKind::JPrime && nu == 0.0 && k == 1)
        return {0.0, 0.0, k, kind};
    if (kind == ZeroKind::RobinCombo) {
        if (sigma == 0.0)
            return zero_bracket(nu, k, ZeroKind::JPrime);
        const double lo = bessel_zero(nu, k, ZeroKind::JPrime);
        const double hi = bessel_zero(nu, k, ZeroKind::J);
        return {lo, hi, k, kind};
    }
    return expand_bracket(nu, k, kind, lo_floor_for(nu, k, kind));
}

double bessel_zero(double nu, int k, ZeroKind kind)
{
    check_zero_args(nu, k);
    if (kind == ZeroKind::RobinCombo)
        throw std::domain_error("bessel_zero: use robin_bessel_zero for the Robin combination");
    if (kind == ZeroKind::JPrime && nu == 0.0 && k == 1)
        return 0.0; // x = 0 counts as the first zero of J'_0
    const ZeroBracket br = zero_bracket(nu, k, kind);
    const int sign_lo = (k % 2 == 1) ? 1 : -1;
    return refine(nu, kind, 0.0, br.lo, br.hi, sign_lo, zero_estimate(nu, k, kind));
}

double robin_bessel_zero(double nu, int k, double sigma)
{
    check_zero_args(nu, k);
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("robin_bessel_zero: requires sigma >= 0");
    if (sigma == 0.0)
        return bessel_zero(nu, k, ZeroKind::JPrime);

    double lo = bessel_zero(nu, k, ZeroKind::JPrime);
    const double hi = bessel_zero(nu, k, ZeroKind::J);
    if (lo == 0.0) {
        // nu = 0, k = 1: x J'_0 + sigma J_0 -> sigma at 0+, and the root
        // sits near sqrt(2 sigma) when sigma is small
        lo = std::min({1e-7, 0.1 * std::sqrt(sigma), 0.25 * hi});
    }
    const int sign_lo = (k % 2 == 1) ? 1 : -1;
    return refine(nu, ZeroKind::RobinCombo, sigma, lo, hi, sign_lo,
                  std::min(std::max(zero_estimate(nu, k, ZeroKind::RobinCombo), lo), hi));
}

ZeroLadder zero_ladder(double nu, int k_max, double x_max, bool want_jprime,
                       std::span<const double> sigmas)
{
    check_zero_args(nu, std::max(k_max, 1));
    if (k_max < 1)
        throw std::domain_error("zero_ladder: k_max must be >= 1");
    for (double s : sigmas)
        if (!std::isfinite(s) || s < 0.0)
            throw std::domain_error("zero_ladder: sigma must be finite and >= 0");

    ZeroLadder lad;
    lad.robin.resize(sigmas.size());

    double prev_j = nu; // J_nu > 0 on (nu, j_{nu,1})
    for (int k = 1; k <= k_max; ++k) {
        if (prev_j > x_max)
            break;
        const ZeroBracket br = expand_bracket(nu, k, ZeroKind::J,
                                              std::max(prev_j * (1.0 + 1e-14) + 1e-12,
                                                       lo_floor_for(nu, k, ZeroKind::J)));
        const int sign_lo = (k % 2 == 1) ? 1 : -1;
        const double jk = refine(nu, ZeroKind::J, 0.0, br.lo, br.hi, sign_lo,
                                 zero_estimate(nu, k, ZeroKind::J));
        if (jk <= prev_j)
            throw convergence_error("zero_ladder: ladder not increasing at nu=" + std::to_string(nu)
                                    + " k=" + std::to_string(k));
        if (jk <= x_max)
            lad.j.push_back(jk);

        if (want_jprime) {
            double zp;
            if (nu == 0.0 && k == 1)
                zp = 0.0;
            else
                zp = refine(nu, ZeroKind::JPrime, 0.0, prev_j, jk, sign_lo,
                            zero_estimate(nu, k, ZeroKind::JPrime));
            if (zp <= x_max)
                lad.jprime.push_back(zp);
        }
        for (std::size_t s = 0; s < sigmas.size(); ++s) {
            if (sigmas[s] == 0.0) {
                const double zp = (nu == 0.0 && k == 1)
                                      ? 0.0
                                      : refine(nu, ZeroKind::JPrime, 0.0, prev_j, jk, sign_lo,
                                               zero_estimate(nu, k, ZeroKind::JPrime));
                if (zp <= x_max)
                    lad.robin[s].push_back(zp);
                continue;
            }
            const double lo = (nu == 0.0 && k == 1)
                                  ? std::min({1e-7, 0.1 * std::sqrt(sigmas[s]), 0.25 * jk})
                                  : prev_j;
            const double kap = refine(nu, ZeroKind::RobinCombo, sigmas[s], lo, jk, sign_lo,
                                      std::min(std::max(zero_estimate(nu, k, ZeroKind::RobinCombo), lo), jk));
            if (kap <= x_max)
                lad.robin[s].push_back(kap);
        }
        prev_j = jk;
    }
    return lad;
}

double airy_prime_zero(int k)
{
    if (k < 1)
        throw std::domain_error("airy_prime_zero: requires k >= 1");
    if (k >= 2) {
        const double y = 1.5 * kPi * (k - 0.75);
        return -std::pow(y, 2.0 / 3.0);
    }

    // k = 1: Newton on the Maclaurin series of Ai', using Ai'' = z Ai.
    using ld = long double;
    const ld c1 = std::pow(3.0L, -2.0L / 3.0L) / tgammal(2.0L / 3.0L);
    const ld c2 = -std::pow(3.0L, -1.0L / 3.0L) / tgammal(1.0L / 3.0L);
    ld z = -1.02L;
    for (int it = 0; it < 32; ++it) {
        const ld z3 = z * z * z;
        ld tf = 1.0L, tg = z;
        ld f = tf, gg = tg, fp = 0.0L, gp = 1.0L;
        for (int n = 0; n < 60; ++n) {
            tf *= z3 / ld((3 * n + 2) * (3 * n + 3));
            tg *= z3 / ld((3 * n + 3) * (3 * n + 4));
            f += tf;
            gg += tg;
            fp += tf * ld(3 * n + 3) / z;
            gp += tg * ld(3 * n + 4) / z;
            if (std::fabs(tf) + std::fabs(tg) < 1e-25L)
                break;
        }
        const ld ai = c1 * f + c2 * gg;
        const ld aip = c1 * fp + c2 * gp;
        const ld step = aip / (z * ai);
        z -= step;
        if (std::fabs(step) < 1e-18L)
            break;
    }
    return double(z);
}

} // namespace robin::specfun
