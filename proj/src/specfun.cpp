#include "robin/specfun.hpp"
#include "robin/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace robin::specfun {

namespace {

using ld = long double;

constexpr ld kPi = 3.141592653589793238462643383279502884L;
constexpr ld kLdEps = std::numeric_limits<ld>::epsilon();

// Below this exponent exp() underflows even in 80-bit arithmetic; the value
// is zero to far below any tolerance here.
constexpr ld kUnderflowExp = -11300.0L;

// Arguments above this use 80-bit trig in the quadrature: the phase x sin t
// is then too large for double rounding (x * eps) to stay under tolerance.
constexpr double kLongDoubleQuadCutoff = 1500.0;

void check_inputs(double nu, double x)
{
    if (!std::isfinite(nu) || nu < 0.0)
        throw std::domain_error("bessel_j: order must be finite and >= 0, got " + std::to_string(nu));
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("bessel_j: argument must be finite and >= 0, got " + std::to_string(x));
    if (x > 2.0e4 || nu > 2.0e3)
        throw std::domain_error("bessel_j: outside supported domain x <= 2e4, nu <= 2e3");
}

ld lgamma_pos(ld x)
{
    int sign = 1;
    return lgammal_r(x, &sign);
}

// ---------------------------------------------------------------------------
// Gauss-Legendre rule on [-1, 1], generated once by Newton iteration on the
// Legendre polynomial.  24 points integrate a cosine with up to ~26 radians
// of phase per panel below 1e-20, so panel width is set by a phase budget.
// ---------------------------------------------------------------------------

constexpr int kGlOrder = 24;
constexpr ld kPhasePerPanel = 26.0L;

struct GaussRule {
    std::array<ld, kGlOrder> node;
    std::array<ld, kGlOrder> weight;
};

GaussRule make_gauss_rule()
{
    GaussRule r{};
    const int n = kGlOrder;
    for (int i = 0; i < n; ++i) {
        ld x = std::cos(kPi * (ld(i) + 0.75L) / (ld(n) + 0.5L));
        ld p0 = 0.0L, p1 = 0.0L, dp = 0.0L;
        for (int it = 0; it < 64; ++it) {
            p0 = 1.0L;
            p1 = x;
            for (int j = 2; j <= n; ++j) {
                ld p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0L);
            ld dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 8 * kLdEps)
                break;
        }
        r.node[i] = x;
        r.weight[i] = 2.0L / ((1.0L - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& gauss_rule()
{
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

// Nodes of the full [0, pi] panel layout, with sin/cos precomputed.  Layouts
// are cached per panel count: the quadrature is re-run thousands of times
// during zero ladders with identical layouts.  Thread-local, so read-only
// sharing issues never arise.
struct NodeTable {
    std::vector<double> t, st, ct, w;
};

const NodeTable& node_table(int panels)
{
    thread_local std::vector<std::unique_ptr<NodeTable>> cache;
    if (panels >= int(cache.size()))
        cache.resize(panels + 1);
    if (!cache[panels]) {
        auto tab = std::make_unique<NodeTable>();
        const GaussRule& gr = gauss_rule();
        const ld h = kPi / ld(panels);
        tab->t.reserve(size_t(panels) * kGlOrder);
        for (int p = 0; p < panels; ++p) {
            const ld mid = h * (ld(p) + 0.5L);
            const ld half = 0.5L * h;
            for (int q = 0; q < kGlOrder; ++q) {
                const ld t = mid + half * gr.node[q];
                tab->t.push_back(double(t));
                tab->st.push_back(double(std::sin(t)));
                tab->ct.push_back(double(std::cos(t)));
                tab->w.push_back(double(gr.weight[q] * half));
            }
        }
        cache[panels] = std::move(tab);
    }
    return *cache[panels];
}

// ---------------------------------------------------------------------------
// Ascending series.  J and its derivative share the term recurrence
//   J  = P * sum_m (-1)^m u^m / (m! (nu+1)_m),    P = (x/2)^nu / Gamma(nu+1)
//   J' = (P/x) * sum_m (-1)^m (nu+2m) u^m / (m! (nu+1)_m)
// with u = x^2/4.  Roundoff is bounded by eps * I_nu(x), so the series is
// used only while that amplification stays small.
// ---------------------------------------------------------------------------

bool series_applicable(ld nu, ld x)
{
    if (x <= 2.0L)
        return true;
    ld w = std::hypot(nu, x);
    ld ln_amp = w - 0.5L * std::log(2.0L * kPi * w);
    if (nu > 0.0L)
        ln_amp -= nu * std::log((nu + w) / x);
    return ln_amp <= 10.5L;
}

ld series_j(ld nu, ld x)
{
    // x > 0; x == 0 is handled by the callers.
    ld lpre = nu * std::log(x / 2.0L) - lgamma_pos(nu + 1.0L);
    if (lpre < kUnderflowExp)
        return 0.0L;
    const ld u = 0.25L * x * x;
    ld term = 1.0L;
    ld s = 1.0L;
    for (int m = 1; m < 512; ++m) {
        term *= -u / (ld(m) * (nu + ld(m)));
        s += term;
        if (std::fabs(term) < 1e-24L * (std::fabs(s) + 1e-30L) && u < ld(m + 1) * (nu + ld(m + 1)))
            break;
    }
    return std::exp(lpre) * s;
}

// ---------------------------------------------------------------------------
// Integral representation
//   J_nu(x) = (1/pi) int_0^pi cos(x sin t - nu t) dt
//           - sin(nu pi)/pi int_0^inf exp(-x sinh t - nu t) dt
// evaluated for several consecutive orders in one pass.  Neighbouring orders
// come from the base order by complex rotation (four multiplies instead of a
// cosine).  The monotone tail only contributes for non-integer order.
// ---------------------------------------------------------------------------

bool is_integer(ld nu)
{
    return nu == std::floor(nu);
}

int panel_count(double x, double nu_max)
{
    return int((x + nu_max) * double(kPi) / double(kPhasePerPanel)) + 2;
}

void quad_oscillatory_double(double x, const std::vector<ld>& nus, std::vector<ld>& acc)
{
    const size_t m = nus.size();
    const double nu0 = double(nus.front());
    const NodeTable& tab = node_table(panel_count(x, double(nus.back())));
    const size_t n = tab.t.size();

    if (m == 1) {
        double a = 0.0;
        for (size_t i = 0; i < n; ++i)
            a += tab.w[i] * std::cos(x * tab.st[i] - nu0 * tab.t[i]);
        acc[0] += a;
        return;
    }
    std::array<double, 8> a{};
    for (size_t i = 0; i < n; ++i) {
        const double st = tab.st[i];
        const double ct = tab.ct[i];
        const double w = tab.w[i];
        const double theta = x * st - nu0 * tab.t[i];
        double c = std::cos(theta);
        double s = std::sin(theta);
        a[0] += w * c;
        for (size_t j = 1; j < m; ++j) {
            const double c2 = c * ct + s * st;
            const double s2 = s * ct - c * st;
            c = c2;
            s = s2;
            a[j] += w * c;
        }
    }
    for (size_t j = 0; j < m; ++j)
        acc[j] += a[j];
}

void quad_oscillatory_ld(double x, const std::vector<ld>& nus, std::vector<ld>& acc)
{
    const GaussRule& gr = gauss_rule();
    const size_t m = nus.size();
    const ld nu0 = nus.front();
    const ld xl = x;
    const int panels = panel_count(x, double(nus.back()));
    const ld h = kPi / ld(panels);

    for (int p = 0; p < panels; ++p) {
        const ld mid = h * (ld(p) + 0.5L);
        const ld half = 0.5L * h;
        for (int q = 0; q < kGlOrder; ++q) {
            const ld t = mid + half * gr.node[q];
            const ld st = std::sin(t);
            const ld w = gr.weight[q] * half;
            const ld theta = xl * st - nu0 * t;
            if (m == 1) {
                acc[0] += w * std::cos(theta);
                continue;
            }
            const ld ct = std::cos(t);
            ld c = std::cos(theta);
            ld s = std::sin(theta);
            acc[0] += w * c;
            for (size_t j = 1; j < m; ++j) {
                const ld c2 = c * ct + s * st;
                const ld s2 = s * ct - c * st;
                c = c2;
                s = s2;
                acc[j] += w * c;
            }
        }
    }
}

void quad_j_many(double x, const std::vector<ld>& nus, std::vector<ld>& out)
{
    const size_t m = nus.size();
    std::vector<ld> acc(m, 0.0L);
    if (x > kLongDoubleQuadCutoff)
        quad_oscillatory_ld(x, nus, acc);
    else
        quad_oscillatory_double(x, nus, acc);

    out.assign(m, 0.0L);
    for (size_t j = 0; j < m; ++j)
        out[j] = acc[j] / kPi;

    bool any_frac = false;
    for (ld nu : nus)
        any_frac = any_frac || !is_integer(nu);
    if (!any_frac)
        return;

    // tail integral, geometric panels refined toward t = 0
    const GaussRule& gr = gauss_rule();
    const ld xl = x;
    const ld T = std::asinh(60.0L / xl);
    constexpr int kTailPanels = 8;
    std::array<ld, kTailPanels + 1> edge{};
    edge[0] = 0.0L;
    for (int i = 1; i <= kTailPanels; ++i)
        edge[i] = T / ld(1 << (kTailPanels - i));
    for (size_t j = 0; j < m; ++j) {
        const ld nu = nus[j];
        if (is_integer(nu))
            continue;
        ld snu = std::sin(kPi * (nu - std::floor(nu)));
        if (long(std::floor(nu)) % 2 != 0)
            snu = -snu;
        ld tail = 0.0L;
        for (int p = 0; p < kTailPanels; ++p) {
            const ld mid = 0.5L * (edge[p] + edge[p + 1]);
            const ld half = 0.5L * (edge[p + 1] - edge[p]);
            for (int q = 0; q < kGlOrder; ++q) {
                const ld t = mid + half * gr.node[q];
                tail += gr.weight[q] * half * std::exp(-xl * std::sinh(t) - nu * t);
            }
        }
        out[j] -= snu / kPi * tail;
    }
}

// Dispatches each order to series or quadrature; quadrature orders share one
// pass over the nodes.  Orders are consecutive: nu0 + i.
void eval_batch(ld nu0, double x, std::vector<ld>& out, size_t count)
{
    out.assign(count, 0.0L);
    std::vector<ld> quad_nus;
    std::vector<size_t> quad_idx;
    for (size_t i = 0; i < count; ++i) {
        const ld nu = nu0 + ld(i);
        if (series_applicable(nu, x)) {
            out[i] = series_j(nu, x);
        } else {
            quad_nus.push_back(nu);
            quad_idx.push_back(i);
        }
    }
    if (!quad_nus.empty()) {
        std::vector<ld> qout;
        quad_j_many(x, quad_nus, qout);
        for (size_t i = 0; i < quad_idx.size(); ++i)
            out[quad_idx[i]] = qout[i];
    }
}

ld eval_one(ld nu, double x)
{
    if (series_applicable(nu, x))
        return series_j(nu, x);
    std::vector<ld> nus{nu}, out;
    quad_j_many(x, nus, out);
    return out[0];
}

} // namespace

double bessel_j(double nu, double x)
{
    check_inputs(nu, x);
    if (x == 0.0)
        return nu == 0.0 ? 1.0 : 0.0;
    return double(eval_one(nu, x));
}

JPair bessel_j_pair(double nu, double x)
{
    check_inputs(nu, x);
    if (x == 0.0) {
        if (nu == 0.0)
            return {1.0, 0.0};
        if (nu == 1.0)
            return {0.0, 0.5};
        if (nu > 1.0)
            return {0.0, 0.0};
        throw std::domain_error("bessel_j_prime: J' diverges at x = 0 for 0 < nu < 1");
    }
    std::vector<ld> vals;
    if (nu >= 1.0) {
        eval_batch(ld(nu) - 1.0L, x, vals, 3);
        return {double(vals[1]), double(0.5L * (vals[0] - vals[2]))};
    }
    eval_batch(ld(nu), x, vals, 2);
    return {double(vals[0]), double(ld(nu) / ld(x) * vals[0] - vals[1])};
}

double bessel_j_prime(double nu, double x)
{
    return bessel_j_pair(nu, x).jp;
}

double phi(double nu, double x, double sigma)
{
    if (!(x > 0.0))
        throw std::domain_error("phi: requires x > 0");
    if (!std::isfinite(sigma) || sigma < 0.0)
        throw std::domain_error("phi: requires sigma >= 0");
    JPair p = bessel_j_pair(nu, x);
    return p.jp + sigma / x * p.j;
}

namespace detail {

double bessel_j_quadrature(double nu, double x)
{
    check_inputs(nu, x);
    if (!(x > 0.0))
        throw std::domain_error("bessel_j_quadrature: requires x > 0");
    std::vector<ld> nus{ld(nu)}, out;
    quad_j_many(x, nus, out);
    return double(out[0]);
}

void bessel_j_batch(double nu, double x, std::span<double> out)
{
    if (out.empty())
        return;
    check_inputs(nu, x);
    check_inputs(nu + double(out.size() - 1), x);
    if (x == 0.0) {
        for (size_t i = 0; i < out.size(); ++i)
            out[i] = (nu + double(i) == 0.0) ? 1.0 : 0.0;
        return;
    }
    std::vector<ld> vals;
    eval_batch(ld(nu), x, vals, out.size());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = double(vals[i]);
}

} // namespace detail

} // namespace robin::specfun
