#pragma once

#include <span>
#include <vector>

namespace robin::specfun {

// ---------------------------------------------------------------------------
// Bessel functions of the first kind, real order nu >= 0.
//
// Evaluation strategy: ascending power series while its roundoff
// amplification stays small, otherwise adaptive Gauss-Legendre quadrature of
// the integral representation
//
//   J_nu(x) = (1/pi) int_0^pi cos(x sin t - nu t) dt
//           - sin(nu pi)/pi int_0^inf exp(-x sinh t - nu t) dt .
//
// Both paths run in 80-bit precision internally.  Valid for x in [0, 2e4],
// nu in [0, 2e3]; error <= 1e-12 + 1e-10*|J| on that domain.
// ---------------------------------------------------------------------------

double bessel_j(double nu, double x);

// J'_nu(x) via the recurrences J'_nu = (J_{nu-1} - J_{nu+1})/2 (nu >= 1),
// J'_nu = (nu/x) J_nu - J_{nu+1} (0 < nu < 1) and J'_0 = -J_1.
double bessel_j_prime(double nu, double x);

struct JPair {
    double j;
    double jp;
};

// J and J' together; the quadrature path shares nodes between orders, so
// this costs much less than two independent calls.
JPair bessel_j_pair(double nu, double x);

// phi_nu(x) = J'_nu(x) + (sigma/x) J_nu(x); its positive zeros are the
// zeros of x J'_nu(x) + sigma J_nu(x).  Requires x > 0.
double phi(double nu, double x, double sigma);

// ---------------------------------------------------------------------------
// Zeros.
// ---------------------------------------------------------------------------

enum class ZeroKind { J, JPrime, RobinCombo };

// Verified sign-change interval around the k-th zero.  For JPrime at
// (nu=0, k=1) and RobinCombo at (nu=0, k=1, sigma=0) the bracket degenerates
// to [0, 0] by the usual convention.
struct ZeroBracket {
    double lo;
    double hi;
    int k;
    ZeroKind kind;
};

// k-th positive zero of J_nu (kind J) or J'_nu (kind JPrime), to absolute
// tolerance 1e-10.  x = 0 counts as the first zero of J'_0.
double bessel_zero(double nu, int k, ZeroKind kind);

// kappa_{nu,k}: k-th zero of x J'_nu(x) + sigma J_nu(x), located inside the
// verified interlacing bracket (j'_{nu,k}, j_{nu,k}).  sigma = 0 reduces to
// the derivative zero; (nu=0, k=1, sigma=0) is 0 by convention.
double robin_bessel_zero(double nu, int k, double sigma);

// Bracket construction used by the zero finders (exposed for tests).
ZeroBracket zero_bracket(double nu, int k, ZeroKind kind, double sigma = 0.0);

// k-th (negative) zero of Ai'.  k = 1 is refined by Newton on the Maclaurin
// series; k >= 2 returns the leading term -[3pi/2 (k - 3/4)]^(2/3), whose
// error is O(k^{-4/3}).
double airy_prime_zero(int k);

// Zeros of several families at one order, sharing a certified ladder of J
// zeros: each j'_{nu,k} and kappa_{nu,k} is bisected inside
// (j_{nu,k-1}, j_{nu,k}), where the sign pattern is known by parity.  This
// is the bulk kernel behind the disk spectra; the one-shot functions above
// locate single zeros from scratch.
struct ZeroLadder {
    std::vector<double> j;                  // j_{nu,k}, k = 1..
    std::vector<double> jprime;             // j'_{nu,k} (j'_{0,1} = 0)
    std::vector<std::vector<double>> robin; // kappa_{nu,k}, one list per sigma
};

// Emits zeros with k <= k_max and value <= x_max (pass x_max = infinity for
// an index-only ladder).
ZeroLadder zero_ladder(double nu, int k_max, double x_max, bool want_jprime,
                       std::span<const double> sigmas);

// ---------------------------------------------------------------------------
// Geometric functions behind the uniform zero estimates.
//
// zeta(z) solves (dzeta/dz)^2 = (1 - z^2)/(zeta z^2) and for z >= 1 is given
// in closed form by 2/3 (-zeta)^(3/2) = sqrt(z^2 - 1) - arccos(1/z).
// F is the degree-1 homogeneous function on S = {y >= max(0, -x)} that is
// identically 1 on the graph of g.
// ---------------------------------------------------------------------------

double g(double x);          // (1/pi)(sqrt(1-x^2) - x arccos x),  |x| <= 1
double zeta_of_z(double z);  // z >= 1  ->  zeta <= 0, strictly decreasing
double z_of_zeta(double zeta); // inverse of zeta_of_z
double F(double x, double y);

// First-order uniform estimates used as root guesses; good to O(n^{1/3}/k^{4/3}).
double zero_estimate(double nu, int k, ZeroKind kind);

namespace detail {
// Evaluates J_{nu+i}(x) for i = 0..out.size()-1 with one pass over the
// quadrature nodes.  Series-regime orders are dispatched individually.
void bessel_j_batch(double nu, double x, std::span<double> out);

// Forces the integral-representation path regardless of the usual
// series/quadrature dispatch; the checked side of the oracle cross-check.
double bessel_j_quadrature(double nu, double x);
} // namespace detail

} // namespace robin::specfun
