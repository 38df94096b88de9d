#pragma once

namespace robin::robin1d {

// Frequency k_n(sigma) of the Robin problem on the unit interval:
// -u'' = k^2 u with -u'(0) + sigma u(0) = 0 and u'(1) + sigma u(1) = 0.
// The k_n are the roots of the secular equation
//   (k^2 - sigma^2) sin k = 2 k sigma cos k,
// one in each interval (n pi, (n+1) pi); k_n(0) = n pi exactly.
struct SecularRoot {
    int n;
    double sigma;
    double k;
};

SecularRoot frequency(int n, double sigma);

// n-th Dirichlet frequency of the unit interval, (n+1) pi.
double dirichlet_frequency(int n);

// k_n(sigma)^2 - (n pi)^2, computed from the offset k_n - n pi so no
// precision is lost to cancellation at large n.  Tends to 4 sigma.
double gap1d(int n, double sigma);

namespace detail {
// Offset delta = k_n(sigma) - n pi in (0, pi); 0 for sigma = 0.
double frequency_offset(int n, double sigma);
} // namespace detail

} // namespace robin::robin1d
