#pragma once

#include "robin/threads.hpp"

#include <cstdint>

namespace robin::lattice {

inline constexpr double kDefaultMuCap = 1.0e6;

// Membership in the cusped domain
//   D = { (x,y) : x in [-1,1], max(0,-x) <= y <= g(x) },
// boundary inclusive, with a 1e-12 relative guard band on the comparisons so
// floating-point boundary hits resolve deterministically.
bool in_domain_d(double x, double y);

// N_D(mu) = #{(n,k) : (n, k + max(0,-n) - 3/4) in mu D} with its two-term
// decomposition area(D) mu^2 + mu/2 (area(D) = 1/4).
struct LatticeCount {
    double mu;
    std::int64_t count;
    double area_term;
    double perimeter_term;
    double residual; // count - area_term - perimeter_term
};

// Row enumeration: O(mu) rows, each one closed-form bound plus a boundary
// verification against the pointwise predicate.
LatticeCount count_lattice(double mu, Exec exec = Exec::Parallel, double mu_cap = kDefaultMuCap);

// Naive double loop over candidate labels; the oracle the row enumeration is
// tested against.
std::int64_t count_lattice_brute(double mu);

// Two-sided comparison of the disk counting function against shifted lattice
// counts:
//   N_D(mu - C mu^{-3/7}) - C mu^{4/7} <= N_disk,sigma(mu^2)
//                                      <= N_D(mu + C mu^{-3/7}) + C mu^{4/7}.
// Reports the smallest C <= c_margin for which both inequalities hold.
struct SandwichReport {
    double mu;
    double sigma;
    std::int64_t n_disk;
    bool holds;   // true iff both inequalities hold at C = c_margin
    double c_min; // smallest admissible C (meaningful when holds)
};

SandwichReport sandwich_check(double sigma, double mu, double c_margin,
                              Exec exec = Exec::Parallel);

// Same, but with the disk count supplied by the caller (the expensive part
// when scanning many mu at one sigma).
SandwichReport sandwich_check_with_count(double sigma, double mu, double c_margin,
                                         std::int64_t n_disk, Exec exec = Exec::Parallel);

} // namespace robin::lattice
