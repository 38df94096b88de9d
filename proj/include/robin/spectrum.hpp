#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace robin {

enum class BoundaryKind { Neumann, Robin, Dirichlet };

enum class Domain { Interval, Rectangle, Disk };

// One eigenvalue with its separation-of-variables label.
//   rectangle: value = k_a(.)^2 + (1/L^2) k_b(.L)^2, label (a, b) = (n, m)
//   disk:      value = kappa_{a,b}^2, a = angular order, b = radial index
//   interval:  value = k_a^2, b = 0
// multiplicity is 1 except for disk levels with a >= 1, which count twice.
struct Level {
    double value;
    std::int32_t a;
    std::int32_t b;
    std::int32_t multiplicity;
};

// Ordered eigenvalue list for one (domain, boundary condition) pair,
// complete below `cutoff`: every eigenvalue <= cutoff appears.
struct Spectrum {
    Domain domain = Domain::Rectangle;
    double aspect = 1.0; // rectangle aspect ratio L; 1 otherwise
    double sigma = 0.0;  // Robin parameter; ignored for Dirichlet
    BoundaryKind bc = BoundaryKind::Neumann;
    double cutoff = 0.0;
    std::vector<Level> levels; // sorted by (value, a, b)

    std::size_t count_with_multiplicity() const;

    // Values repeated `multiplicity` times, in spectral order.
    std::vector<double> expanded() const;

    // Number of eigenvalues <= x, with multiplicity.  x must be <= cutoff
    // for the answer to be meaningful.
    std::size_t counting(double x) const;
};

// Index-paired Robin-Neumann differences d_n = lambda_n^sigma - lambda_n^0.
struct GapEntry {
    std::size_t n;
    double d;
};

struct GapSeries {
    Domain domain = Domain::Rectangle;
    double aspect = 1.0;
    double sigma = 0.0;
    std::vector<GapEntry> entries; // indices consecutive from 0
};

// Sorts by (value, a, b); the label tie-break keeps the order deterministic
// across thread counts.
void sort_levels(std::vector<Level>& levels);

} // namespace robin
