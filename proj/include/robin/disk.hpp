#pragma once

#include "robin/spectrum.hpp"
#include "robin/threads.hpp"

#include <cstddef>
#include <vector>

namespace robin::disk {

inline constexpr std::size_t kDefaultLevelCap = 20'000'000;

// Spectra of the unit disk for several boundary conditions in one pass.
// Radial orders share the certified ladder of J_n zeros, which brackets
// both derivative zeros (Neumann) and Robin combination zeros, so asking
// for extra boundary conditions is nearly free.
struct SpectrumSet {
    std::vector<Spectrum> robin; // one per requested sigma
    Spectrum neumann;            // present iff with_neumann
    Spectrum dirichlet;          // present iff with_dirichlet
};

SpectrumSet disk_spectra(const std::vector<double>& sigmas, bool with_neumann,
                         bool with_dirichlet, double mu_max, Exec exec = Exec::Parallel,
                         std::size_t level_cap = kDefaultLevelCap);

// Eigenvalues kappa_{n,k}^2 <= mu_max^2 of the Robin disk (sigma = 0 gives
// the Neumann disk including the zero mode).  Levels with angular order
// n >= 1 carry multiplicity 2.
Spectrum disk_spectrum(double sigma, double mu_max, Exec exec = Exec::Parallel,
                       std::size_t level_cap = kDefaultLevelCap);

// Dirichlet eigenvalues j_{n,k}^2 <= mu_max^2 (used for bracketing checks).
Spectrum disk_dirichlet_spectrum(double mu_max, Exec exec = Exec::Parallel,
                                 std::size_t level_cap = kDefaultLevelCap);

// N_{disk,sigma}(x): eigenvalues <= x counted with multiplicity.
std::size_t disk_counting(double sigma, double x, Exec exec = Exec::Parallel);

// First N Robin-Neumann gaps of the disk, paired by rank.
GapSeries disk_gaps(double sigma, std::size_t N, Exec exec = Exec::Parallel);

// Leading-order uniform zero estimate F(n, k + max(0,-n) - 3/4); accepts
// negative angular orders through kappa_{-n,k} = kappa_{n,k}.
double kappa_approx(int n, int k);

} // namespace robin::disk
