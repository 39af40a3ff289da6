#pragma once

// Independent verification path: exact diagonalization of the contact-
// interaction Hamiltonian in a truncated product basis of distinguishable
// particles, and comparison of the near-unitary multiplet splitting against
// the tunneling-operator prediction.

#include <Eigen/Dense>
#include <vector>

#include "nearunitary/slater.hpp"
#include "nearunitary/trap.hpp"
#include "nearunitary/tunneling.hpp"

namespace nearunitary {

struct EDConfig {
  TrapSpec trap;
  int num_particles = 3;  // 2 or 3
  double g = 10.0;        // energy * length, > 0
  int cutoff = 12;        // single-particle states per slot; basis dim M^N
  std::vector<int> target_level = {0, 1, 2};

  void validate() const;
};

// 1D integral of phi_a phi_b phi_c phi_d; fully symmetric in the indices.
double overlap4(const SingleParticleBasis& basis, int a, int b, int c, int d);

// The dense Hamiltonian H = sum_i h_i + g sum_{i<j} delta(x_i - x_j) in the
// M^N product basis of distinguishable particles (slot 0 most significant).
Eigen::MatrixXd ed_hamiltonian(const EDConfig& config);

// Ascending eigenvalues of the Hamiltonian, lowest 2*N!+10 of them.
std::vector<double> ed_spectrum(const EDConfig& config);

struct MultipletSample {
  double g;
  std::vector<double> ed_energies;  // the N! multiplet energies, ascending
  std::vector<double> predicted;    // E_inf + shifted tunneling eigenvalue
  std::vector<double> slope_ratios; // splitting from multiplet top, ed/predicted
  std::vector<double> gap_ratios;   // (E_top - E_i) / smallest nonzero gap
  std::vector<double> rates;        // quadrature coefficients at this g
};

struct MultipletComparison {
  double e_infinity = 0.0;
  std::vector<MultipletSample> samples;
};

// Runs ED at each g, extracts the N! states nearest E_inf (requiring the
// multiplet spread to stay under 1/2 of the gap to its neighbors), and
// compares against the shifted tunneling spectrum built from the quadrature
// coefficients. The S_N content of the ED multiplet span is checked against
// the predicted irrep multiplicities.
MultipletComparison multiplet_comparison(const EDConfig& config,
                                         const std::vector<double>& g_samples);

}  // namespace nearunitary
