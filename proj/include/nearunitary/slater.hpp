#pragma once

// Fermionized multiplet wavefunctions (Slater determinants of trap
// eigenstates) and the per-bond tunneling coefficients obtained by quadrature
// over the coincidence boundaries of the ordering domains.

#include <cstdint>
#include <vector>

#include "nearunitary/trap.hpp"

namespace nearunitary {

// A multiplet of the unitary limit: N distinct single-particle quanta.
struct LevelIndex {
  std::vector<int> quanta;  // strictly increasing

  explicit LevelIndex(std::vector<int> q);
  int num_particles() const { return static_cast<int>(quanta.size()); }
};

// E_inf = sum of single-particle energies of the level.
double multiplet_energy(const LevelIndex& level, const SingleParticleBasis& basis);

// Levels of N particles in ascending E_inf, lexicographic tie-break on quanta
// (box traps produce exact ties). Requires basis.n_max large enough.
std::vector<LevelIndex> enumerate_levels(const SingleParticleBasis& basis,
                                         int num_particles, int count);

// det[phi_{q_i}(x_j)]; each ordering-domain restriction has unit norm when the
// single-particle states are orthonormal.
double slater_eval(const LevelIndex& level, const SingleParticleBasis& basis,
                   const std::vector<double>& x);

// Derivative of the Slater determinant normal to the coincidence boundary:
// two particles at z (pair at ordered position k), the other N-2 particles at
// the ordered coordinates others.
double boundary_derivative(const LevelIndex& level, const SingleParticleBasis& basis,
                           double z, const std::vector<double>& others);

struct CouplingCoefficients {
  LevelIndex level;
  double g;
  std::vector<double> values;            // t_1 .. t_{N-1}
  std::vector<double> quadrature_error;  // per-entry estimate
};

// t_k = (1/g) * integral over {u_1 < ... < u_{N-1}} with the coincident pair
// at ordered position k of |boundary_derivative|^2. Supports N = 2, 3, 4.
// Throws convergence_error if the nested Gauss-Legendre refinement stalls.
double bond_coefficient(const LevelIndex& level, const SingleParticleBasis& basis,
                        int k, double g, double rel_tol = 1e-7,
                        double* error_estimate = nullptr);

CouplingCoefficients all_bond_coefficients(const LevelIndex& level,
                                           const SingleParticleBasis& basis,
                                           double g, double rel_tol = 1e-7);

// Gauss-Legendre nodes/weights on [-1, 1], cached by order.
const std::vector<double>& gauss_legendre_nodes(int order);
const std::vector<double>& gauss_legendre_weights(int order);

}  // namespace nearunitary
