#pragma once

// Tunneling operators on the graph of particle orderings: edge enumeration
// by bond class, operator assembly from per-bond rates, dense diagonalization
// with degeneracy clustering, and level labels (S_N irrep, parity).

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearunitary/permutation.hpp"

namespace nearunitary {

// Edge between two wells differing by one adjacent-position transposition;
// bond is the 1-based ordered position k of the swapped pair.
struct BondEdge {
  std::int64_t a;  // lex well indices, a < b
  std::int64_t b;
  int bond;
};

// Per-bond-class tunneling rates t[0] = t_1 .. t[N-2] = t_{N-1}, energy units.
class RateVector {
 public:
  explicit RateVector(std::vector<double> t);
  int num_bonds() const { return static_cast<int>(t_.size()); }
  int num_particles() const { return num_bonds() + 1; }
  double operator[](int k) const { return t_.at(k); }  // 0-based class index
  const std::vector<double>& values() const { return t_; }
  // t_k == t_{N-k}: parity is only defined for palindromic rates.
  bool palindromic(double rel_tol = 1e-12) const;

 private:
  std::vector<double> t_;
};

// All N!*(N-1)/2 adjacent-transposition edges, tagged by bond class.
std::vector<BondEdge> bond_edges(int n);

// T = -sum_k t_k sum_{edges e in class k} P(transposition of wells e.a, e.b).
Eigen::MatrixXd build_tunneling(int n, const RateVector& rates);

enum class Parity { kEven, kOdd, kNotApplicable };
std::string to_string(Parity p);

struct Cluster {
  double eigenvalue;
  int multiplicity;
  Eigen::MatrixXd eigenvectors;  // N! x multiplicity, orthonormal columns
  std::map<std::string, int> irrep_multiplicities;
  Parity parity = Parity::kNotApplicable;
};

struct SpectralReport {
  double shift = 0.0;  // added multiple of the identity
  std::vector<Cluster> clusters;
  std::int64_t dim() const;
};

// Diagonalize, cluster degeneracies by gap > cluster_tol, and label clusters.
// with_shift adds t_k*(N!/2 - 2) summed over classes so the totally
// antisymmetric level sits at exactly 0.
SpectralReport spectral_report(const Eigen::MatrixXd& tunneling,
                               const RateVector& rates,
                               std::optional<double> cluster_tol = std::nullopt,
                               bool with_shift = false);

// Character-projection multiplicities of S_N irreps on the span of the given
// orthonormal eigenvector columns. Labels for N <= 4: "trivial", "sign",
// "standard", "standard_sign", "twodim". N >= 5 yields {"unlabeled": 0}.
std::map<std::string, int> irrep_multiplicities(const Eigen::MatrixXd& eigenvectors,
                                                int n, double tol = 1e-8);

// Parity of a degenerate cluster under ordering reversal. Rates that are not
// palindromic have no parity symmetry.
Parity parity_label(const Eigen::MatrixXd& eigenvectors, const RateVector& rates);

// Character table of S_N for N <= 4: irrep label -> (dimension, character per
// conjugacy class). Classes are ordered as returned by conjugacy_classes().
struct IrrepRow {
  std::string label;
  int dimension;
  std::vector<double> characters;
};
struct ConjugacyClass {
  std::vector<int> cycle_type;  // descending partition
  int size;
  Permutation representative;
};
std::vector<ConjugacyClass> conjugacy_classes(int n);
std::vector<IrrepRow> character_table(int n);

}  // namespace nearunitary
