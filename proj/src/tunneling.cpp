#include "nearunitary/tunneling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nearunitary {

RateVector::RateVector(std::vector<double> t) : t_(std::move(t)) {
  if (t_.empty()) throw domain_error("rate vector must have at least one entry");
  for (double v : t_)
    if (!(v >= 0.0)) throw domain_error("tunneling rates must be nonnegative");
}

bool RateVector::palindromic(double rel_tol) const {
  double scale = 0.0;
  for (double v : t_) scale = std::max(scale, std::abs(v));
  for (int k = 0; k < num_bonds(); ++k)
    if (std::abs(t_[k] - t_[num_bonds() - 1 - k]) > rel_tol * (scale + 1.0))
      return false;
  return true;
}

std::vector<BondEdge> bond_edges(int n) {
  const auto wells = all_orderings(n);
  std::vector<BondEdge> edges;
  edges.reserve(factorial(n) * (n - 1) / 2);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(wells.size()); ++i) {
    for (int k = 1; k < n; ++k) {
      const auto q = Permutation::transposition(n, k - 1, k);
      std::int64_t j = ordering_action(q, wells[i]).lex_index();
      if (i < j) edges.push_back({i, j, k});
    }
  }
  return edges;
}

Eigen::MatrixXd build_tunneling(int n, const RateVector& rates) {
  if (rates.num_bonds() != n - 1)
    throw domain_error("rate vector length must be N-1");
  const std::int64_t dim = factorial(n);
  const std::int64_t class_size = dim / 2;  // each well meets one edge per class
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
  double diag = 0.0;
  for (int k = 0; k < n - 1; ++k) diag -= rates[k] * static_cast<double>(class_size - 1);
  t.diagonal().setConstant(diag);
  for (const auto& e : bond_edges(n)) {
    t(e.a, e.b) -= rates[e.bond - 1];
    t(e.b, e.a) -= rates[e.bond - 1];
  }
  return t;
}

std::string to_string(Parity p) {
  switch (p) {
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    default: return "not-applicable";
  }
}

std::int64_t SpectralReport::dim() const {
  std::int64_t d = 0;
  for (const auto& c : clusters) d += c.multiplicity;
  return d;
}

std::vector<ConjugacyClass> conjugacy_classes(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  std::map<std::vector<int>, ConjugacyClass> by_type;
  do {
    Permutation p{std::vector<int>(seq)};
    auto type = p.cycle_type();
    auto it = by_type.find(type);
    if (it == by_type.end())
      by_type.emplace(type, ConjugacyClass{type, 1, p});
    else
      ++it->second.size;
  } while (std::next_permutation(seq.begin(), seq.end()));
  std::vector<ConjugacyClass> out;
  for (auto& [type, cls] : by_type) out.push_back(std::move(cls));
  // map ordering on descending partitions: 1^n first, n-cycle last
  return out;
}

std::vector<IrrepRow> character_table(int n) {
  // Hardcoded by cycle-type class, classes in conjugacy_classes() order.
  switch (n) {
    case 2:
      // classes: [1,1], [2]
      return {{"trivial", 1, {1, 1}}, {"sign", 1, {1, -1}}};
    case 3:
      // classes: [1,1,1], [2,1], [3]
      return {{"trivial", 1, {1, 1, 1}},
              {"sign", 1, {1, -1, 1}},
              {"standard", 2, {2, 0, -1}}};
    case 4:
      // classes: [1,1,1,1], [2,1,1], [2,2], [3,1], [4]
      return {{"trivial", 1, {1, 1, 1, 1, 1}},
              {"sign", 1, {1, -1, 1, 1, -1}},
              {"standard", 3, {3, 1, -1, 0, -1}},
              {"standard_sign", 3, {3, -1, -1, 0, 1}},
              {"twodim", 2, {2, 0, 2, -1, 0}}};
    default:
      throw domain_error("character table hardcoded only for N <= 4");
  }
}

namespace {

// y = W x for a well permutation without forming the matrix.
Eigen::VectorXd apply_well_perm(const WellPermutation& w, const Eigen::VectorXd& x) {
  Eigen::VectorXd y(x.size());
  for (std::int64_t i = 0; i < x.size(); ++i) y(w(i)) = x(i);
  return y;
}

}  // namespace

std::map<std::string, int> irrep_multiplicities(const Eigen::MatrixXd& eigenvectors,
                                                int n, double tol) {
  if (n >= 5) return {{"unlabeled", 0}};
  if (eigenvectors.rows() != factorial(n))
    throw domain_error("eigenvector dimension does not match N!");

  const auto classes = conjugacy_classes(n);
  // trace of (projector onto the span) times the particle-permutation operator,
  // one representative per class
  std::vector<double> chi(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto w = WellPermutation::from_particle_action(n, classes[c].representative);
    double tr = 0.0;
    for (Eigen::Index j = 0; j < eigenvectors.cols(); ++j)
      tr += eigenvectors.col(j).dot(apply_well_perm(w, eigenvectors.col(j)));
    chi[c] = tr;
  }

  std::map<std::string, int> out;
  const double order = static_cast<double>(factorial(n));
  for (const auto& row : character_table(n)) {
    double m = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      m += classes[c].size * row.characters[c] * chi[c];
    m /= order;
    double rounded = std::round(m);
    if (std::abs(m - rounded) > tol) {
      std::ostringstream os;
      os << "non-integer irrep multiplicity " << m << " for " << row.label
         << ": cluster span is not S_N invariant (clustering too coarse or fine)";
      throw consistency_error(os.str());
    }
    if (rounded != 0.0) out[row.label] = static_cast<int>(rounded);
  }
  return out;
}

Parity parity_label(const Eigen::MatrixXd& eigenvectors, const RateVector& rates) {
  if (!rates.palindromic()) return Parity::kNotApplicable;
  const int n = rates.num_particles();
  const auto pi = WellPermutation::reversal(n);
  const Eigen::Index m = eigenvectors.cols();
  Eigen::MatrixXd mapped(eigenvectors.rows(), m);
  for (Eigen::Index j = 0; j < m; ++j)
    mapped.col(j) = apply_well_perm(pi, eigenvectors.col(j));
  Eigen::MatrixXd r = eigenvectors.transpose() * mapped;
  if ((mapped - eigenvectors * r).cwiseAbs().maxCoeff() > 1e-10)
    throw consistency_error("palindromic rates but cluster is not parity invariant");
  const double tol = 1e-10;
  if ((r - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < tol)
    return Parity::kEven;
  if ((r + Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() < tol)
    return Parity::kOdd;
  return Parity::kNotApplicable;  // invariant but mixed-parity span
}

SpectralReport spectral_report(const Eigen::MatrixXd& tunneling,
                               const RateVector& rates,
                               std::optional<double> cluster_tol, bool with_shift) {
  const int n = rates.num_particles();
  const std::int64_t dim = factorial(n);
  if (tunneling.rows() != dim || tunneling.cols() != dim)
    throw domain_error("tunneling matrix dimension does not match N!");
  const double scale = tunneling.cwiseAbs().maxCoeff();
  if ((tunneling - tunneling.transpose()).cwiseAbs().maxCoeff() > 1e-12 * (scale + 1.0))
    throw domain_error("tunneling matrix is not symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tunneling);
  if (solver.info() != Eigen::Success)
    throw consistency_error("eigen decomposition failed");
  Eigen::VectorXd evals = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd& evecs = solver.eigenvectors();

  const double tol =
      cluster_tol.value_or(1e-9 * (evals.cwiseAbs().maxCoeff() + 1.0));
  if (!(tol > 0.0)) throw domain_error("cluster tolerance must be positive");

  std::vector<double> gaps;
  for (Eigen::Index i = 0; i + 1 < evals.size(); ++i)
    gaps.push_back(evals(i + 1) - evals(i));
  for (double g : gaps) {
    if (g > tol && g <= 10.0 * tol) {
      std::ostringstream os;
      os << "ambiguous degeneracy clustering (gap within 10x of tolerance " << tol
         << "); gaps:";
      for (double gg : gaps) os << ' ' << gg;
      throw consistency_error(os.str());
    }
  }

  double shift = 0.0;
  if (with_shift) {
    // pins the totally antisymmetric level (eigenvalue -sum_k t_k (N!/2 - 2))
    // at exactly zero; for N=3 this is the t+u identity shift
    const double class_size = static_cast<double>(dim / 2);
    for (int k = 0; k < rates.num_bonds(); ++k) shift += rates[k] * (class_size - 2.0);
  }

  SpectralReport report;
  report.shift = shift;
  Eigen::Index start = 0;
  for (Eigen::Index i = 0; i < evals.size(); ++i) {
    const bool last = (i + 1 == evals.size());
    if (last || evals(i + 1) - evals(i) > tol) {
      Cluster c;
      c.multiplicity = static_cast<int>(i - start + 1);
      c.eigenvalue = evals.segment(start, c.multiplicity).mean() + shift;
      c.eigenvectors = evecs.middleCols(start, c.multiplicity);
      c.irrep_multiplicities = irrep_multiplicities(c.eigenvectors, n);
      c.parity = parity_label(c.eigenvectors, rates);
      report.clusters.push_back(std::move(c));
      start = i + 1;
    }
  }
  return report;
}

}  // namespace nearunitary
