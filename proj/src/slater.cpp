#include "nearunitary/slater.hpp"

#include "nearunitary/permutation.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace nearunitary {

LevelIndex::LevelIndex(std::vector<int> q) : quanta(std::move(q)) {
  if (quanta.size() < 2) throw domain_error("level needs at least 2 quanta");
  for (std::size_t i = 1; i < quanta.size(); ++i)
    if (quanta[i] <= quanta[i - 1])
      throw domain_error("level quanta must be strictly increasing");
  if (quanta.front() < 0) throw domain_error("level quanta must be nonnegative");
}

double multiplet_energy(const LevelIndex& level, const SingleParticleBasis& basis) {
  double e = 0.0;
  for (int q : level.quanta) e += basis.energy(q);
  return e;
}

std::vector<LevelIndex> enumerate_levels(const SingleParticleBasis& basis,
                                         int num_particles, int count) {
  if (num_particles < 2 || num_particles > basis.n_max() + 1)
    throw domain_error("particle count incompatible with basis size");
  std::vector<int> pick(num_particles);
  for (int i = 0; i < num_particles; ++i) pick[i] = i;
  std::vector<std::pair<double, std::vector<int>>> levels;
  // enumerate all C(n_max+1, N) subsets
  while (true) {
    double e = 0.0;
    for (int q : pick) e += basis.energy(q);
    levels.emplace_back(e, pick);
    int i = num_particles - 1;
    while (i >= 0 && pick[i] == basis.n_max() - (num_particles - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < num_particles; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return a.second < b.second;  // deterministic tie-break
                   });
  std::vector<LevelIndex> out;
  for (int i = 0; i < count && i < static_cast<int>(levels.size()); ++i)
    out.emplace_back(levels[i].second);
  return out;
}

namespace {

using SmallMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 8, 8>;

}  // namespace

double slater_eval(const LevelIndex& level, const SingleParticleBasis& basis,
                   const std::vector<double>& x) {
  const int n = level.num_particles();
  if (static_cast<int>(x.size()) != n)
    throw domain_error("coordinate count must equal particle count");
  if (level.quanta.back() > basis.n_max())
    throw domain_error("level quanta exceed basis n_max");
  SmallMatrix m(n, n);
  thread_local std::vector<double> col;
  col.resize(n);
  for (int j = 0; j < n; ++j) {
    basis.evaluate_states(level.quanta, x[j], col.data());
    for (int i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m.determinant();
}

double boundary_derivative(const LevelIndex& level, const SingleParticleBasis& basis,
                           double z, const std::vector<double>& others) {
  const int n = level.num_particles();
  if (static_cast<int>(others.size()) != n - 2)
    throw domain_error("boundary point needs N-2 spectator coordinates");
  SmallMatrix m(n, n);
  thread_local std::vector<double> col;
  col.resize(n);
  // column of derivatives for the moving particle, values for its partner
  basis.derivative_states(level.quanta, z, col.data());
  for (int i = 0; i < n; ++i) m(i, 0) = col[i];
  basis.evaluate_states(level.quanta, z, col.data());
  for (int i = 0; i < n; ++i) m(i, 1) = col[i];
  for (int j = 0; j < n - 2; ++j) {
    basis.evaluate_states(level.quanta, others[j], col.data());
    for (int i = 0; i < n; ++i) m(i, j + 2) = col[i];
  }
  return m.determinant();
}

namespace {

const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int order) {
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) {
    std::vector<double> x(order), w(order);
    for (int i = 0; i < order / 2 + order % 2; ++i) {
      // Newton iteration from the Chebyshev-like initial guess
      double t = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= order; ++k) {
          double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = order * (t * p1 - p0) / (t * t - 1.0);
        double step = p1 / dp;
        t -= step;
        if (std::abs(step) < 1e-15) break;
      }
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (t * p1 - p0) / (t * t - 1.0);
      x[i] = -t;
      x[order - 1 - i] = t;
      w[i] = w[order - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    it = cache.emplace(order, std::make_pair(std::move(x), std::move(w))).first;
  }
  return it->second;
}

}  // namespace

const std::vector<double>& gauss_legendre_nodes(int order) {
  return gl_rule(order).first;
}

const std::vector<double>& gauss_legendre_weights(int order) {
  return gl_rule(order).second;
}

namespace {

// Nested Gauss-Legendre over the ordered simplex lower < u_level < ... < b.
// Fixed loop order keeps the accumulation run-to-run reproducible.
template <typename F>
double nested_gl(int dim, int level, double lower, double b, int order,
                 std::vector<double>& coords, const F& f) {
  const auto& xs = gauss_legendre_nodes(order);
  const auto& ws = gauss_legendre_weights(order);
  const double half = 0.5 * (b - lower), mid = 0.5 * (b + lower);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) {
    coords[level] = mid + half * xs[i];
    const double val = (level + 1 == dim)
                           ? f(coords)
                           : nested_gl(dim, level + 1, coords[level], b, order,
                                       coords, f);
    sum += ws[i] * val;
  }
  return sum * half;
}

constexpr int kOrders[] = {16, 24, 32, 48, 64, 96, 128, 192};

}  // namespace

double bond_coefficient(const LevelIndex& level, const SingleParticleBasis& basis,
                        int k, double g, double rel_tol, double* error_estimate) {
  const int n = level.num_particles();
  if (n < 2 || n > 4)
    throw domain_error("coupling quadrature supports N = 2, 3 or 4 only");
  if (k < 1 || k > n - 1) throw domain_error("bond class out of range");
  if (!(g > 0.0)) throw domain_error("interaction strength g must be positive");
  if (level.quanta.back() > basis.n_max())
    throw domain_error("level quanta exceed basis n_max");

  const int dim = n - 1;
  const double a = basis.domain_min(), b = basis.domain_max();
  std::vector<double> coords(dim), others(n - 2);
  // boundary point: coincident pair at ordered position k, spectators around it
  auto integrand = [&](const std::vector<double>& u) {
    for (int j = 0, o = 0; j < dim; ++j)
      if (j != k - 1) others[o++] = u[j];
    const double d = boundary_derivative(level, basis, u[k - 1], others);
    return d * d;
  };

  // The symmetrized-wavefunction derivation carries a 1/N! normalization that
  // cancels the N! sum over domains: for the bare determinant (unit norm per
  // ordering domain) the prefactor is 1/g.  Verified against the exact
  // two-particle harmonic solution and against exact-diagonalization slopes.
  const double prefactor = 1.0 / g;
  double prev = 0.0, value = 0.0, err = 0.0;
  bool converged = false;
  for (std::size_t s = 0; s < std::size(kOrders); ++s) {
    value = nested_gl(dim, 0, a, b, kOrders[s], coords, integrand);
    if (s > 0) {
      err = std::abs(value - prev);
      if (err <= rel_tol * std::abs(value)) {
        converged = true;
        break;
      }
    }
    prev = value;
  }
  if (!converged) {
    std::ostringstream os;
    os << "coupling quadrature did not converge: estimate " << prefactor * err
       << " exceeds tolerance " << rel_tol * std::abs(prefactor * value);
    throw convergence_error(os.str(), prefactor * err);
  }
  if (error_estimate) *error_estimate = prefactor * err;
  return prefactor * value;
}

CouplingCoefficients all_bond_coefficients(const LevelIndex& level,
                                           const SingleParticleBasis& basis,
                                           double g, double rel_tol) {
  CouplingCoefficients out{level, g, {}, {}};
  for (int k = 1; k < level.num_particles(); ++k) {
    double err = 0.0;
    out.values.push_back(bond_coefficient(level, basis, k, g, rel_tol, &err));
    out.quadrature_error.push_back(err);
  }
  return out;
}

}  // namespace nearunitary
