#include "nearunitary/ed.hpp"

#include <lapacke.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace nearunitary {

void EDConfig::validate() const {
  if (num_particles != 2 && num_particles != 3)
    throw domain_error("ED supports N = 2 or 3");
  if (!(g > 0.0)) throw domain_error("g must be positive");
  LevelIndex level{target_level};
  if (level.num_particles() != num_particles)
    throw domain_error("target level size must equal particle count");
  if (cutoff < level.quanta.back() + 4)
    throw domain_error("cutoff M must be at least max target quantum + 4");
  double dim = std::pow(static_cast<double>(cutoff), num_particles);
  if (dim > 1e4) throw domain_error("basis dimension M^N exceeds 10^4");
}

double overlap4(const SingleParticleBasis& basis, int a, int b, int c, int d) {
  for (int n : {a, b, c, d})
    if (n < 0 || n > basis.n_max()) throw domain_error("overlap index out of range");
  const double lo = basis.domain_min(), hi = basis.domain_max();
  const std::vector<int> quanta = {a, b, c, d};
  std::vector<double> vals(4);
  double prev = 0.0;
  for (int order : {64, 96, 128, 192, 256, 384, 512, 768}) {
    const auto& xs = gauss_legendre_nodes(order);
    const auto& ws = gauss_legendre_weights(order);
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
      basis.evaluate_states(quanta, mid + half * xs[i], vals.data());
      sum += ws[i] * vals[0] * vals[1] * vals[2] * vals[3];
    }
    sum *= half;
    if (order > 64 && std::abs(sum - prev) <= 1e-11 * (std::abs(sum) + 1.0))
      return sum;
    prev = sum;
  }
  throw convergence_error("overlap quadrature did not converge", std::abs(prev));
}

namespace {

// Flattened symmetric table of overlap4 values for indices below m.
class OverlapTable {
 public:
  OverlapTable(const SingleParticleBasis& basis, int m) : m_(m), data_(m * m * m * m) {
    std::map<std::array<int, 4>, double> by_sorted;
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b)
        for (int c = b; c < m; ++c)
          for (int d = c; d < m; ++d)
            by_sorted[{a, b, c, d}] = overlap4(basis, a, b, c, d);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) {
            std::array<int, 4> key = {a, b, c, d};
            std::sort(key.begin(), key.end());
            data_[((a * m + b) * m + c) * m + d] = by_sorted[key];
          }
  }
  double operator()(int a, int b, int c, int d) const {
    return data_[((a * m_ + b) * m_ + c) * m_ + d];
  }

 private:
  int m_;
  std::vector<double> data_;
};

struct EDSolution {
  std::vector<double> eigenvalues;  // all, ascending
  Eigen::MatrixXd eigenvectors;     // columns match eigenvalues
};

EDSolution ed_solve(const EDConfig& config) {
  Eigen::MatrixXd h = ed_hamiltonian(config);
  const int dim = static_cast<int>(h.rows());
  std::vector<double> evals(dim);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', dim, h.data(), dim,
                                   evals.data());
  if (info != 0) throw consistency_error("ED eigensolver failed");
  return {std::move(evals), std::move(h)};
}

}  // namespace

Eigen::MatrixXd ed_hamiltonian(const EDConfig& config) {
  config.validate();
  const int n = config.num_particles;
  const int m = config.cutoff;
  SingleParticleBasis basis(config.trap, m - 1);
  OverlapTable table(basis, m);

  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= m;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  // multi-index decode: idx = ((i0*m + i1)*m + i2)...; slot 0 most significant
  std::vector<int> strides(n, 1);
  for (int s = n - 2; s >= 0; --s) strides[s] = strides[s + 1] * m;

  std::vector<int> ket(n);
  for (int idx = 0; idx < dim; ++idx) {
    int rest = idx;
    for (int s = 0; s < n; ++s) {
      ket[s] = rest / strides[s];
      rest %= strides[s];
    }
    double diag = 0.0;
    for (int s = 0; s < n; ++s) diag += basis.energy(ket[s]);
    h(idx, idx) += diag;
    // delta interactions couple one pair of slots at a time
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int a = 0; a < m; ++a) {
          for (int b = 0; b < m; ++b) {
            const int jdx = idx + (a - ket[i]) * strides[i] + (b - ket[j]) * strides[j];
            if (jdx < idx) continue;  // fill upper triangle once
            const double v = config.g * table(ket[i], ket[j], a, b);
            h(idx, jdx) += v;
            if (jdx != idx) h(jdx, idx) += v;
          }
        }
      }
    }
  }

  return h;
}

std::vector<double> ed_spectrum(const EDConfig& config) {
  auto sol = ed_solve(config);
  const int want = std::min<int>(2 * factorial(config.num_particles) + 10,
                                 static_cast<int>(sol.eigenvalues.size()));
  sol.eigenvalues.resize(want);
  return sol.eigenvalues;
}

namespace {

// S_N content of a span of product-basis vectors, by character projection with
// the tensor-slot permutation action.
std::map<std::string, int> product_basis_irreps(const Eigen::MatrixXd& span, int n,
                                                int m) {
  const auto classes = conjugacy_classes(n);
  std::vector<int> strides(n, 1);
  for (int s = n - 2; s >= 0; --s) strides[s] = strides[s + 1] * m;
  const int dim = static_cast<int>(span.rows());

  std::vector<double> chi(classes.size());
  std::vector<int> ket(n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& p = classes[c].representative;
    double tr = 0.0;
    for (int idx = 0; idx < dim; ++idx) {
      int rest = idx;
      for (int s = 0; s < n; ++s) {
        ket[s] = rest / strides[s];
        rest %= strides[s];
      }
      // particle permutation p sends slot s content to slot p(s)
      int jdx = 0;
      for (int s = 0; s < n; ++s) jdx += ket[s] * strides[p(s)];
      tr += span.row(jdx).dot(span.row(idx));
    }
    chi[c] = tr;
  }
  std::map<std::string, int> out;
  const double order = static_cast<double>(factorial(n));
  for (const auto& row : character_table(n)) {
    double mult = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      mult += classes[c].size * row.characters[c] * chi[c];
    mult /= order;
    const double rounded = std::round(mult);
    if (std::abs(mult - rounded) > 1e-6)
      throw consistency_error("ED multiplet span has non-integer S_N content");
    if (rounded != 0.0) out[row.label] = static_cast<int>(rounded);
  }
  return out;
}

}  // namespace

MultipletComparison multiplet_comparison(const EDConfig& config,
                                         const std::vector<double>& g_samples) {
  config.validate();
  if (g_samples.empty()) throw domain_error("need at least one g sample");
  const int n = config.num_particles;
  const int nf = static_cast<int>(factorial(n));
  const LevelIndex level{config.target_level};

  SingleParticleBasis quad_basis(config.trap, level.quanta.back() + 1);
  const double e_inf = multiplet_energy(level, quad_basis);

  MultipletComparison out;
  out.e_infinity = e_inf;

  for (double g : g_samples) {
    if (!(g > 0.0))
      throw domain_error("multiplet is undefined at g <= 0 (no isolation)");
    EDConfig cfg = config;
    cfg.g = g;
    auto sol = ed_solve(cfg);
    const auto& ev = sol.eigenvalues;

    // the N! states nearest E_inf, by energy distance
    std::vector<int> order(ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(ev[a] - e_inf) < std::abs(ev[b] - e_inf);
    });
    std::vector<int> picked(order.begin(), order.begin() + nf);
    std::sort(picked.begin(), picked.end());
    const double lo = ev[picked.front()], hi = ev[picked.back()];
    const double spread = hi - lo;
    double gap = std::numeric_limits<double>::infinity();
    if (picked.front() > 0) gap = std::min(gap, lo - ev[picked.front() - 1]);
    if (picked.back() + 1 < static_cast<int>(ev.size()))
      gap = std::min(gap, ev[picked.back() + 1] - hi);
    if (!(spread < 0.5 * gap)) {
      std::ostringstream os;
      os << "multiplet not spectrally isolated at g=" << g << ": spread " << spread
         << " vs neighbor gap " << gap;
      throw domain_error(os.str());
    }

    MultipletSample sample;
    sample.g = g;
    for (int i : picked) sample.ed_energies.push_back(ev[i]);

    // prediction from the quadrature coefficients at this g
    auto coeffs = all_bond_coefficients(level, quad_basis, g);
    sample.rates = coeffs.values;
    RateVector rates(coeffs.values);
    auto report = spectral_report(build_tunneling(n, rates), rates, std::nullopt,
                                  /*with_shift=*/true);
    for (const auto& cluster : report.clusters)
      for (int i = 0; i < cluster.multiplicity; ++i)
        sample.predicted.push_back(e_inf + cluster.eigenvalue);

    // splittings are measured from the top of the multiplet: the common
    // basis-truncation shift of the whole multiplet cancels in differences
    for (int i = 0; i < nf; ++i) {
      const double num = sample.ed_energies[nf - 1] - sample.ed_energies[i];
      const double den = sample.predicted[nf - 1] - sample.predicted[i];
      sample.slope_ratios.push_back(std::abs(den) > 1e-14 ? num / den : 1.0);
    }

    const double top = sample.ed_energies.back();
    const double unit = top - sample.ed_energies[nf - 2];
    for (int i = nf - 1; i >= 0; --i)
      sample.gap_ratios.push_back(unit > 0.0 ? (top - sample.ed_energies[i]) / unit
                                             : 0.0);

    // S_N content of the ED multiplet must match the predicted labels
    Eigen::MatrixXd span(sol.eigenvectors.rows(), nf);
    for (int i = 0; i < nf; ++i) span.col(i) = sol.eigenvectors.col(picked[i]);
    auto ed_irreps = product_basis_irreps(span, n, cfg.cutoff);
    std::map<std::string, int> predicted_irreps;
    for (const auto& cluster : report.clusters)
      for (const auto& [label, mult] : cluster.irrep_multiplicities)
        predicted_irreps[label] += mult;
    if (ed_irreps != predicted_irreps)
      throw consistency_error(
          "irrep mismatch between ED multiplet and tunneling prediction");

    out.samples.push_back(std::move(sample));
  }
  return out;
}

}  // namespace nearunitary
