// End-to-end acceptance checks. Each test case prints exactly one PASS/FAIL
// line so the run log doubles as a checklist.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "nearunitary/ed.hpp"
#include "nearunitary/permutation.hpp"
#include "nearunitary/slater.hpp"
#include "nearunitary/trap.hpp"
#include "nearunitary/tunneling.hpp"
#include "oracles.hpp"

using namespace nearunitary;

namespace {

void report(int num, const char* name, bool ok) {
  std::printf("[acceptance] criterion %02d (%s): %s\n", num, name,
              ok ? "PASS" : "FAIL");
  std::fflush(stdout);
  CHECK(ok);
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + m.rows());
  std::sort(out.begin(), out.end());
  return out;
}

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

// least-squares line y = a*x + b; returns {a, b}
std::pair<double, double> fit_line(const std::vector<double>& x,
                                   const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double a = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {a, (sy - a * sx) / n};
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

TEST_CASE("criterion 1: symmetric hexagon spectrum and uniform ground state") {
  const auto start = Clock::now();
  const RateVector rates({1.0, 1.0});
  const Eigen::MatrixXd t = build_tunneling(3, rates);
  const std::vector<double> expected = {-6, -5, -5, -3, -3, -2};
  const auto eigs = sorted_eigenvalues(t);
  bool ok = true;
  for (int i = 0; i < 6; ++i) ok = ok && std::abs(eigs[i] - expected[i]) < 1e-10;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t);
  Eigen::VectorXd uniform = Eigen::VectorXd::Constant(6, 1.0 / std::sqrt(6.0));
  ok = ok && std::abs(solver.eigenvectors().col(0).dot(uniform)) >= 1.0 - 1e-10;
  ok = ok && seconds_since(start) < 1.0;
  report(1, "symmetric N=3 spectrum", ok);
}

TEST_CASE("criterion 2: asymmetric closed-form spectrum") {
  const auto start = Clock::now();
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> dist(1e-6, 1.0);
  bool ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const double t = dist(rng), u = dist(rng);
    const double s = t + u, r = std::sqrt(t * t - t * u + u * u);
    std::vector<double> expected = {-3 * s,     -2 * s - r, -2 * s - r,
                                    -2 * s + r, -2 * s + r, -s};
    std::sort(expected.begin(), expected.end());
    const auto eigs = sorted_eigenvalues(build_tunneling(3, RateVector({t, u})));
    for (int i = 0; i < 6; ++i) ok = ok && std::abs(eigs[i] - expected[i]) < 1e-9;
  }
  ok = ok && seconds_since(start) < 5.0;
  report(2, "asymmetric N=3 closed forms", ok);
}

TEST_CASE("criterion 3: parity labels of the symmetric clusters") {
  const RateVector rates({1.0, 1.0});
  const auto rep = spectral_report(build_tunneling(3, rates), rates);
  bool ok = rep.clusters.size() == 4;
  if (ok) {
    const Parity expected[] = {Parity::kEven, Parity::kOdd, Parity::kEven,
                               Parity::kOdd};
    const double values[] = {-6, -5, -3, -2};
    for (int i = 0; i < 4; ++i) {
      ok = ok && std::abs(rep.clusters[i].eigenvalue - values[i]) < 1e-10;
      ok = ok && rep.clusters[i].parity == expected[i];
    }
  }
  report(3, "parity labels", ok);
}

TEST_CASE("criterion 4: irrep labels for N=3 and all S4 decompositions") {
  const RateVector r3({1.0, 1.0});
  auto rep = spectral_report(build_tunneling(3, r3), r3, std::nullopt,
                             /*with_shift=*/true);
  bool ok = rep.clusters.size() == 4;
  const std::map<std::string, int> expected[] = {
      {{"trivial", 1}}, {{"standard", 1}}, {{"standard", 1}}, {{"sign", 1}}};
  if (ok) {
    ok = ok && std::abs(rep.clusters[3].eigenvalue) < 1e-10;  // sign level at 0
    for (int i = 0; i < 4; ++i)
      ok = ok && rep.clusters[i].irrep_multiplicities == expected[i];
  }

  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  for (int trial = 0; trial < 5 && ok; ++trial) {
    std::vector<double> t(3);
    for (double& v : t) v = dist(rng);
    if (trial == 0) t = {1.0, 1.0, 1.0};
    const RateVector r4(t);
    try {
      // irrep projection throws if any multiplicity residual exceeds 1e-8
      const auto rep4 = spectral_report(build_tunneling(4, r4), r4);
      int dims = 0;
      for (const auto& cluster : rep4.clusters) {
        for (const auto& [label, mult] : cluster.irrep_multiplicities) {
          for (const auto& row : character_table(4))
            if (row.label == label) dims += mult * row.dimension;
        }
      }
      ok = ok && dims == 24;
    } catch (const consistency_error&) {
      ok = false;
    }
  }
  report(4, "irrep labels", ok);
}

TEST_CASE("criterion 5: particle symmetry preserved, ordering symmetry broken") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  bool ok = true;
  for (int n : {3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<double> t(n - 1);
      for (double& v : t) v = dist(rng);
      const Eigen::MatrixXd op = build_tunneling(n, RateVector(t));
      for (const auto& w : all_orderings(n)) {
        const Permutation p(w.seq());
        const Eigen::MatrixXd pm =
            WellPermutation::from_particle_action(n, p).matrix();
        ok = ok && max_abs(op * pm - pm * op) < 1e-12;
      }
    }
  }
  // asymmetric rates: some ordering permutation fails to commute
  const Eigen::MatrixXd op = build_tunneling(3, RateVector({1.0, 2.0}));
  double worst = 0.0;
  for (const auto& w : all_orderings(3)) {
    const Permutation q(w.seq());
    const Eigen::MatrixXd qm = WellPermutation::from_ordering_action(3, q).matrix();
    worst = std::max(worst, max_abs(op * qm - qm * op));
  }
  ok = ok && worst > 0.1;
  report(5, "symmetry preservation and breaking", ok);
}

TEST_CASE("criterion 6: trace identity") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.1, 1.0);
  bool ok = true;
  for (int n : {2, 3, 4}) {
    const double class_size = static_cast<double>(factorial(n)) / 2.0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> t(n - 1);
      double sum = 0.0;
      for (double& v : t) {
        v = dist(rng);
        sum += v;
      }
      const double expected = -sum * class_size * (factorial(n) - 2);
      const double trace = build_tunneling(n, RateVector(t)).trace();
      ok = ok && std::abs(trace - expected) <= 1e-10 * (std::abs(expected) + 1.0);
    }
  }
  report(6, "trace identity", ok);
}

TEST_CASE("criterion 7: symmetric traps give equal coefficients") {
  const auto start = Clock::now();
  bool ok = true;
  SingleParticleBasis harmonic(TrapSpec::harmonic(), 4);
  for (auto quanta : {std::vector<int>{0, 1, 2}, {0, 1, 3}}) {
    const auto c = all_bond_coefficients(LevelIndex(quanta), harmonic, 10.0);
    ok = ok && std::abs(c.values[0] - c.values[1]) / c.values[0] < 1e-4;
  }
  SingleParticleBasis box(TrapSpec::box(1.0), 4);
  const auto c4 = all_bond_coefficients(LevelIndex({0, 1, 2, 3}), box, 10.0);
  for (double v : c4.values)
    for (double w : c4.values)
      ok = ok && std::abs(v - w) / c4.values[0] < 1e-4;
  ok = ok && seconds_since(start) < 120.0;
  report(7, "symmetric-trap coefficient equality", ok);
}

TEST_CASE("criterion 8: exact 1/g scaling") {
  SingleParticleBasis basis(TrapSpec::harmonic(), 3);
  const LevelIndex level({0, 1, 2});
  const double at_g = bond_coefficient(level, basis, 1, 7.0);
  const double at_2g = bond_coefficient(level, basis, 1, 14.0);
  report(8, "1/g scaling", std::abs(at_g - 2.0 * at_2g) < 1e-12 * at_g);
}

TEST_CASE("criterion 9: quadrature agrees with 1e7-sample Monte Carlo") {
  SingleParticleBasis basis(TrapSpec::harmonic(), 3);
  const LevelIndex level({0, 1, 2});
  double quad_err = 0.0;
  const double value = bond_coefficient(level, basis, 1, 10.0, 1e-7, &quad_err);
  const auto mc = oracle::mc_bond_coefficient(level, basis, 1, 10.0, 10000000, 7);
  const double combined =
      std::sqrt(mc.std_error * mc.std_error + quad_err * quad_err);
  report(9, "quadrature vs Monte Carlo", std::abs(value - mc.value) < 3 * combined);
}

TEST_CASE("criterion 10: end-to-end splitting fingerprint") {
  const auto start = Clock::now();
  EDConfig cfg;
  cfg.trap = TrapSpec::harmonic();
  cfg.num_particles = 3;
  cfg.cutoff = 12;
  cfg.target_level = {0, 1, 2};
  const std::vector<double> gs = {15.0, 20.0, 30.0};
  bool ok = true;
  std::vector<double> inv_g, unit_gaps;
  try {
    const auto cmp = multiplet_comparison(cfg, gs);
    const double expected[] = {0.0, 1.0, 1.0, 3.0, 3.0, 4.0};
    for (const auto& s : cmp.samples) {
      for (int i = 0; i < 6; ++i) {
        const double err = expected[i] > 0.0
                               ? std::abs(s.gap_ratios[i] - expected[i]) / expected[i]
                               : std::abs(s.gap_ratios[i]);
        ok = ok && err < 0.15;
      }
      inv_g.push_back(1.0 / s.g);
      unit_gaps.push_back(s.ed_energies[5] - s.ed_energies[4]);
      // quadrature scale for comparison below: g * t is g-independent
      ok = ok && std::abs(s.rates[0] * s.g - cmp.samples[0].rates[0] * gs[0]) <
                     1e-6 * s.rates[0] * s.g;
    }
    // the basis truncation shifts 1/g_effective by a g-independent constant,
    // so the splitting scale is compared through its slope in 1/g
    const auto [slope, intercept] = fit_line(inv_g, unit_gaps);
    const double quad_scale = cmp.samples[0].rates[0] * gs[0];
    ok = ok && std::abs(std::abs(slope) - quad_scale) / quad_scale < 0.15;
  } catch (const std::exception&) {
    ok = false;
  }
  ok = ok && seconds_since(start) < 600.0;
  report(10, "splitting fingerprint", ok);
}

TEST_CASE("criterion 11: unitary-limit energy from centroid extrapolation") {
  EDConfig cfg;
  cfg.trap = TrapSpec::harmonic();
  cfg.num_particles = 3;
  cfg.target_level = {0, 1, 2};
  const std::vector<double> gs = {15.0, 20.0, 30.0, 45.0, 60.0};
  bool ok = true;
  std::vector<double> cutoffs = {14, 16}, intercepts;
  try {
    for (double m : cutoffs) {
      cfg.cutoff = static_cast<int>(m);
      const auto cmp = multiplet_comparison(cfg, gs);
      std::vector<double> inv_g, centroids;
      for (const auto& s : cmp.samples) {
        double mean = 0.0;
        for (double e : s.ed_energies) mean += e / 6.0;
        inv_g.push_back(1.0 / s.g);
        centroids.push_back(mean);
      }
      intercepts.push_back(fit_line(inv_g, centroids).second);
    }
    // remove the basis-truncation offset, which scales as 1/sqrt(M)
    const double a = 1.0 / std::sqrt(cutoffs[0]), b = 1.0 / std::sqrt(cutoffs[1]);
    const double e_extrap =
        intercepts[1] - (intercepts[0] - intercepts[1]) * b / (a - b);
    ok = std::abs(e_extrap - 4.5) / 4.5 < 0.02;
  } catch (const std::exception&) {
    ok = false;
  }
  report(11, "unitary-limit centroid", ok);
}

TEST_CASE("criterion 12: particle and ordering actions commute exhaustively") {
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const auto orderings = all_orderings(n);
    for (const auto& wp : orderings) {
      const Permutation p(wp.seq());
      for (const auto& wq : orderings) {
        const Permutation q(wq.seq());
        for (const auto& w : orderings) {
          ok = ok && particle_action(p, ordering_action(q, w)) ==
                         ordering_action(q, particle_action(p, w));
        }
      }
    }
  }
  report(12, "action commutation", ok);
}
