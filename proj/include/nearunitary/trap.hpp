#pragma once

// Single-particle eigenenergies and eigenfunctions for 1D traps: harmonic
// (hbar = m = omega = 1), infinite box on [0, L], and grid-sampled custom
// potentials solved by finite differences with hard-wall boundaries.

#include <memory>
#include <string>
#include <vector>

#include "nearunitary/errors.hpp"

namespace nearunitary {

enum class TrapKind { kHarmonic, kBox, kCustom };

struct TrapSpec {
  TrapKind kind = TrapKind::kHarmonic;
  double box_length = 1.0;          // box only
  std::vector<double> grid_x;       // custom only, uniform ascending
  std::vector<double> grid_v;       // custom only, same length
  static TrapSpec harmonic();
  static TrapSpec box(double length);
  static TrapSpec custom(std::vector<double> x, std::vector<double> v);
  // {"kind":"harmonic"} | {"kind":"box","L":1.0} | {"kind":"custom","x":[...],"V":[...]}
  static TrapSpec from_json(const std::string& text);
  std::string to_json() const;
};

class SingleParticleBasis {
 public:
  SingleParticleBasis(TrapSpec spec, int n_max);

  const TrapSpec& spec() const { return spec_; }
  int n_max() const { return n_max_; }
  double energy(int n) const;
  // Evaluation domain [a, b] outside which box/custom states vanish
  // (harmonic: truncation where all states are below 1e-10).
  double domain_min() const { return domain_min_; }
  double domain_max() const { return domain_max_; }

  double evaluate(int n, double x) const;
  double derivative(int n, double x) const;

  // Batch forms used in quadrature inner loops; out must hold quanta.size()
  // values. One Hermite recurrence serves all harmonic states at once.
  void evaluate_states(const std::vector<int>& quanta, double x, double* out) const;
  void derivative_states(const std::vector<int>& quanta, double x, double* out) const;

 private:
  void build_custom();
  double eval_custom(int n, double x) const;

  TrapSpec spec_;
  int n_max_;
  double domain_min_ = 0.0, domain_max_ = 0.0;
  std::vector<double> energies_;
  std::vector<std::vector<double>> grid_states_;  // custom: continuum-normalized
};

}  // namespace nearunitary
