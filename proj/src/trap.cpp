#include "nearunitary/trap.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nearunitary {

TrapSpec TrapSpec::harmonic() { return TrapSpec{}; }

TrapSpec TrapSpec::box(double length) {
  if (!(length > 0.0)) throw domain_error("box length must be positive");
  TrapSpec s;
  s.kind = TrapKind::kBox;
  s.box_length = length;
  return s;
}

TrapSpec TrapSpec::custom(std::vector<double> x, std::vector<double> v) {
  if (x.size() != v.size() || x.size() < 16)
    throw domain_error("custom trap needs matching x/V arrays (>= 16 points)");
  const double h = x[1] - x[0];
  if (!(h > 0.0)) throw domain_error("custom grid must be strictly increasing");
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double hi = x[i] - x[i - 1];
    if (!(hi > 0.0) || std::abs(hi - h) > 1e-12 * (std::abs(h) + std::abs(x[i])))
      throw domain_error("custom grid must be uniform to 1e-12 relative");
  }
  TrapSpec s;
  s.kind = TrapKind::kCustom;
  s.grid_x = std::move(x);
  s.grid_v = std::move(v);
  return s;
}

TrapSpec TrapSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw domain_error(std::string("trap JSON parse failure: ") + e.what());
  }
  const std::string kind = j.value("kind", "");
  if (kind == "harmonic") return harmonic();
  if (kind == "box") {
    if (!j.contains("L")) throw domain_error("box trap requires \"L\"");
    return box(j.at("L").get<double>());
  }
  if (kind == "custom") {
    if (!j.contains("x") || !j.contains("V"))
      throw domain_error("custom trap requires \"x\" and \"V\" arrays");
    return custom(j.at("x").get<std::vector<double>>(),
                  j.at("V").get<std::vector<double>>());
  }
  throw domain_error("unknown trap kind \"" + kind + "\"");
}

std::string TrapSpec::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case TrapKind::kHarmonic: j["kind"] = "harmonic"; break;
    case TrapKind::kBox:
      j["kind"] = "box";
      j["L"] = box_length;
      break;
    case TrapKind::kCustom:
      j["kind"] = "custom";
      j["x"] = grid_x;
      j["V"] = grid_v;
      break;
  }
  return j.dump();
}

namespace {

constexpr double kPi = std::numbers::pi;

// Normalized Hermite functions up to order n by upward recurrence, with the
// Gaussian folded in so no factorial overflow occurs.
void hermite_functions(int n, double x, std::vector<double>& out) {
  out.resize(n + 1);
  out[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 2; k <= n; ++k)
    out[k] = std::sqrt(2.0 / k) * x * out[k - 1] -
             std::sqrt(static_cast<double>(k - 1) / k) * out[k - 2];
}

}  // namespace

SingleParticleBasis::SingleParticleBasis(TrapSpec spec, int n_max)
    : spec_(std::move(spec)), n_max_(n_max) {
  if (n_max < 1) throw domain_error("n_max must be at least 1");
  energies_.resize(n_max + 1);
  switch (spec_.kind) {
    case TrapKind::kHarmonic: {
      for (int n = 0; n <= n_max; ++n) energies_[n] = n + 0.5;
      // classical turning point of the highest state plus a tail margin
      const double l = std::max(12.0, std::sqrt(2.0 * n_max + 1.0) + 8.0);
      domain_min_ = -l;
      domain_max_ = l;
      break;
    }
    case TrapKind::kBox: {
      const double l = spec_.box_length;
      for (int n = 0; n <= n_max; ++n)
        energies_[n] = (n + 1.0) * (n + 1.0) * kPi * kPi / (2.0 * l * l);
      domain_min_ = 0.0;
      domain_max_ = l;
      break;
    }
    case TrapKind::kCustom:
      build_custom();
      break;
  }
}

void SingleParticleBasis::build_custom() {
  const auto& x = spec_.grid_x;
  const auto& v = spec_.grid_v;
  const int m = static_cast<int>(x.size());
  // heuristic: state n_max has at most n_max+1 half-wavelengths across the grid
  if (m < 10 * (n_max_ + 1))
    throw domain_error(
        "custom grid too coarse: need at least 10 points per half-wavelength of "
        "state n_max");
  const double h = x[1] - x[0];

  // central-difference kinetic term with hard walls just outside the grid
  std::vector<double> diag(m), off(m - 1, -0.5 / (h * h));
  for (int i = 0; i < m; ++i) diag[i] = 1.0 / (h * h) + v[i];

  const int want = n_max_ + 1;
  std::vector<double> w(m), z(static_cast<std::size_t>(m) * want);
  std::vector<lapack_int> isuppz(2 * want);
  lapack_int found = 0;
  lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', m, diag.data(),
                                   off.data(), 0.0, 0.0, 1, want, 0.0, &found,
                                   w.data(), z.data(), m, isuppz.data());
  if (info != 0 || found < want)
    throw consistency_error("finite-difference eigensolver failed");

  const double v_edge = std::max(v.front(), v.back());
  for (int n = 0; n < want; ++n) {
    energies_[n] = w[n];
    if (w[n] > v_edge)
      throw domain_error(
          "custom trap has fewer than n_max+1 bound-like states below the "
          "grid-boundary potential");
  }
  for (int n = 1; n < want; ++n)
    if (!(energies_[n] > energies_[n - 1]))
      throw consistency_error("custom spectrum not strictly ascending");

  grid_states_.assign(want, std::vector<double>(m));
  const double norm = 1.0 / std::sqrt(h);  // continuum normalization
  for (int n = 0; n < want; ++n) {
    for (int i = 0; i < m; ++i) grid_states_[n][i] = z[n * m + i] * norm;
    // sign convention: positive at the leftmost interior antinode
    auto& psi = grid_states_[n];
    double peak = 0.0;
    for (double p : psi) peak = std::max(peak, std::abs(p));
    for (int i = 1; i + 1 < m; ++i) {
      const double a = std::abs(psi[i]);
      if (a > 0.1 * peak && a >= std::abs(psi[i - 1]) && a >= std::abs(psi[i + 1])) {
        if (psi[i] < 0.0)
          for (double& p : psi) p = -p;
        break;
      }
    }
  }
  domain_min_ = x.front();
  domain_max_ = x.back();
}

double SingleParticleBasis::energy(int n) const {
  if (n < 0 || n > n_max_) throw domain_error("state index out of range");
  return energies_[n];
}

double SingleParticleBasis::evaluate(int n, double x) const {
  if (n < 0 || n > n_max_) throw domain_error("state index out of range");
  switch (spec_.kind) {
    case TrapKind::kHarmonic: {
      thread_local std::vector<double> h;
      hermite_functions(n, x, h);
      return h[n];
    }
    case TrapKind::kBox: {
      const double l = spec_.box_length;
      if (x <= 0.0 || x >= l) return 0.0;
      return std::sqrt(2.0 / l) * std::sin((n + 1) * kPi * x / l);
    }
    case TrapKind::kCustom:
      return eval_custom(n, x);
  }
  return 0.0;
}

double SingleParticleBasis::eval_custom(int n, double x) const {
  const auto& gx = spec_.grid_x;
  const int m = static_cast<int>(gx.size());
  if (x <= gx.front() || x >= gx.back()) return 0.0;
  const double h = gx[1] - gx[0];
  int i = static_cast<int>((x - gx.front()) / h);
  i = std::clamp(i, 1, m - 3);
  const double t = (x - gx[i]) / h;
  const auto& psi = grid_states_[n];
  // Catmull-Rom through the four surrounding grid values
  const double p0 = psi[i - 1], p1 = psi[i], p2 = psi[i + 1], p3 = psi[i + 2];
  return p1 + 0.5 * t * (p2 - p0 +
         t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
         t * (3.0 * (p1 - p2) + p3 - p0)));
}

void SingleParticleBasis::evaluate_states(const std::vector<int>& quanta, double x,
                                          double* out) const {
  if (spec_.kind == TrapKind::kHarmonic) {
    int top = 0;
    for (int q : quanta) top = std::max(top, q);
    thread_local std::vector<double> h;
    hermite_functions(top, x, h);
    for (std::size_t i = 0; i < quanta.size(); ++i) out[i] = h[quanta[i]];
    return;
  }
  for (std::size_t i = 0; i < quanta.size(); ++i) out[i] = evaluate(quanta[i], x);
}

void SingleParticleBasis::derivative_states(const std::vector<int>& quanta, double x,
                                            double* out) const {
  if (spec_.kind == TrapKind::kHarmonic) {
    int top = 0;
    for (int q : quanta) top = std::max(top, q);
    thread_local std::vector<double> h;
    hermite_functions(top + 1, x, h);
    for (std::size_t i = 0; i < quanta.size(); ++i) {
      const int n = quanta[i];
      double d = -std::sqrt((n + 1.0) / 2.0) * h[n + 1];
      if (n >= 1) d += std::sqrt(n / 2.0) * h[n - 1];
      out[i] = d;
    }
    return;
  }
  for (std::size_t i = 0; i < quanta.size(); ++i) out[i] = derivative(quanta[i], x);
}

double SingleParticleBasis::derivative(int n, double x) const {
  if (n < 0 || n > n_max_) throw domain_error("state index out of range");
  switch (spec_.kind) {
    case TrapKind::kHarmonic: {
      // phi_n' = sqrt(n/2) phi_{n-1} - sqrt((n+1)/2) phi_{n+1}
      thread_local std::vector<double> h;
      hermite_functions(n + 1, x, h);
      double d = -std::sqrt((n + 1.0) / 2.0) * h[n + 1];
      if (n >= 1) d += std::sqrt(n / 2.0) * h[n - 1];
      return d;
    }
    case TrapKind::kBox: {
      const double l = spec_.box_length;
      if (x < 0.0 || x > l) return 0.0;
      const double k = (n + 1) * kPi / l;
      return std::sqrt(2.0 / l) * k * std::cos(k * x);
    }
    case TrapKind::kCustom: {
      // 5-point central difference on the interpolant, Richardson-consistent
      const double h = 1e-4;
      return (8.0 * (eval_custom(n, x + h) - eval_custom(n, x - h)) -
              (eval_custom(n, x + 2 * h) - eval_custom(n, x - 2 * h))) /
             (12.0 * h);
    }
  }
  return 0.0;
}

}  // namespace nearunitary
