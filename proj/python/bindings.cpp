// Python bindings for the core operations. Structured results are returned
// as JSON strings (the same writers the CLI uses); the pure-python package
// in python/nearunitary decodes them into dictionaries.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "nearunitary/ed.hpp"
#include "nearunitary/permutation.hpp"
#include "nearunitary/report_io.hpp"
#include "nearunitary/slater.hpp"
#include "nearunitary/trap.hpp"
#include "nearunitary/tunneling.hpp"

namespace py = pybind11;
using namespace nearunitary;

namespace {

SingleParticleBasis make_basis(const std::string& trap_json, int n_max) {
  return SingleParticleBasis(TrapSpec::from_json(trap_json), n_max);
}

}  // namespace

PYBIND11_MODULE(_nearunitary, m) {
  m.doc() = "Ordering-domain tunneling analysis for trapped 1D particles";

  py::register_exception<domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<convergence_error>(m, "ConvergenceError",
                                            PyExc_RuntimeError);
  py::register_exception<consistency_error>(m, "ConsistencyError",
                                            PyExc_RuntimeError);

  m.def("orderings_json", &orderings_to_json, py::arg("num_particles"),
        "Wells, letter labels (N=3), and class-tagged edges as JSON");

  m.def(
      "tunneling_matrix",
      [](int n, const std::vector<double>& rates) {
        return build_tunneling(n, RateVector(rates));
      },
      py::arg("num_particles"), py::arg("rates"),
      "Dense tunneling operator in the lexicographic well basis");

  m.def(
      "spectral_report_json",
      [](int n, const std::vector<double>& rates,
         std::optional<double> cluster_tol, bool with_shift) {
        const RateVector rv(rates);
        return to_json(
            spectral_report(build_tunneling(n, rv), rv, cluster_tol, with_shift));
      },
      py::arg("num_particles"), py::arg("rates"),
      py::arg("cluster_tol") = std::nullopt, py::arg("with_shift") = false,
      "Clustered eigenvalues with irrep and parity labels as JSON");

  m.def(
      "bond_coefficients_json",
      [](const std::string& trap_json, const std::vector<int>& level, double g,
         double rel_tol) {
        const LevelIndex idx(level);
        const auto basis = make_basis(trap_json, idx.quanta.back() + 1);
        return to_json(all_bond_coefficients(idx, basis, g, rel_tol));
      },
      py::arg("trap_json"), py::arg("level"), py::arg("g"),
      py::arg("rel_tol") = 1e-7,
      "Per-bond coupling coefficients t_1..t_{N-1} as JSON");

  m.def(
      "single_particle_energies",
      [](const std::string& trap_json, int count) {
        const auto basis = make_basis(trap_json, count - 1);
        std::vector<double> out(count);
        for (int i = 0; i < count; ++i) out[i] = basis.energy(i);
        return out;
      },
      py::arg("trap_json"), py::arg("count"),
      "Lowest single-particle eigenenergies of the trap");

  m.def(
      "slater_eval",
      [](const std::string& trap_json, const std::vector<int>& level,
         const std::vector<double>& x) {
        const LevelIndex idx(level);
        const auto basis = make_basis(trap_json, idx.quanta.back() + 1);
        return slater_eval(idx, basis, x);
      },
      py::arg("trap_json"), py::arg("level"), py::arg("x"),
      "Slater determinant of trap eigenstates at the given coordinates");

  m.def(
      "ed_spectrum",
      [](const std::string& trap_json, int n, double g, int cutoff,
         const std::vector<int>& level) {
        EDConfig cfg;
        cfg.trap = TrapSpec::from_json(trap_json);
        cfg.num_particles = n;
        cfg.g = g;
        cfg.cutoff = cutoff;
        cfg.target_level = level;
        return ed_spectrum(cfg);
      },
      py::arg("trap_json"), py::arg("num_particles"), py::arg("g"),
      py::arg("cutoff"), py::arg("level"),
      "Lowest exact-diagonalization eigenvalues in the truncated basis");

  m.def(
      "multiplet_comparison_json",
      [](const std::string& trap_json, int n, const std::vector<double>& gs,
         int cutoff, const std::vector<int>& level) {
        EDConfig cfg;
        cfg.trap = TrapSpec::from_json(trap_json);
        cfg.num_particles = n;
        cfg.cutoff = cutoff;
        cfg.target_level = level;
        if (!gs.empty()) cfg.g = gs.front();
        return to_json(multiplet_comparison(cfg, gs));
      },
      py::arg("trap_json"), py::arg("num_particles"), py::arg("g_samples"),
      py::arg("cutoff"), py::arg("level"),
      "ED multiplet versus tunneling prediction at each coupling, as JSON");

  m.def(
      "cycles_to_image",
      [](const std::string& cycles, int n) {
        return Permutation::from_cycles(cycles, n).image_one_based();
      },
      py::arg("cycles"), py::arg("num_particles"),
      "Parse cycle notation into the 1-based image vector");
}
