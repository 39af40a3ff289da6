// Command-line front end: tunneling spectra, coupling coefficients, ED
// verification, and ordering-graph exports with machine-readable output.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nearunitary/ed.hpp"
#include "nearunitary/report_io.hpp"

namespace {

using namespace nearunitary;

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw domain_error("cannot parse number \"" + item + "\"");
    }
  }
  if (out.empty()) throw domain_error("empty number list");
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_doubles(text)) out.push_back(static_cast<int>(v));
  return out;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << '\n';
    return;
  }
  std::filesystem::path p(path);
  if (const char* dir = std::getenv("OUTPUT_DIR"); dir && p.is_relative())
    p = std::filesystem::path(dir) / p;
  std::ofstream f(p);
  if (!f) throw domain_error("cannot open output file " + p.string());
  f << content << '\n';
}

TrapSpec load_trap(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw domain_error("cannot open trap file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return TrapSpec::from_json(ss.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordering-graph tunneling analysis of the near-unitary limit"};
  app.require_subcommand(1);

  int threads = 0;  // cap only; computations are deterministic regardless
  int seed = 0;     // reserved for stochastic cross-checks
  app.add_option("--threads", threads, "Cap worker threads (0 = default)");
  app.add_option("--seed", seed, "Seed for stochastic cross-checks");

  std::string output, format = "json";

  auto* spectrum = app.add_subcommand("spectrum", "Tunneling-operator spectrum");
  int spec_n = 3;
  std::string spec_rates = "1,1";
  bool with_shift = false;
  double cluster_tol = -1.0;
  spectrum->add_option("-N", spec_n, "Particle count")->required();
  spectrum->add_option("-t,--rates", spec_rates, "Comma-separated bond rates t_1..t_{N-1}")
      ->required();
  spectrum->add_flag("--shift", with_shift, "Pin the totally antisymmetric level at 0");
  spectrum->add_option("--tol", cluster_tol, "Degeneracy clustering tolerance");
  spectrum->add_option("-o,--output", output, "Output path (default stdout)");
  spectrum->add_option("--format", format, "json or csv");

  auto* coeff = app.add_subcommand("coefficients", "Coupling coefficients by quadrature");
  std::string trap_file, level_str = "0,1,2", glist_str;
  int coeff_n = 3, cutoff = 12;
  double g = 10.0, quad_tol = 1e-7;
  coeff->add_option("--trap", trap_file, "Trap spec JSON file")->required();
  coeff->add_option("-N", coeff_n, "Particle count")->required();
  coeff->add_option("--level", level_str, "Comma-separated single-particle quanta");
  coeff->add_option("-g", g, "Interaction strength")->required();
  coeff->add_option("--tol", quad_tol, "Quadrature relative tolerance");
  coeff->add_option("-o,--output", output, "Output path (default stdout)");
  coeff->add_option("--format", format, "json or csv");

  auto* verify = app.add_subcommand("verify", "ED verification of multiplet splitting");
  verify->add_option("--trap", trap_file, "Trap spec JSON file")->required();
  verify->add_option("-N", coeff_n, "Particle count")->required();
  verify->add_option("--level", level_str, "Comma-separated single-particle quanta");
  verify->add_option("-g,--g-list", glist_str, "Comma-separated g samples")->required();
  verify->add_option("-M", cutoff, "Single-particle cutoff of the ED basis");
  verify->add_option("-o,--output", output, "Output path (default stdout)");

  auto* orderings = app.add_subcommand("orderings", "Well list, letter map, edge list");
  orderings->add_option("-N", spec_n, "Particle count")->required();
  orderings->add_option("-o,--output", output, "Output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (format != "json" && format != "csv")
      throw domain_error("format must be json or csv");

    if (spectrum->parsed()) {
      RateVector rates(parse_doubles(spec_rates));
      if (rates.num_bonds() != spec_n - 1)
        throw domain_error("rates must have N-1 entries");
      auto t = build_tunneling(spec_n, rates);
      auto report = spectral_report(
          t, rates,
          cluster_tol > 0 ? std::optional<double>(cluster_tol) : std::nullopt,
          with_shift);
      write_output(output, format == "json" ? to_json(report) : to_csv(report));
    } else if (coeff->parsed()) {
      auto trap = load_trap(trap_file);
      LevelIndex level{parse_ints(level_str)};
      if (level.num_particles() != coeff_n)
        throw domain_error("level must list exactly N quanta");
      SingleParticleBasis basis(trap, level.quanta.back() + 1);
      auto result = all_bond_coefficients(level, basis, g, quad_tol);
      write_output(output, format == "json" ? to_json(result) : to_csv(result));
    } else if (verify->parsed()) {
      EDConfig config;
      config.trap = load_trap(trap_file);
      config.num_particles = coeff_n;
      config.cutoff = cutoff;
      config.target_level = parse_ints(level_str);
      auto g_samples = parse_doubles(glist_str);
      if (!g_samples.empty()) config.g = g_samples.front();
      auto comparison = multiplet_comparison(config, g_samples);
      write_output(output, to_json(comparison));
    } else if (orderings->parsed()) {
      write_output(output, orderings_to_json(spec_n));
    }
  } catch (const domain_error& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const convergence_error& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return 3;
  } catch (const consistency_error& e) {
    std::cerr << "internal consistency error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
