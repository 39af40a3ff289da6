#include "nearunitary/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace nearunitary {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // bare integers and specials must stay valid JSON numbers
  if (s == "inf") return "1e999";
  if (s == "-inf") return "-1e999";
  if (s == "nan" || s == "-nan") return "null";
  return s;
}

namespace {

void append_number_array(std::ostringstream& os, const std::vector<double>& v) {
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << format17(v[i]);
  }
  os << ']';
}

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::kEven;
  if (s == "odd") return Parity::kOdd;
  if (s == "not-applicable") return Parity::kNotApplicable;
  throw domain_error("unknown parity label \"" + s + "\"");
}

}  // namespace

std::string to_json(const SpectralReport& report) {
  std::ostringstream os;
  os << "{\"shift\":" << format17(report.shift) << ",\"clusters\":[";
  for (std::size_t c = 0; c < report.clusters.size(); ++c) {
    const auto& cl = report.clusters[c];
    if (c) os << ',';
    os << "{\"eigenvalue\":" << format17(cl.eigenvalue)
       << ",\"multiplicity\":" << cl.multiplicity << ",\"irreps\":{";
    bool first = true;
    for (const auto& [label, mult] : cl.irrep_multiplicities) {
      if (!first) os << ',';
      first = false;
      os << '"' << label << "\":" << mult;
    }
    os << "},\"parity\":\"" << to_string(cl.parity) << "\",\"eigenvectors\":[";
    for (Eigen::Index j = 0; j < cl.eigenvectors.cols(); ++j) {
      if (j) os << ',';
      std::vector<double> col(cl.eigenvectors.rows());
      for (Eigen::Index i = 0; i < cl.eigenvectors.rows(); ++i)
        col[i] = cl.eigenvectors(i, j);
      append_number_array(os, col);
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

std::string to_csv(const SpectralReport& report) {
  std::ostringstream os;
  os << "eigenvalue,multiplicity,irrep,parity\n";
  for (const auto& cl : report.clusters) {
    os << format17(cl.eigenvalue) << ',' << cl.multiplicity << ',';
    bool first = true;
    for (const auto& [label, mult] : cl.irrep_multiplicities) {
      if (!first) os << '+';
      first = false;
      os << label << ':' << mult;
    }
    os << ',' << to_string(cl.parity) << '\n';
  }
  return os.str();
}

SpectralReport spectral_report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SpectralReport report;
  report.shift = j.at("shift").get<double>();
  for (const auto& jc : j.at("clusters")) {
    Cluster cl;
    cl.eigenvalue = jc.at("eigenvalue").get<double>();
    cl.multiplicity = jc.at("multiplicity").get<int>();
    for (const auto& [label, mult] : jc.at("irreps").items())
      cl.irrep_multiplicities[label] = mult.get<int>();
    cl.parity = parity_from_string(jc.at("parity").get<std::string>());
    const auto& vecs = jc.at("eigenvectors");
    if (!vecs.empty()) {
      cl.eigenvectors.resize(vecs[0].size(), vecs.size());
      for (std::size_t col = 0; col < vecs.size(); ++col)
        for (std::size_t row = 0; row < vecs[col].size(); ++row)
          cl.eigenvectors(row, col) = vecs[col][row].get<double>();
    }
    report.clusters.push_back(std::move(cl));
  }
  return report;
}

std::string to_json(const CouplingCoefficients& coeffs) {
  std::ostringstream os;
  os << "{\"level\":[";
  for (std::size_t i = 0; i < coeffs.level.quanta.size(); ++i) {
    if (i) os << ',';
    os << coeffs.level.quanta[i];
  }
  os << "],\"g\":" << format17(coeffs.g) << ",\"values\":";
  append_number_array(os, coeffs.values);
  os << ",\"quadrature_error\":";
  append_number_array(os, coeffs.quadrature_error);
  // convention: t_k belongs to the boundary with the coincident pair at
  // ordered position k
  os << ",\"bond_convention\":\"coincident-pair-at-position-k\"}";
  return os.str();
}

std::string to_csv(const CouplingCoefficients& coeffs) {
  std::ostringstream os;
  os << "bond,value,error\n";
  for (std::size_t k = 0; k < coeffs.values.size(); ++k)
    os << (k + 1) << ',' << format17(coeffs.values[k]) << ','
       << format17(coeffs.quadrature_error[k]) << '\n';
  return os.str();
}

CouplingCoefficients coupling_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CouplingCoefficients out{LevelIndex{j.at("level").get<std::vector<int>>()},
                           j.at("g").get<double>(),
                           j.at("values").get<std::vector<double>>(),
                           j.at("quadrature_error").get<std::vector<double>>()};
  return out;
}

std::string to_json(const MultipletComparison& comparison) {
  std::ostringstream os;
  os << "{\"e_infinity\":" << format17(comparison.e_infinity) << ",\"samples\":[";
  for (std::size_t i = 0; i < comparison.samples.size(); ++i) {
    const auto& s = comparison.samples[i];
    if (i) os << ',';
    os << "{\"g\":" << format17(s.g) << ",\"ed_energies\":";
    append_number_array(os, s.ed_energies);
    os << ",\"predicted\":";
    append_number_array(os, s.predicted);
    os << ",\"slope_ratios\":";
    append_number_array(os, s.slope_ratios);
    os << ",\"gap_ratios\":";
    append_number_array(os, s.gap_ratios);
    os << ",\"rates\":";
    append_number_array(os, s.rates);
    os << '}';
  }
  os << "]}";
  return os.str();
}

std::string orderings_to_json(int n) {
  const auto wells = all_orderings(n);
  std::ostringstream os;
  os << "{\"N\":" << n << ",\"wells\":[";
  for (std::size_t i = 0; i < wells.size(); ++i) {
    if (i) os << ',';
    os << "{\"index\":" << i << ",\"seq\":[";
    const auto seq = wells[i].seq_one_based();
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k) os << ',';
      os << seq[k];
    }
    os << ']';
    if (n == 3) os << ",\"letter\":\"" << well_letter3(i) << '"';
    os << '}';
  }
  os << "],\"edges\":[";
  const auto edges = bond_edges(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e) os << ',';
    os << "{\"a\":" << edges[e].a << ",\"b\":" << edges[e].b
       << ",\"bond\":" << edges[e].bond << '}';
  }
  os << "]}";
  return os.str();
}

}  // namespace nearunitary
