#pragma once

// JSON/CSV serialization of result types. Numbers are emitted with 17
// significant digits so identical inputs give byte-identical outputs.

#include <string>

#include "nearunitary/ed.hpp"
#include "nearunitary/slater.hpp"
#include "nearunitary/tunneling.hpp"

namespace nearunitary {

std::string format17(double v);

std::string to_json(const SpectralReport& report);
std::string to_csv(const SpectralReport& report);
SpectralReport spectral_report_from_json(const std::string& text);

std::string to_json(const CouplingCoefficients& coeffs);
std::string to_csv(const CouplingCoefficients& coeffs);
CouplingCoefficients coupling_from_json(const std::string& text);

std::string to_json(const MultipletComparison& comparison);

// Well list, paper letter map (N=3), and class-tagged edge list.
std::string orderings_to_json(int n);

}  // namespace nearunitary
