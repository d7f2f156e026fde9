#pragma once

#include "wgqed/core.hpp"

#include <string>
#include <vector>

namespace wgqed::app {

enum class SeriesKind { Spectrum, Rate };

// One curve of a figure panel. x is omega/Omega for spectra and Gamma*t for rates;
// y is S_bar or W/Gamma; baseline is the single-qubit curve on the same x.
struct Series {
    SeriesKind kind = SeriesKind::Spectrum;
    std::string initial;
    Detection detection = Detection::Total;
    double k0d = 0.0;
    std::vector<double> x, y, baseline;
};

struct FigureSpec {
    int number = 0;
    std::string initial;
    Detection detection = Detection::Total;
    std::vector<double> k0d;
};

// Figures 1-9: presets, detection and k0d values of each panel pair.
const std::vector<FigureSpec>& figure_specs();

std::vector<double> rate_time_grid(int points = 201, double gamma_t_max = 10.0);

Series spectrum_series(const DickeDensity& rho0, const std::string& initial, const SystemParams& params,
                       Detection det, const std::vector<double>& omegas);
Series rate_series(const DickeDensity& rho0, const std::string& initial, const SystemParams& params, Detection det,
                   const std::vector<double>& gamma_t);

// Spectrum series followed by rate series, one per k0d, in figure order.
std::vector<Series> figure_data(const FigureSpec& fig, double gamma_ratio);

}  // namespace wgqed::app
