#pragma once

#include "wgqed/core.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace wgqed {

// Spectral values are dimensionless, S_bar = S * 2 L Omega / v_g; omega is in units of Omega.
struct SpectrumSample {
    double omega = 0.0;
    double value = 0.0;
};

// Complex kernels of the five spectrum-contributing entries of rho0.
// photon_number = 2 Gamma Omega Re(pEE*E + pSS*S + pAA*A + pSA*SA + pAS*AS).
struct SpectralKernels {
    cplx E{}, S{}, A{}, SA{}, AS{};
};

// t empty means the t -> infinity limit.
SpectralKernels spectral_kernels(const SystemParams& params, Direction dir, double omega, std::optional<double> t);

// <a_k^dagger(t) a_k(t)> in the dimensionless normalization. Throws for t < 0.
double photon_number(const DickeDensity& rho0, const SystemParams& params, Detection det, double omega, double t);

// t -> infinity limit of photon_number.
double spectral_density(const DickeDensity& rho0, const SystemParams& params, Detection det, double omega);

std::vector<SpectrumSample> spectrum_on_grid(const DickeDensity& rho0, const SystemParams& params, Detection det,
                                             std::span<const double> omegas);

// 1601 points over [Omega - 10 Gamma, Omega + 10 Gamma].
std::vector<double> default_omega_grid(const SystemParams& params, int points = 1601, double half_width_gammas = 10.0);

struct SingleQubitBaseline {
    double density = 0.0;               // Lorentzian of width Gamma at omega
    std::function<double(double)> rate;  // t -> Gamma/2 e^{-Gamma t}
};

SingleQubitBaseline single_qubit_baseline(const SystemParams& params, double omega);

struct Peak {
    double omega = 0.0;
    double value = 0.0;
};

struct PeakReport {
    std::vector<Peak> peaks;          // sorted by decreasing value
    std::optional<double> separation;  // |omega_1 - omega_2| of the two highest peaks
};

// Local maxima by three-point comparison, refined with a parabola through the neighbours.
// Throws std::invalid_argument for fewer than 3 samples or non-increasing omega.
PeakReport peak_analysis(std::span<const SpectrumSample> samples);

}  // namespace wgqed
