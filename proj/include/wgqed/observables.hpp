#pragma once

#include "wgqed/core.hpp"

namespace wgqed {

// Probability to find the system in `to` at time t after starting in `from`.
double transition_probability(DickeState from, DickeState to, const SystemParams& params, double t);

// Photon emission rate in units of Omega (divide by Gamma for the W/Gamma figure axis).
// Only rho0.pEE, pSS, pAA and pSA contribute.
double emission_rate(const DickeDensity& rho0, const SystemParams& params, double t, Detection det);

// Integral of emission_rate over t in [0, inf), in energy quanta.
// A channel whose collective rate vanishes keeps its excitation and contributes nothing.
double radiated_energy(const DickeDensity& rho0, const SystemParams& params, Detection det);

}  // namespace wgqed
