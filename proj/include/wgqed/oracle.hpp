#pragma once

// Independent references for the closed forms: direct integration of the
// equations of motion, and the photon number from a double-time quadrature of
// the two-time correlation functions.

#include "wgqed/core.hpp"
#include "wgqed/kernels.hpp"
#include "wgqed/transition_operator.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wgqed {

struct OdeConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    // Upper bound on adaptive steps between two requested output times.
    int max_steps = 500000;
};

// Raised when the integrator cannot meet the tolerance; names the element that
// was changing fastest and the last time reached.
class OdeFailure : public std::runtime_error {
public:
    OdeFailure(Element element, double t, const std::string& what)
        : std::runtime_error(what), element_(element), t_(t) {}
    Element element() const { return element_; }
    double time() const { return t_; }

private:
    Element element_;
    double t_;
};

// <P_ij(t)>_0 at each requested time (non-decreasing, >= 0), integrated with an
// adaptive Dormand-Prince 5(4) scheme.
std::vector<TransitionOperatorState> integrate_transition_odes(const SystemParams& params,
                                                               std::span<const double> times,
                                                               const OdeConfig& config = {});

// <sigma_n^+(tau) sigma_m^-(tau')> for qubits n, m in {1, 2} via the quantum regression theorem.
cplx correlation_function(int n, int m, double tau, double tau_prime, const DickeDensity& rho0,
                          const SystemParams& params, const OdeConfig& config = {});

struct QuadratureConfig {
    double T_gamma = 40.0;  // integration window in units of 1/Gamma
    int n_steps = 4096;
    // Extend the window (same step) until the slowest bright channel has decayed to
    // this amplitude, capped at max_growth times the configured length.
    double tail_amplitude = 1e-6;
    double max_growth = 16.0;
};

struct QuadratureGrid {
    double T = 0.0;  // units of 1/Omega
    int n = 0;
    double h = 0.0;
};

QuadratureGrid effective_grid(const SystemParams& params, const QuadratureConfig& config);

// Photon number per direction, n_bar(omega, T), from the trapezoidal double integral
// of Theta_k(tau, tau') e^{-i omega (tau - tau')}. The trajectory is integrated once
// and reused for every initial state and frequency.
class QuadratureOracle {
public:
    QuadratureOracle(const SystemParams& params, Direction dir, const QuadratureConfig& config = {},
                     const OdeConfig& ode = {}, kernels::Isa isa = kernels::active_isa());

    const QuadratureGrid& grid() const { return grid_; }

    // Complex n_bar; the imaginary part is a quadrature-noise diagnostic.
    std::vector<cplx> photon_number(const DickeDensity& rho0, std::span<const double> omegas) const;

private:
    SystemParams params_;
    QuadratureGrid grid_;
    kernels::Isa isa_;
    std::vector<ElementSet> traj_;
    std::vector<double> y_, z_;  // transposed Y_k and Z_k blocks
};

// Real part of the quadrature photon number for one direction.
std::vector<double> quadrature_spectrum(const DickeDensity& rho0, const SystemParams& params, Direction dir,
                                        std::span<const double> omegas, const QuadratureConfig& config = {});

}  // namespace wgqed
