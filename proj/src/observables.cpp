#include "wgqed/observables.hpp"

#include "wgqed/transition_operator.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

namespace {

// Collective rates with the dark channel set exactly to zero at the Dicke points.
CollectiveRates snapped_rates(const SystemParams& params) {
    auto r = collective_rates(params);
    const double g = params.gamma();
    switch (degeneracy(params)) {
        case Degeneracy::EvenPi: r.gamma_plus = 2.0 * g; r.gamma_minus = 0.0; break;
        case Degeneracy::OddPi: r.gamma_plus = 0.0; r.gamma_minus = 2.0 * g; break;
        case Degeneracy::None: break;
    }
    return r;
}

double directional_rate(const DickeDensity& rho0, const SystemParams& params, double t, Direction dir) {
    const double g = params.gamma();
    const auto r = snapped_rates(params);
    const auto p = population_elements(params, t);
    const auto c = coherence_elements(params, t);
    const double gp = r.gamma_plus, gm = r.gamma_minus;

    double w = rho0.pEE * (g * p.EE_E + 0.5 * gp * p.SS_E + 0.5 * gm * p.AA_E);
    w += rho0.pSS * 0.5 * gp * p.SS_S;
    w += rho0.pAA * 0.5 * gm * p.AA_A;
    // i(G/2) s_k [P_AS rho_SA - P_SA rho_AS] = -G s_k Im(P_AS rho_SA)
    w -= g * directional_sin(r, dir) * std::imag(c.AS * rho0.pSA);
    return w;
}

double directional_energy(const DickeDensity& rho0, const SystemParams& params, Direction dir) {
    const double g = params.gamma();
    const auto r = snapped_rates(params);
    const auto deg = degeneracy(params);
    const bool s_bright = r.gamma_plus > 0.0 && deg != Degeneracy::OddPi;
    const bool a_bright = r.gamma_minus > 0.0 && deg != Degeneracy::EvenPi;

    // From |E>: Gamma/(2 Gamma) directly, plus (Gamma_pm / 2) * 1/(2 Gamma) through each feeding channel.
    double e = rho0.pEE * (0.5 + (r.gamma_plus + r.gamma_minus) / (4.0 * g));
    e += rho0.pSS * (s_bright ? 0.5 : 0.0);
    e += rho0.pAA * (a_bright ? 0.5 : 0.0);
    e -= directional_sin(r, dir) * std::imag(rho0.pSA / cplx(1.0, r.sin_k0d));
    return e;
}

}  // namespace

double transition_probability(DickeState from, DickeState to, const SystemParams& params, double t) {
    const auto p = population_elements(params, t);
    using D = DickeState;
    switch (to) {
        case D::E: return from == D::E ? p.EE_E : 0.0;
        case D::S:
            if (from == D::S) return p.SS_S;
            return from == D::E ? p.SS_E : 0.0;
        case D::A:
            if (from == D::A) return p.AA_A;
            return from == D::E ? p.AA_E : 0.0;
        case D::G:
            switch (from) {
                case D::G: return p.GG_G;
                case D::S: return p.GG_S;
                case D::A: return p.GG_A;
                case D::E: return p.GG_E;
            }
    }
    throw std::logic_error("bad Dicke state");
}

double emission_rate(const DickeDensity& rho0, const SystemParams& params, double t, Detection det) {
    switch (det) {
        case Detection::Forward: return directional_rate(rho0, params, t, Direction::Forward);
        case Detection::Backward: return directional_rate(rho0, params, t, Direction::Backward);
        case Detection::Total:
            return 0.5 * (directional_rate(rho0, params, t, Direction::Forward) +
                          directional_rate(rho0, params, t, Direction::Backward));
    }
    throw std::logic_error("bad detection");
}

double radiated_energy(const DickeDensity& rho0, const SystemParams& params, Detection det) {
    switch (det) {
        case Detection::Forward: return directional_energy(rho0, params, Direction::Forward);
        case Detection::Backward: return directional_energy(rho0, params, Direction::Backward);
        case Detection::Total:
            return 0.5 * (directional_energy(rho0, params, Direction::Forward) +
                          directional_energy(rho0, params, Direction::Backward));
    }
    throw std::logic_error("bad detection");
}

}  // namespace wgqed
