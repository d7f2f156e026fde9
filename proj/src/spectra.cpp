#include "wgqed/spectra.hpp"

#include "wgqed/expsum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wgqed {

namespace {

constexpr cplx I{0.0, 1.0};

// Rates and phases entering the kernels. At the Dicke points the dark channel is
// removed exactly and the exchange shift vanishes.
struct KernelParams {
    double g, c, s, s_k, gp, gm, op, om;
    bool s_dark = false, a_dark = false;
};

KernelParams kernel_params(const SystemParams& params, Direction dir) {
    const auto r = collective_rates(params);
    KernelParams k{params.gamma(), r.cos_k0d, r.sin_k0d, directional_sin(r, dir),
                   r.gamma_plus, r.gamma_minus, r.omega_plus, r.omega_minus};
    const auto deg = degeneracy(params);
    if (deg != Degeneracy::None) {
        const bool even = deg == Degeneracy::EvenPi;
        k.c = even ? 1.0 : -1.0;
        k.s = k.s_k = 0.0;
        k.gp = even ? 2.0 * k.g : 0.0;
        k.gm = even ? 0.0 : 2.0 * k.g;
        k.op = k.om = kOmega;
        k.s_dark = !even;
        k.a_dark = even;
    }
    return k;
}

// Double integral over the triangle u + s <= t of e^{-z s} e^{-p u}, and its t -> inf limit.
cplx tri(cplx z, cplx p, std::optional<double> t) {
    if (t) return expsum::conv({0.0, z, p}, *t);
    return 1.0 / (z * p);
}

// Same with the population factor Gamma_x * (e^{-Gamma_x u} * e^{-2 Gamma u}).
cplx tri_fed(cplx z, double gx, double g2, std::optional<double> t) {
    if (t) return gx * expsum::conv({0.0, z, gx, g2}, *t);
    return 1.0 / (z * g2);
}

}  // namespace

SpectralKernels spectral_kernels(const SystemParams& params, Direction dir, double omega, std::optional<double> t) {
    if (t && !(*t >= 0.0)) throw std::invalid_argument("time must be >= 0");
    const auto k = kernel_params(params, dir);
    const double g = k.g, g2 = 2.0 * k.g;
    const double dp = omega - k.op, dm = omega - k.om;

    // Laplace variables of the lag factors <X|P(s)|Y>_0 e^{-i omega s}.
    const cplx zu = I * dp + 0.5 * k.gp;        // <S|P_SG|G>
    const cplx zw = I * dm + 0.5 * k.gp + g;    // <E|P_ES|S>
    const cplx zuA = I * dm + 0.5 * k.gm;       // <A|P_AG|G>
    const cplx zwA = I * dp + 0.5 * k.gm + g;   // <E|P_EA|A>

    SpectralKernels out;
    if (!k.s_dark) {
        const double wS = 1.0 + k.c;
        // <E|P_SG(s)|S>: two-exponential coherence from the E -> S -> G cascade
        const cplx sg = -wS / cplx(1.0, k.s) * (tri(zw, g2, t) - tri(zu, g2, t));
        out.E += wS * (sg + tri(zw, g2, t) + tri_fed(zu, k.gp, g2, t));
        out.S = t ? wS * tri(zu, k.gp, t) : 1.0 / (g * zu);
        out.AS = -I * k.s_k * tri(zu, g * cplx(1.0, -k.s), t);
    }
    if (!k.a_dark) {
        const double wA = 1.0 - k.c;
        const cplx ag = wA / cplx(1.0, -k.s) * (tri(zwA, g2, t) - tri(zuA, g2, t));
        out.E += wA * (tri(zwA, g2, t) - ag + tri_fed(zuA, k.gm, g2, t));
        out.A = t ? wA * tri(zuA, k.gm, t) : 1.0 / (g * zuA);
        out.SA = I * k.s_k * tri(zuA, g * cplx(1.0, k.s), t);
    }
    return out;
}

namespace {

double directional_number(const DickeDensity& rho0, const SystemParams& params, Direction dir, double omega,
                          std::optional<double> t) {
    const auto k = spectral_kernels(params, dir, omega, t);
    const cplx sum = rho0.pEE * k.E + rho0.pSS * k.S + rho0.pAA * k.A + rho0.pSA * k.SA + rho0.pAS() * k.AS;
    return 2.0 * params.gamma() * kOmega * sum.real();
}

double resolved_number(const DickeDensity& rho0, const SystemParams& params, Detection det, double omega,
                       std::optional<double> t) {
    switch (det) {
        case Detection::Forward: return directional_number(rho0, params, Direction::Forward, omega, t);
        case Detection::Backward: return directional_number(rho0, params, Direction::Backward, omega, t);
        case Detection::Total:
            return 0.5 * (directional_number(rho0, params, Direction::Forward, omega, t) +
                          directional_number(rho0, params, Direction::Backward, omega, t));
    }
    throw std::logic_error("bad detection");
}

}  // namespace

double photon_number(const DickeDensity& rho0, const SystemParams& params, Detection det, double omega, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
    return resolved_number(rho0, params, det, omega, t);
}

double spectral_density(const DickeDensity& rho0, const SystemParams& params, Detection det, double omega) {
    return resolved_number(rho0, params, det, omega, std::nullopt);
}

std::vector<SpectrumSample> spectrum_on_grid(const DickeDensity& rho0, const SystemParams& params, Detection det,
                                             std::span<const double> omegas) {
    std::vector<SpectrumSample> out;
    out.reserve(omegas.size());
    for (double w : omegas) out.push_back({w, spectral_density(rho0, params, det, w)});
    return out;
}

std::vector<double> default_omega_grid(const SystemParams& params, int points, double half_width_gammas) {
    if (points < 2) throw std::invalid_argument("omega grid needs at least 2 points");
    const double half = half_width_gammas * params.gamma();
    std::vector<double> w(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) w[i] = kOmega - half + 2.0 * half * i / (points - 1);
    return w;
}

SingleQubitBaseline single_qubit_baseline(const SystemParams& params, double omega) {
    const double g = params.gamma();
    const double d = omega - kOmega;
    return {g * kOmega / (d * d + 0.25 * g * g), [g](double t) { return 0.5 * g * std::exp(-g * t); }};
}

PeakReport peak_analysis(std::span<const SpectrumSample> s) {
    if (s.size() < 3) throw std::invalid_argument("peak_analysis needs at least 3 samples");
    for (size_t i = 1; i < s.size(); ++i)
        if (!(s[i].omega > s[i - 1].omega)) throw std::invalid_argument("peak_analysis needs strictly increasing omega");

    PeakReport rep;
    for (size_t i = 1; i + 1 < s.size(); ++i) {
        const auto &a = s[i - 1], &b = s[i], &c = s[i + 1];
        if (!(b.value > a.value && b.value >= c.value)) continue;
        // Vertex of the parabola through the three samples.
        const double x0 = b.omega - a.omega, x1 = c.omega - b.omega;
        const double d0 = (b.value - a.value) / x0, d1 = (c.value - b.value) / x1;
        const double curv = (d1 - d0) / (x0 + x1);
        Peak p{b.omega, b.value};
        if (curv < 0.0) {
            // slope at b is (d0 x1 + d1 x0)/(x0 + x1); move by -slope/(2 curv)
            const double slope = (d0 * x1 + d1 * x0) / (x0 + x1);
            const double dx = -slope / (2.0 * curv);
            p.omega = b.omega + dx;
            p.value = b.value + slope * dx + curv * dx * dx;
        }
        rep.peaks.push_back(p);
    }
    std::sort(rep.peaks.begin(), rep.peaks.end(), [](const Peak& x, const Peak& y) { return x.value > y.value; });
    if (rep.peaks.size() >= 2) rep.separation = std::abs(rep.peaks[0].omega - rep.peaks[1].omega);
    return rep;
}

}  // namespace wgqed
