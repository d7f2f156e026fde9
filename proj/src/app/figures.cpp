#include "wgqed/app/figures.hpp"

#include "wgqed/observables.hpp"
#include "wgqed/spectra.hpp"

#include <numbers>

namespace wgqed::app {

const std::vector<FigureSpec>& figure_specs() {
    constexpr double pi = std::numbers::pi;
    static const std::vector<double> standard = {2.0 * pi, pi / 2.0, pi, pi / 4.0};
    static const std::vector<FigureSpec> specs = {
        {1, "S", Detection::Total, standard},
        {2, "A", Detection::Total, standard},
        {3, "S", Detection::Total, {1.2 * pi, 1.1 * pi}},
        {4, "eg", Detection::Forward, standard},
        {5, "eg", Detection::Backward, standard},
        {6, "E", Detection::Total, standard},
        {7, "s1e2", Detection::Forward, standard},
        {8, "s1e2", Detection::Backward, standard},
        {9, "s1s2", Detection::Total, standard},
    };
    return specs;
}

std::vector<double> rate_time_grid(int points, double gamma_t_max) {
    if (points < 2) throw std::invalid_argument("time grid needs at least 2 points");
    std::vector<double> g(static_cast<size_t>(points));
    for (int i = 0; i < points; ++i) g[i] = gamma_t_max * i / (points - 1);
    return g;
}

Series spectrum_series(const DickeDensity& rho0, const std::string& initial, const SystemParams& params,
                       Detection det, const std::vector<double>& omegas) {
    Series s{SeriesKind::Spectrum, initial, det, params.k0d, omegas, {}, {}};
    s.y.reserve(omegas.size());
    s.baseline.reserve(omegas.size());
    for (double w : omegas) {
        s.y.push_back(spectral_density(rho0, params, det, w));
        s.baseline.push_back(single_qubit_baseline(params, w).density);
    }
    return s;
}

Series rate_series(const DickeDensity& rho0, const std::string& initial, const SystemParams& params, Detection det,
                   const std::vector<double>& gamma_t) {
    const double g = params.gamma();
    Series s{SeriesKind::Rate, initial, det, params.k0d, gamma_t, {}, {}};
    s.y.reserve(gamma_t.size());
    s.baseline.reserve(gamma_t.size());
    const auto base = single_qubit_baseline(params, kOmega).rate;
    for (double gt : gamma_t) {
        const double t = gt / g;
        s.y.push_back(emission_rate(rho0, params, t, det) / g);
        s.baseline.push_back(base(t) / g);
    }
    return s;
}

std::vector<Series> figure_data(const FigureSpec& fig, double gamma_ratio) {
    const auto rho0 = preset_state(fig.initial);
    std::vector<Series> out;
    for (double k0d : fig.k0d) {
        const SystemParams p{gamma_ratio, k0d};
        out.push_back(spectrum_series(rho0, fig.initial, p, fig.detection, default_omega_grid(p)));
    }
    const auto times = rate_time_grid();
    for (double k0d : fig.k0d) {
        const SystemParams p{gamma_ratio, k0d};
        out.push_back(rate_series(rho0, fig.initial, p, fig.detection, times));
    }
    return out;
}

}  // namespace wgqed::app
