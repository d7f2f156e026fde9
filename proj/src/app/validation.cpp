#include "wgqed/app/validation.hpp"

#include "wgqed/app/worker_pool.hpp"
#include "wgqed/observables.hpp"
#include "wgqed/oracle.hpp"
#include "wgqed/spectra.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wgqed::app {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> k0d_grid() {
    std::vector<double> g;
    for (int j = 1; j <= 8; ++j) g.push_back(j * pi / 4.0);
    for (int j = 0; j < 16; ++j) g.push_back(0.15 + j * 0.3917);
    return g;
}

CheckResult check(std::string name, double err, double threshold) {
    return {std::move(name), err, threshold, err < threshold};
}

std::vector<CheckResult> ode_suite(double gamma_ratio) {
    const auto grid = k0d_grid();
    std::vector<double> closed_err(grid.size()), trace_err(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const SystemParams p{gamma_ratio, grid[i]};
        std::vector<double> times;
        for (int k = 0; k <= 40; ++k) times.push_back(0.25 * k / p.gamma());
        const auto ode = integrate_transition_odes(p, times);
        double ec = 0.0, et = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k) {
            const auto cf = closed_form_state(p, times[k]);
            Mat4 sum = Mat4::Zero();
            for (int e = 0; e < 16; ++e) ec = std::max(ec, (cf.P[e] - ode[k].P[e]).cwiseAbs().maxCoeff());
            for (auto s : kDickeStates) sum += ode[k](s, s);
            et = std::max(et, (sum - Mat4::Identity()).cwiseAbs().maxCoeff());
        }
        closed_err[i] = ec;
        trace_err[i] = et;
    });
    return {check("ode.closed_form_vs_integrated", *std::max_element(closed_err.begin(), closed_err.end()), 1e-8),
            check("ode.trace_identity", *std::max_element(trace_err.begin(), trace_err.end()), 1e-8)};
}

std::vector<CheckResult> quadrature_suite(double gamma_ratio, const QuadratureConfig& cfg) {
    const std::vector<std::string> presets = {"S", "E", "eg"};
    const std::vector<double> k0ds = {pi / 2.0, 2.0 * pi};
    struct Job {
        double k0d;
        Direction dir;
    };
    std::vector<Job> jobs;
    for (double k : k0ds)
        for (auto d : {Direction::Forward, Direction::Backward}) jobs.push_back({k, d});
    std::vector<double> err(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        const SystemParams p{gamma_ratio, jobs[i].k0d};
        const Detection det = jobs[i].dir == Direction::Forward ? Detection::Forward : Detection::Backward;
        std::vector<double> omegas;
        for (int j = -2; j <= 2; ++j) omegas.push_back(kOmega + 2.5 * j * p.gamma());
        const QuadratureOracle oracle(p, jobs[i].dir, cfg);
        double e = 0.0;
        for (const auto& name : presets) {
            const auto rho0 = preset_state(name);
            const auto q = oracle.photon_number(rho0, omegas);
            std::vector<double> c;
            for (double w : omegas) c.push_back(spectral_density(rho0, p, det, w));
            double peak = 0.0;
            for (double v : c) peak = std::max(peak, std::abs(v));
            for (std::size_t k = 0; k < c.size(); ++k) {
                const double diff = std::abs(q[k].real() - c[k]);
                e = std::max(e, std::abs(c[k]) < 1e-6 * peak ? diff : diff / std::abs(c[k]));
            }
        }
        err[i] = e;
    });
    return {check("quadrature.spectral_density", *std::max_element(err.begin(), err.end()), 1e-3)};
}

double integrate_rate(const DickeDensity& rho0, const SystemParams& p, Detection det) {
    using boost::math::quadrature::gauss_kronrod;
    const double g = p.gamma();
    double total = 0.0;
    // Piecewise so the adaptive rule resolves the early transient and the long tail alike.
    const double edges[] = {0.0, 2.0, 10.0, 40.0, 200.0};
    for (int i = 0; i < 4; ++i)
        total += gauss_kronrod<double, 61>::integrate([&](double gt) { return emission_rate(rho0, p, gt / g, det) / g; },
                                                      edges[i], edges[i + 1], 15, 1e-13);
    return total;
}

std::vector<CheckResult> conservation_suite(double gamma_ratio) {
    const auto grid = k0d_grid();
    double prob_err = 0.0;
    for (double k : grid) {
        const SystemParams p{gamma_ratio, k};
        for (int j = 0; j <= 50; ++j) {
            const double t = 0.2 * j / p.gamma();
            double sum = 0.0;
            for (auto to : kDickeStates) sum += transition_probability(DickeState::E, to, p, t);
            prob_err = std::max(prob_err, std::abs(sum - 1.0));
        }
    }
    // Only where every populated channel radiates and has decayed well before Gamma t = 200.
    double energy_err = 0.0;
    for (double k : {pi / 4.0, pi / 2.0, 3.0 * pi / 4.0}) {
        const SystemParams p{gamma_ratio, k};
        const auto eg = preset_state("eg");
        const double fb = integrate_rate(eg, p, Detection::Forward) + integrate_rate(eg, p, Detection::Backward);
        energy_err = std::max(energy_err, std::abs(fb - 1.0));
    }
    for (double k : {pi / 4.0, pi / 2.0, 3.0 * pi / 4.0, 2.0 * pi}) {
        const SystemParams p{gamma_ratio, k};
        energy_err = std::max(energy_err, std::abs(integrate_rate(preset_state("S"), p, Detection::Total) - 0.5));
        energy_err = std::max(energy_err, std::abs(integrate_rate(preset_state("E"), p, Detection::Total) - 1.0));
    }
    return {check("conservation.probability_sum_from_E", prob_err, 1e-10),
            check("conservation.energy_integrals", energy_err, 1e-6)};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ode", "quadrature", "conservation", "all"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, double gamma_ratio, const QuadratureConfig& quadrature) {
    std::vector<CheckResult> out;
    auto add = [&out](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
    if (suite == "ode" || suite == "all") add(ode_suite(gamma_ratio));
    if (suite == "conservation" || suite == "all") add(conservation_suite(gamma_ratio));
    if (suite == "quadrature" || suite == "all") add(quadrature_suite(gamma_ratio, quadrature));
    if (out.empty()) throw std::invalid_argument("unknown validation suite '" + suite + "'");
    return out;
}

}  // namespace wgqed::app
