#include "wgqed/oracle.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace wgqed {

namespace odeint = boost::numeric::odeint;

namespace {

using OdeState = std::vector<cplx>;
constexpr std::size_t kStateSize = kElementCount * 16;

void pack(const ElementSet& e, OdeState& y) {
    y.resize(kStateSize);
    for (int k = 0; k < kElementCount; ++k)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) y[k * 16 + r * 4 + c] = e.m[k](r, c);
}

ElementSet unpack(const OdeState& y) {
    ElementSet e;
    for (int k = 0; k < kElementCount; ++k)
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) e.m[k](r, c) = y[k * 16 + r * 4 + c];
    return e;
}

// Element whose derivative is largest relative to the tolerance scale.
Element stiffest_element(const OdeState& y, const SystemParams& params, const OdeConfig& cfg) {
    const ElementSet d = ode_rhs(unpack(y), params);
    Element worst = Element::EE;
    double worst_v = -1.0;
    for (int k = 0; k < kElementCount; ++k) {
        double v = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const double scale = cfg.abs_tol + cfg.rel_tol * std::abs(y[k * 16 + r * 4 + c]);
                const double q = std::abs(d.m[k](r, c)) / scale;
                v = std::isfinite(q) ? std::max(v, q) : INFINITY;
            }
        if (v > worst_v) {
            worst_v = v;
            worst = kElements[k];
        }
    }
    return worst;
}

std::vector<ElementSet> integrate_elements(const SystemParams& params, std::span<const double> times,
                                           const OdeConfig& cfg) {
    validate(params);
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw std::invalid_argument("ODE output times must be >= 0");
        if (i > 0 && times[i] < times[i - 1]) throw std::invalid_argument("ODE output times must be non-decreasing");
    }
    std::vector<ElementSet> out;
    out.reserve(times.size());
    if (times.empty()) return out;

    // integrate_times needs the start time first; t = 0 is the identity state.
    std::vector<double> grid;
    grid.reserve(times.size() + 1);
    grid.push_back(0.0);
    grid.insert(grid.end(), times.begin(), times.end());

    OdeState y;
    pack(ElementSet::initial(), y);
    OdeState last = y;
    double last_t = 0.0;
    std::size_t seen = 0;

    auto rhs = [&params](const OdeState& x, OdeState& dxdt, double) { pack(ode_rhs(unpack(x), params), dxdt); };
    auto observer = [&](const OdeState& x, double t) {
        for (const auto& v : x)
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw OdeFailure(stiffest_element(last, params, cfg), t,
                                 fmt::format("non-finite state at t = {}", t));
        last = x;
        last_t = t;
        if (seen++ > 0) out.push_back(unpack(x));
    };

    auto stepper =
        odeint::make_controlled(cfg.abs_tol, cfg.rel_tol, odeint::runge_kutta_dopri5<OdeState, double, OdeState, double>());
    const double span = grid.back() > 0.0 ? grid.back() : 1.0;
    try {
        odeint::integrate_times(stepper, rhs, y, grid.begin(), grid.end(), 1e-3 * span / static_cast<double>(grid.size()),
                                observer, odeint::max_step_checker(cfg.max_steps));
    } catch (const OdeFailure&) {
        throw;
    } catch (const std::runtime_error& e) {
        const Element el = stiffest_element(last, params, cfg);
        throw OdeFailure(el, last_t,
                         fmt::format("ODE integration failed after t = {} (element {}): {}", last_t, to_string(el),
                                     e.what()));
    }
    return out;
}

// sigma_n^+ in the (G, E, S, A) basis; qubit 1 excited is (S - A)/sqrt(2).
Mat4 sigma_plus(int n) {
    const double r = 1.0 / std::sqrt(2.0);
    const double sgn = n == 1 ? 1.0 : -1.0;
    const int G = idx(DickeState::G), E = idx(DickeState::E), S = idx(DickeState::S), A = idx(DickeState::A);
    Mat4 m = Mat4::Zero();
    m(S, G) = r;
    m(A, G) = -sgn * r;
    m(E, S) = r;
    m(E, A) = sgn * r;
    return m;
}

// <O(s)>_0 for O = sum_ij O_ij |i><j|
Mat4 heisenberg(const Mat4& op, const TransitionOperatorState& st) {
    Mat4 out = Mat4::Zero();
    for (auto i : kDickeStates)
        for (auto j : kDickeStates) {
            const cplx c = op(idx(i), idx(j));
            if (c != 0.0) out += c * st(i, j);
        }
    return out;
}

void check_qubit(int n) {
    if (n != 1 && n != 2) throw std::invalid_argument("qubit index must be 1 or 2");
}

// Field weights of Theta_k: c_11 = c_22 = 1, c_12 = e^{-ikd}, c_21 = e^{ikd}.
cplx field_weight(int n, int m, double kd) {
    if (n == m) return 1.0;
    return std::polar(1.0, n == 1 ? -kd : kd);
}

void store_block(const Mat4& m, double* dst, bool transpose) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const cplx v = transpose ? m(c, r) : m(r, c);
            dst[r * 4 + c] = v.real();
            dst[16 + r * 4 + c] = v.imag();
        }
}

}  // namespace

std::vector<TransitionOperatorState> integrate_transition_odes(const SystemParams& params,
                                                               std::span<const double> times,
                                                               const OdeConfig& config) {
    const auto elems = integrate_elements(params, times, config);
    std::vector<TransitionOperatorState> out;
    out.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) out.push_back(TransitionOperatorState::expand(elems[i], times[i]));
    return out;
}

cplx correlation_function(int n, int m, double tau, double tau_prime, const DickeDensity& rho0,
                          const SystemParams& params, const OdeConfig& config) {
    check_qubit(n);
    check_qubit(m);
    if (!(tau >= 0.0) || !(tau_prime >= 0.0)) throw std::invalid_argument("times must be >= 0");
    const Mat4 sp = sigma_plus(n);
    const Mat4 sm = sigma_plus(m).adjoint();
    const Mat4 r0 = rho0.matrix();
    if (tau >= tau_prime) {
        const double t[2] = {tau - tau_prime, tau_prime};
        const double lo = std::min(t[0], t[1]), hi = std::max(t[0], t[1]);
        const double ts[2] = {lo, hi};
        const auto st = integrate_transition_odes(params, ts, config);
        const auto& lag = t[0] <= t[1] ? st[0] : st[1];
        const auto& at = t[0] <= t[1] ? st[1] : st[0];
        return (evolve_density(r0, at) * heisenberg(sp, lag) * sm).trace();
    }
    const double t[2] = {tau_prime - tau, tau};
    const double lo = std::min(t[0], t[1]), hi = std::max(t[0], t[1]);
    const double ts[2] = {lo, hi};
    const auto st = integrate_transition_odes(params, ts, config);
    const auto& lag = t[0] <= t[1] ? st[0] : st[1];
    const auto& at = t[0] <= t[1] ? st[1] : st[0];
    return (evolve_density(r0, at) * sp * heisenberg(sm, lag)).trace();
}

QuadratureGrid effective_grid(const SystemParams& params, const QuadratureConfig& config) {
    validate(params);
    if (!(config.T_gamma > 0.0) || config.n_steps < 2) throw std::invalid_argument("bad quadrature window");
    const double g = params.gamma();
    const double h = config.T_gamma / g / config.n_steps;
    const auto r = collective_rates(params);
    const auto deg = degeneracy(params);
    // Slowest decay among channels that radiate at all.
    double slow = g;
    if (deg != Degeneracy::OddPi) slow = std::min(slow, r.gamma_plus);
    if (deg != Degeneracy::EvenPi) slow = std::min(slow, r.gamma_minus);
    double T = config.T_gamma / g;
    if (slow > 0.0) T = std::max(T, 2.0 * std::log(1.0 / config.tail_amplitude) / slow);
    T = std::min(T, config.max_growth * config.T_gamma / g);
    const int n = static_cast<int>(std::ceil(T / h - 1e-9));
    return {n * h, n, h};
}

QuadratureOracle::QuadratureOracle(const SystemParams& params, Direction dir, const QuadratureConfig& config,
                                   const OdeConfig& ode, kernels::Isa isa)
    : params_(params), grid_(effective_grid(params, config)), isa_(isa) {
    const std::size_t N = static_cast<std::size_t>(grid_.n) + 1;
    std::vector<double> times(N);
    for (std::size_t j = 0; j < N; ++j) times[j] = static_cast<double>(j) * grid_.h;
    traj_ = integrate_elements(params, times, ode);

    const double kd = dir == Direction::Forward ? params.k0d : -params.k0d;
    const Mat4 sp[2] = {sigma_plus(1), sigma_plus(2)};
    const Mat4 sm[2] = {sp[0].adjoint(), sp[1].adjoint()};
    y_.assign(N * kernels::kBlock, 0.0);
    z_.assign(N * kernels::kBlock, 0.0);
    for (std::size_t k = 0; k < N; ++k) {
        const auto st = TransitionOperatorState::expand(traj_[k], times[k]);
        const Mat4 xp[2] = {heisenberg(sp[0], st), heisenberg(sp[1], st)};
        const Mat4 xm[2] = {heisenberg(sm[0], st), heisenberg(sm[1], st)};
        Mat4 Y = Mat4::Zero(), Z = Mat4::Zero();
        for (int n = 1; n <= 2; ++n)
            for (int m = 1; m <= 2; ++m) {
                const cplx c = field_weight(n, m, kd);
                Y += c * xp[n - 1] * sm[m - 1];
                Z += c * sp[n - 1] * xm[m - 1];
            }
        store_block(Y, &y_[k * kernels::kBlock], true);
        store_block(Z, &z_[k * kernels::kBlock], true);
    }
}

std::vector<cplx> QuadratureOracle::photon_number(const DickeDensity& rho0, std::span<const double> omegas) const {
    check_density(rho0.matrix());
    const std::size_t n = static_cast<std::size_t>(grid_.n);
    const std::size_t N = n + 1;
    const double h = grid_.h;
    const Mat4 r0 = rho0.matrix();

    std::vector<double> rho(N * kernels::kBlock);
    for (std::size_t j = 0; j < N; ++j) {
        const auto st = TransitionOperatorState::expand(traj_[j], static_cast<double>(j) * h);
        store_block(evolve_density(r0, st), &rho[j * kernels::kBlock], false);
    }
    std::vector<double> w(N, h);
    w.front() = w.back() = 0.5 * h;

    const auto sum = kernels::trace_sum(isa_);
    std::vector<cplx> ap(N), am(N);
    for (std::size_t k = 0; k < N; ++k) {
        ap[k] = sum(rho.data(), &y_[k * kernels::kBlock], w.data(), k, N - k);
        if (k > 0) am[k] = sum(rho.data(), &z_[k * kernels::kBlock], w.data(), k, N - k);
    }

    const double pref = params_.gamma() * kOmega;
    std::vector<cplx> out;
    out.reserve(omegas.size());
    for (double om : omegas) {
        cplx acc = ap[0];
        for (std::size_t k = 1; k < N; ++k) {
            const cplx ph = std::polar(1.0, -om * static_cast<double>(k) * h);
            acc += ph * ap[k] + std::conj(ph) * am[k];
        }
        out.push_back(pref * acc);
    }
    return out;
}

std::vector<double> quadrature_spectrum(const DickeDensity& rho0, const SystemParams& params, Direction dir,
                                        std::span<const double> omegas, const QuadratureConfig& config) {
    const QuadratureOracle oracle(params, dir, config);
    const auto v = oracle.photon_number(rho0, omegas);
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(), [](cplx x) { return x.real(); });
    return out;
}

}  // namespace wgqed
