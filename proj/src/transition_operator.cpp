#include "wgqed/transition_operator.hpp"

#include "wgqed/expsum.hpp"

#include <cmath>
#include <stdexcept>

namespace wgqed {

namespace {

void require_nonnegative(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("time must be >= 0");
}

constexpr cplx I{0.0, 1.0};

Mat4 dyad(DickeState i, DickeState j) {
    Mat4 m = Mat4::Zero();
    m(idx(i), idx(j)) = 1.0;
    return m;
}

// Limit forms at k0d = n*pi: the bright channel decays at 2 Gamma, the dark one not at all.
void fill_degenerate(PopulationElements& p, double g, double t, bool s_bright) {
    const double e2 = std::exp(-2.0 * g * t);
    const double feed = 2.0 * g * t * e2;
    const double bright_emptied = -std::expm1(-2.0 * g * t);
    const double to_ground = bright_emptied - feed;  // 1 - (1 + 2 Gamma t) e^{-2 Gamma t}
    if (s_bright) {
        p.SS_S = e2;
        p.SS_E = feed;
        p.AA_A = 1.0;
        p.AA_E = 0.0;
        p.GG_S = bright_emptied;
        p.GG_A = 0.0;
    } else {
        p.AA_A = e2;
        p.AA_E = feed;
        p.SS_S = 1.0;
        p.SS_E = 0.0;
        p.GG_A = bright_emptied;
        p.GG_S = 0.0;
    }
    p.GG_E = to_ground;
}

}  // namespace

PopulationElements population_elements(const SystemParams& params, double t) {
    require_nonnegative(t);
    const double g = params.gamma();
    PopulationElements p;
    p.EE_E = std::exp(-2.0 * g * t);

    switch (degeneracy(params)) {
        case Degeneracy::EvenPi: fill_degenerate(p, g, t, true); return p;
        case Degeneracy::OddPi: fill_degenerate(p, g, t, false); return p;
        case Degeneracy::None: break;
    }

    const auto r = collective_rates(params);
    const double gp = r.gamma_plus, gm = r.gamma_minus;
    using expsum::conv;
    p.SS_S = std::exp(-gp * t);
    p.SS_E = gp * conv({gp, 2.0 * g}, t).real();
    p.AA_A = std::exp(-gm * t);
    p.AA_E = gm * conv({gm, 2.0 * g}, t).real();
    p.GG_S = -std::expm1(-gp * t);
    p.GG_A = -std::expm1(-gm * t);
    p.GG_E = gp * gp * conv({0.0, gp, 2.0 * g}, t).real() + gm * gm * conv({0.0, gm, 2.0 * g}, t).real();
    return p;
}

CoherenceElements coherence_elements(const SystemParams& params, double t) {
    require_nonnegative(t);
    const double g = params.gamma();
    const auto r = collective_rates(params);
    const double gp = r.gamma_plus, gm = r.gamma_minus;

    const cplx lam_GE = 2.0 * I * kOmega + g;
    const cplx lam_AS = g * (1.0 + I * r.sin_k0d);
    const cplx lam_AE = I * r.omega_plus + 0.5 * gm + g;
    const cplx lam_SE = I * r.omega_minus + 0.5 * gp + g;
    const cplx lam_GA = I * r.omega_minus + 0.5 * gm;
    const cplx lam_GS = I * r.omega_plus + 0.5 * gp;

    using expsum::conv;
    CoherenceElements c;
    c.GE = std::exp(-lam_GE * t);
    c.AS = std::exp(-lam_AS * t);
    c.AE = std::exp(-lam_AE * t);
    c.SE = std::exp(-lam_SE * t);
    c.GA_GA = std::exp(-lam_GA * t);
    c.GA_AE = -gm * conv({lam_AE, lam_GA}, t);
    c.GS_GS = std::exp(-lam_GS * t);
    c.GS_SE = gp * conv({lam_SE, lam_GS}, t);
    return c;
}

std::string_view to_string(Element e) {
    static constexpr std::array<std::string_view, kElementCount> names = {"EE", "SS", "AA", "GG", "GE",
                                                                          "AS", "AE", "SE", "GA", "GS"};
    return names[static_cast<int>(e)];
}

std::pair<DickeState, DickeState> element_dyad(Element e) {
    using D = DickeState;
    switch (e) {
        case Element::EE: return {D::E, D::E};
        case Element::SS: return {D::S, D::S};
        case Element::AA: return {D::A, D::A};
        case Element::GG: return {D::G, D::G};
        case Element::GE: return {D::G, D::E};
        case Element::AS: return {D::A, D::S};
        case Element::AE: return {D::A, D::E};
        case Element::SE: return {D::S, D::E};
        case Element::GA: return {D::G, D::A};
        case Element::GS: return {D::G, D::S};
    }
    throw std::logic_error("bad element");
}

ElementSet ElementSet::initial() {
    ElementSet s;
    for (auto e : kElements) {
        auto [i, j] = element_dyad(e);
        s[e] = dyad(i, j);
    }
    return s;
}

ElementSet ode_rhs(const ElementSet& y, const SystemParams& params) {
    const double g = params.gamma();
    const double c = std::cos(params.k0d);
    const double s = std::sin(params.k0d);
    const double gp = g * (1.0 + c), gm = g * (1.0 - c);
    using E = Element;

    ElementSet d;
    d[E::EE] = -2.0 * g * y[E::EE];
    // The loss term enters with a minus sign: L^dagger(|S><S|) = Gamma_+ (|E><E| - |S><S|).
    d[E::SS] = gp * (y[E::EE] - y[E::SS]);
    d[E::AA] = gm * (y[E::EE] - y[E::AA]);
    d[E::GG] = gp * y[E::SS] + gm * y[E::AA];

    d[E::GE] = -(2.0 * I * kOmega + g) * y[E::GE];
    d[E::AS] = -g * (1.0 + I * s) * y[E::AS];
    d[E::AE] = -I * (kOmega + 0.5 * g * s) * y[E::AE] - 0.5 * g * (3.0 - c) * y[E::AE];
    d[E::SE] = -I * (kOmega - 0.5 * g * s) * y[E::SE] - 0.5 * g * (3.0 + c) * y[E::SE];
    d[E::GA] = -I * (kOmega - 0.5 * g * s) * y[E::GA] - gm * y[E::AE] - 0.5 * gm * y[E::GA];
    d[E::GS] = -I * (kOmega + 0.5 * g * s) * y[E::GS] + gp * y[E::SE] - 0.5 * gp * y[E::GS];
    return d;
}

TransitionOperatorState TransitionOperatorState::expand(const ElementSet& e, double t) {
    TransitionOperatorState st;
    st.t = t;
    for (auto el : kElements) {
        auto [i, j] = element_dyad(el);
        st(i, j) = e[el];
        if (i != j) st(j, i) = e[el].adjoint();
    }
    return st;
}

TransitionOperatorState closed_form_state(const SystemParams& params, double t) {
    const auto p = population_elements(params, t);
    const auto c = coherence_elements(params, t);
    using D = DickeState;
    using E = Element;
    ElementSet e;
    for (auto& m : e.m) m.setZero();
    auto at = [](Mat4& m, D i, D j) -> cplx& { return m(idx(i), idx(j)); };

    at(e[E::EE], D::E, D::E) = p.EE_E;
    at(e[E::SS], D::S, D::S) = p.SS_S;
    at(e[E::SS], D::E, D::E) = p.SS_E;
    at(e[E::AA], D::A, D::A) = p.AA_A;
    at(e[E::AA], D::E, D::E) = p.AA_E;
    at(e[E::GG], D::G, D::G) = p.GG_G;
    at(e[E::GG], D::S, D::S) = p.GG_S;
    at(e[E::GG], D::A, D::A) = p.GG_A;
    at(e[E::GG], D::E, D::E) = p.GG_E;

    at(e[E::GE], D::G, D::E) = c.GE;
    at(e[E::AS], D::A, D::S) = c.AS;
    at(e[E::AE], D::A, D::E) = c.AE;
    at(e[E::SE], D::S, D::E) = c.SE;
    at(e[E::GA], D::G, D::A) = c.GA_GA;
    at(e[E::GA], D::A, D::E) = c.GA_AE;
    at(e[E::GS], D::G, D::S) = c.GS_GS;
    at(e[E::GS], D::S, D::E) = c.GS_SE;
    return TransitionOperatorState::expand(e, t);
}

Mat4 evolve_density(const Mat4& rho0, const TransitionOperatorState& st) {
    Mat4 rho;
    for (auto l : kDickeStates)
        for (auto m : kDickeStates) rho(idx(l), idx(m)) = (rho0 * st(m, l)).trace();
    return rho;
}

}  // namespace wgqed
