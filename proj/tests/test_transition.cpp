#include "doctest.h"

#include "reference.hpp"
#include "util.hpp"

#include "wgqed/oracle.hpp"
#include "wgqed/transition_operator.hpp"

#include <cmath>
#include <numbers>

using namespace wgqed;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0.0, 1.0};

// Populations and coherences transcribed term by term from the published closed forms.
struct Transcribed {
    double SS_E, AA_E, GG_S, GG_A, GG_E;
    cplx GE, AS, AE, SE, GA_GA, GA_AE, GS_GS, GS_SE;
};

Transcribed transcribe(double g, double k0d, double t) {
    const double c = std::cos(k0d), s = std::sin(k0d);
    const double gp = g * (1 + c), gm = g * (1 - c);
    const double op = 1 + g / 2 * s, om = 1 - g / 2 * s;
    const double e2 = std::exp(-2 * g * t), ep = std::exp(-gp * t), em = std::exp(-gm * t);
    Transcribed r{};
    r.SS_E = -(1 + c) / (1 - c) * (e2 - ep);
    r.AA_E = -(1 - c) / (1 + c) * (e2 - em);
    r.GG_S = -(ep - 1);
    r.GG_A = -(em - 1);
    r.GG_E = (1 + c) * (1 + c) / (1 - c) * ((e2 - 1) / 2 - (ep - 1) / (1 + c)) +
             (1 - c) * (1 - c) / (1 + c) * ((e2 - 1) / 2 - (em - 1) / (1 - c));
    r.GE = std::exp(-(2.0 * I + g) * t);
    r.AS = std::exp(-g * (1.0 + I * s) * t);
    r.AE = std::exp(-(I * op + gm / 2 + g) * t);
    r.SE = std::exp(-(I * om + gp / 2 + g) * t);
    r.GA_GA = std::exp(-(I * om + gm / 2) * t);
    r.GA_AE = (1 - c) / (1.0 + I * s) * (std::exp(-(I * op + gm / 2 + g) * t) - std::exp(-(I * om + gm / 2) * t));
    r.GS_GS = std::exp(-(I * op + gp / 2) * t);
    r.GS_SE = -(1 + c) / (1.0 - I * s) * (std::exp(-(I * om + gp / 2 + g) * t) - std::exp(-(I * op + gp / 2) * t));
    return r;
}

double max_state_diff(const TransitionOperatorState& a, const TransitionOperatorState& b) {
    double m = 0.0;
    for (int e = 0; e < 16; ++e) m = std::max(m, (a.P[e] - b.P[e]).cwiseAbs().maxCoeff());
    return m;
}

std::vector<double> k0d_grid_24() {
    std::vector<double> g;
    for (int j = 0; j <= 8; ++j) g.push_back(j * pi / 4);
    for (int j = 0; j < 15; ++j) g.push_back(0.2 + 0.41 * j);
    return g;
}

}  // namespace

TEST_CASE("initial conditions") {
    for (double k : {0.0, 0.7, pi, 2.2}) {
        const SystemParams p{0.05, k};
        const auto pop = population_elements(p, 0.0);
        CHECK(pop.SS_S == 1.0);
        CHECK(pop.SS_E == 0.0);
        CHECK(pop.GG_E == 0.0);
        const auto st = closed_form_state(p, 0.0);
        for (auto i : kDickeStates)
            for (auto j : kDickeStates) {
                Mat4 d = Mat4::Zero();
                d(idx(i), idx(j)) = 1.0;
                CHECK((st(i, j) - d).cwiseAbs().maxCoeff() < 1e-15);
            }
    }
}

TEST_CASE("published examples") {
    const double g = 0.05;
    // k0d = 2 pi, Gamma t = 0.5: E -> S population feed 2 Gamma t e^{-2 Gamma t}
    CHECK(population_elements({g, 2 * pi}, 0.5 / g).SS_E == Approx(std::exp(-1.0)).epsilon(1e-14));
    // k0d = pi/2, Gamma t = 1
    CHECK(population_elements({g, pi / 2}, 1 / g).SS_E ==
          Approx(std::exp(-1.0) - std::exp(-2.0)).epsilon(1e-13));
    // P_AS at k0d = 2 pi, Gamma t = 1 is real e^{-1}
    const cplx as = coherence_elements({g, 2 * pi}, 1 / g).AS;
    CHECK(as.real() == Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(std::abs(as.imag()) < 1e-15);
    // k0d = pi/2: modulus e^{-1}, phase -1 rad
    const cplx as2 = coherence_elements({g, pi / 2}, 1 / g).AS;
    CHECK(std::abs(as2) == Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(std::arg(as2) == Approx(-1.0).epsilon(1e-14));
    CHECK_THROWS_AS(population_elements({g, 1.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(coherence_elements({g, 1.0}, -1e-9), std::invalid_argument);
}

TEST_CASE("closed forms match the published expressions at generic k0d") {
    const double g = 0.05;
    for (double k : {0.3, pi / 4, pi / 2, 2.2, 3.0, 4.4, 5.5}) {
        for (double gt : {0.1, 0.5, 1.0, 3.0, 8.0}) {
            CAPTURE(k);
            CAPTURE(gt);
            const double t = gt / g;
            const auto p = population_elements({g, k}, t);
            const auto c = coherence_elements({g, k}, t);
            const auto r = transcribe(g, k, t);
            CHECK(std::abs(p.SS_E - r.SS_E) < 1e-12);
            CHECK(std::abs(p.AA_E - r.AA_E) < 1e-12);
            CHECK(std::abs(p.GG_S - r.GG_S) < 1e-12);
            CHECK(std::abs(p.GG_A - r.GG_A) < 1e-12);
            CHECK(std::abs(p.GG_E - r.GG_E) < 1e-11);
            CHECK(std::abs(c.GE - r.GE) < 1e-12);
            CHECK(std::abs(c.AS - r.AS) < 1e-12);
            CHECK(std::abs(c.AE - r.AE) < 1e-12);
            CHECK(std::abs(c.SE - r.SE) < 1e-12);
            CHECK(std::abs(c.GA_GA - r.GA_GA) < 1e-12);
            CHECK(std::abs(c.GA_AE - r.GA_AE) < 1e-12);
            CHECK(std::abs(c.GS_GS - r.GS_GS) < 1e-12);
            CHECK(std::abs(c.GS_SE - r.GS_SE) < 1e-12);
        }
    }
}

TEST_CASE("degenerate limits") {
    const double g = 0.05;
    for (double gt : {0.0, 0.3, 0.5, 2.0, 9.0}) {
        const double t = gt / g;
        const auto even = population_elements({g, 2 * pi}, t);
        CHECK(even.SS_E == Approx(2 * gt * std::exp(-2 * gt)).epsilon(1e-14));
        CHECK(even.AA_E == 0.0);
        CHECK(even.AA_A == 1.0);
        const auto odd = population_elements({g, pi}, t);
        CHECK(odd.AA_E == Approx(2 * gt * std::exp(-2 * gt)).epsilon(1e-14));
        CHECK(odd.SS_E == 0.0);
        CHECK(odd.SS_S == 1.0);
    }
}

TEST_CASE("generic branch near n pi joins the limit branch") {
    const double g = 0.05;
    for (double k : {pi, 2 * pi, 3 * pi}) {
        const auto lim = [&](double t) { return population_elements({g, k}, t); };
        for (double dk : {-1e-4, 1e-4}) {
            for (double gt : {0.2, 1.0, 4.0, 10.0}) {
                const double t = gt / g;
                const auto a = population_elements({g, k + dk}, t);
                const auto b = lim(t);
                const double pa[] = {a.SS_S, a.SS_E, a.AA_A, a.AA_E, a.GG_S, a.GG_A, a.GG_E};
                const double pb[] = {b.SS_S, b.SS_E, b.AA_A, b.AA_E, b.GG_S, b.GG_A, b.GG_E};
                for (int i = 0; i < 7; ++i) {
                    CAPTURE(i);
                    if (pb[i] != 0.0)
                        CHECK(rel_err(pa[i], pb[i]) < 1e-6);
                    else  // dark channel: off the exact point it decays at rate ~ Gamma dk^2 / 2
                        CHECK(std::abs(pa[i]) < 1e-6);
                }
                // Coherences have no singular branch; they move linearly with the exchange shift.
                const auto ca = coherence_elements({g, k + dk}, t), cb = coherence_elements({g, k}, t);
                CHECK(std::abs(ca.AS - cb.AS) < 2 * gt * std::abs(dk));
                CHECK(std::abs(ca.GA_AE - cb.GA_AE) < 2 * gt * std::abs(dk));
            }
        }
    }
}

TEST_CASE("trace identity and probability bounds of the closed forms") {
    const double g = 0.05;
    for (double k : k0d_grid_24()) {
        for (double gt = 0.0; gt <= 12.0; gt += 0.4) {
            const auto st = closed_form_state({g, k}, gt / g);
            Mat4 sum = Mat4::Zero();
            for (auto s : kDickeStates) sum += st(s, s);
            CHECK((sum - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
            const auto p = population_elements({g, k}, gt / g);
            for (double v : {p.EE_E, p.SS_S, p.SS_E, p.AA_A, p.AA_E, p.GG_S, p.GG_A, p.GG_E}) {
                CHECK(v >= -1e-15);
                CHECK(v <= 1.0 + 1e-15);
            }
        }
    }
}

TEST_CASE("ode_rhs examples") {
    const double g = 0.05;
    ElementSet only_ee{};
    for (auto& m : only_ee.m) m = Mat4::Zero();
    only_ee[Element::EE] = ElementSet::initial()[Element::EE];
    const auto d = ode_rhs(only_ee, {g, 1.3});
    CHECK(std::abs(d[Element::EE](idx(DickeState::E), idx(DickeState::E)) + 2 * g) < 1e-17);

    ElementSet zero{};
    for (auto& m : zero.m) m = Mat4::Zero();
    for (const auto& m : ode_rhs(zero, {g, 1.3}).m) CHECK(m.cwiseAbs().maxCoeff() == 0.0);

    // k0d = pi: the S population equation has a vanishing prefactor
    ElementSet any = ElementSet::initial();
    for (auto& m : any.m) m += Mat4::Constant(cplx(0.3, -0.2));
    CHECK(ode_rhs(any, {g, pi})[Element::SS].cwiseAbs().maxCoeff() < 1e-17);
}

TEST_CASE("closed forms satisfy the equations of motion") {
    // Fourth-order central differences: the G-E coherence carries a 2 Omega carrier,
    // whose second-order truncation error at this step is already ~5e-8.
    const double g = 0.05;
    const double h = 1e-5 / g;
    for (double k : {0.4, pi / 2, 2.2, pi, 2 * pi, 5.0}) {
        for (double gt : {0.3, 1.7, 5.0}) {
            const double t = gt / g;
            const auto p1 = closed_form_state({g, k}, t + h), m1 = closed_form_state({g, k}, t - h);
            const auto p2 = closed_form_state({g, k}, t + 2 * h), m2 = closed_form_state({g, k}, t - 2 * h);
            const auto now = closed_form_state({g, k}, t);
            ElementSet cur;
            for (auto e : kElements) {
                auto [i, j] = element_dyad(e);
                cur[e] = now(i, j);
            }
            const auto rhs = ode_rhs(cur, {g, k});
            for (auto e : kElements) {
                auto [i, j] = element_dyad(e);
                const Mat4 fd = (8.0 * (p1(i, j) - m1(i, j)) - (p2(i, j) - m2(i, j))) / (12 * h);
                CAPTURE(to_string(e));
                CHECK((fd - rhs[e]).cwiseAbs().maxCoeff() < 1e-8);
            }
        }
    }
}

TEST_CASE("closed forms agree with the integrated equations on a 24-point k0d grid") {
    const double g = 0.05;
    std::vector<double> times;
    for (int j = 0; j <= 20; ++j) times.push_back(0.5 * j / g);
    for (double k : k0d_grid_24()) {
        CAPTURE(k);
        const auto ode = integrate_transition_odes({g, k}, times);
        double err = 0.0;
        for (std::size_t j = 0; j < times.size(); ++j) err = std::max(err, max_state_diff(ode[j], closed_form_state({g, k}, times[j])));
        CHECK(err < 1e-8);
    }
}

TEST_CASE("density evolution matches the independent Lindblad reference") {
    // From a Dicke state, the population of `to` is Tr[rho0 P_to,to(t)].
    for (const auto& r : kRefProbabilities) {
        CAPTURE(r.from);
        CAPTURE(r.to);
        CAPTURE(r.k0d);
        CAPTURE(r.gamma_t);
        const SystemParams p{kRefGammaRatio, r.k0d};
        const auto st = closed_form_state(p, r.gamma_t / p.gamma());
        const auto from = parse_dicke_state(r.from), to = parse_dicke_state(r.to);
        Mat4 rho0 = Mat4::Zero();
        rho0(idx(from), idx(from)) = 1.0;
        const Mat4 rho = evolve_density(rho0, st);
        CHECK(std::abs(rho(idx(to), idx(to)).real() - r.value) < 1e-10);
    }
}

TEST_CASE("element bookkeeping") {
    CHECK(element_dyad(Element::GA) == std::pair{DickeState::G, DickeState::A});
    CHECK(to_string(Element::SE) == "SE");
    const auto st = closed_form_state({0.05, 1.1}, 7.0);
    CHECK((st(DickeState::S, DickeState::G) - st(DickeState::G, DickeState::S).adjoint()).norm() == 0.0);
}
