#pragma once

#include "wgqed/core.hpp"

#include <array>

namespace wgqed {

// Coefficients of the vacuum-averaged populations <P_ii(t)>_0 on their dyads |m><m|.
struct PopulationElements {
    double EE_E = 1.0;  // <P_EE> = EE_E |E><E|
    double SS_S = 1.0;  // <P_SS> = SS_S |S><S| + SS_E |E><E|
    double SS_E = 0.0;
    double AA_A = 1.0;
    double AA_E = 0.0;
    double GG_G = 1.0;  // <P_GG> = |G><G| + GG_S |S><S| + GG_A |A><A| + GG_E |E><E|
    double GG_S = 0.0;
    double GG_A = 0.0;
    double GG_E = 0.0;
};

// Coefficients of the independent coherences <P_ij(t)>_0; the remaining six
// are their adjoints, <P_ji> = <P_ij>^dagger.
struct CoherenceElements {
    cplx GE{1.0};     // |G><E|
    cplx AS{1.0};     // |A><S|
    cplx AE{1.0};     // |A><E|
    cplx SE{1.0};     // |S><E|
    cplx GA_GA{1.0};  // <P_GA> = GA_GA |G><A| + GA_AE |A><E|
    cplx GA_AE{};
    cplx GS_GS{1.0};  // <P_GS> = GS_GS |G><S| + GS_SE |S><E|
    cplx GS_SE{};
};

// t is in units of 1/Omega. Both throw std::invalid_argument for t < 0.
PopulationElements population_elements(const SystemParams& params, double t);
CoherenceElements coherence_elements(const SystemParams& params, double t);

// The ten independent operator-valued elements carried by the equations of motion.
enum class Element { EE, SS, AA, GG, GE, AS, AE, SE, GA, GS };
inline constexpr int kElementCount = 10;
inline constexpr std::array<Element, kElementCount> kElements = {
    Element::EE, Element::SS, Element::AA, Element::GG, Element::GE,
    Element::AS, Element::AE, Element::SE, Element::GA, Element::GS};

std::string_view to_string(Element e);
// Row/column states of the dyad that the element starts from, e.g. GA -> (G, A).
std::pair<DickeState, DickeState> element_dyad(Element e);

struct ElementSet {
    std::array<Mat4, kElementCount> m;

    Mat4& operator[](Element e) { return m[static_cast<int>(e)]; }
    const Mat4& operator[](Element e) const { return m[static_cast<int>(e)]; }

    // P_ij(0) = |i><j|
    static ElementSet initial();
};

// Right-hand side of the vacuum-averaged Heisenberg equations for the ten elements.
ElementSet ode_rhs(const ElementSet& state, const SystemParams& params);

// All sixteen <P_ij(t)>_0 as 4x4 matrices in the (G, E, S, A) basis.
struct TransitionOperatorState {
    double t = 0.0;
    std::array<Mat4, 16> P;

    const Mat4& operator()(DickeState i, DickeState j) const { return P[idx(i) * 4 + idx(j)]; }
    Mat4& operator()(DickeState i, DickeState j) { return P[idx(i) * 4 + idx(j)]; }

    // Fills the conjugate elements from the independent ones.
    static TransitionOperatorState expand(const ElementSet& e, double t);
};

TransitionOperatorState closed_form_state(const SystemParams& params, double t);

// rho_S(t)_{lm} = Tr[rho_S(0) <P_ml(t)>_0]
Mat4 evolve_density(const Mat4& rho0, const TransitionOperatorState& state);

}  // namespace wgqed
