#include "wgqed/core.hpp"

#include <cmath>
#include <numbers>

namespace wgqed {

void validate(const SystemParams& params) {
    if (!std::isfinite(params.gamma_ratio) || params.gamma_ratio <= 0.0)
        throw std::invalid_argument("gamma_ratio must be finite and > 0");
    if (!std::isfinite(params.k0d) || params.k0d < 0.0)
        throw std::invalid_argument("k0d must be finite and >= 0");
}

CollectiveRates collective_rates(const SystemParams& params) {
    const double g = params.gamma();
    const double c = std::cos(params.k0d);
    const double s = std::sin(params.k0d);
    CollectiveRates r;
    r.cos_k0d = c;
    r.sin_k0d = s;
    // The smaller rate is formed directly (1 - |c| is exact near the Dicke points),
    // the larger one as its complement so the pair sums to 2 Gamma.
    if (c >= 0.0) {
        r.gamma_minus = g * (1.0 - c);
        r.gamma_plus = 2.0 * g - r.gamma_minus;
    } else {
        r.gamma_plus = g * (1.0 + c);
        r.gamma_minus = 2.0 * g - r.gamma_plus;
    }
    r.omega_plus = kOmega + 0.5 * g * s;
    r.omega_minus = 2.0 * kOmega - r.omega_plus;
    return r;
}

Degeneracy degeneracy(const SystemParams& params) {
    const double c = std::cos(params.k0d);
    if (std::abs(1.0 - c) < kDegenerateEps) return Degeneracy::EvenPi;
    if (std::abs(1.0 + c) < kDegenerateEps) return Degeneracy::OddPi;
    return Degeneracy::None;
}

std::string_view to_string(DickeState s) {
    switch (s) {
        case DickeState::G: return "G";
        case DickeState::E: return "E";
        case DickeState::S: return "S";
        case DickeState::A: return "A";
    }
    return "?";
}

DickeState parse_dicke_state(std::string_view name) {
    for (auto s : kDickeStates)
        if (to_string(s) == name) return s;
    throw std::invalid_argument("unknown Dicke state '" + std::string(name) + "' (valid: G, E, S, A)");
}

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

std::string_view to_string(Detection d) {
    switch (d) {
        case Detection::Forward: return "forward";
        case Detection::Backward: return "backward";
        case Detection::Total: return "total";
    }
    return "?";
}

Detection parse_detection(std::string_view name) {
    if (name == "forward") return Detection::Forward;
    if (name == "backward") return Detection::Backward;
    if (name == "total") return Detection::Total;
    throw std::invalid_argument("unknown direction '" + std::string(name) + "' (valid: forward, backward, total)");
}

double directional_sin(const CollectiveRates& rates, Direction d) {
    return d == Direction::Forward ? rates.sin_k0d : -rates.sin_k0d;
}

Mat4 DickeDensity::matrix() const {
    const int G = idx(DickeState::G), E = idx(DickeState::E), S = idx(DickeState::S), A = idx(DickeState::A);
    Mat4 m = Mat4::Zero();
    m(G, G) = pGG;
    m(E, E) = pEE;
    m(S, S) = pSS;
    m(A, A) = pAA;
    auto put = [&m](int r, int c, cplx v) {
        m(r, c) = v;
        m(c, r) = std::conj(v);
    };
    put(S, A, pSA);
    put(G, E, pGE);
    put(G, S, pGS);
    put(G, A, pGA);
    put(S, E, pSE);
    put(A, E, pAE);
    return m;
}

DickeDensity DickeDensity::from_matrix(const Mat4& m) {
    const int G = idx(DickeState::G), E = idx(DickeState::E), S = idx(DickeState::S), A = idx(DickeState::A);
    DickeDensity d;
    d.pGG = m(G, G).real();
    d.pEE = m(E, E).real();
    d.pSS = m(S, S).real();
    d.pAA = m(A, A).real();
    d.pSA = std::conj(m(A, S));
    d.pGE = std::conj(m(E, G));
    d.pGS = std::conj(m(S, G));
    d.pGA = std::conj(m(A, G));
    d.pSE = m(S, E);
    d.pAE = m(A, E);
    return d;
}

void check_density(const Mat4& m, const DensityTolerances& tol) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= tol.hermitian))
        throw DensityError("hermitian", "matrix is not Hermitian (max |rho - rho^dagger| = " + std::to_string(herm) + ")");
    const double tr = m.trace().real();
    if (!(std::abs(tr - 1.0) <= tol.trace))
        throw DensityError("trace", "trace must be 1 (got " + std::to_string(tr) + ")");
    Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    if (lo < -tol.psd)
        throw DensityError("psd", "matrix is not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"E", "S", "A", "eg", "ge", "s1g2", "s1e2", "s1s2", "G"};
    return names;
}

DickeDensity preset_state(std::string_view name) {
    using std::numbers::sqrt2;
    const double h = 1.0 / (2.0 * sqrt2);
    DickeDensity d;
    if (name == "E") {
        d.pEE = 1.0;
    } else if (name == "S") {
        d.pSS = 1.0;
    } else if (name == "A") {
        d.pAA = 1.0;
    } else if (name == "eg") {
        // |e1 g2> = (S - A)/sqrt2
        d.pSS = d.pAA = 0.5;
        d.pSA = -0.5;
    } else if (name == "ge") {
        d.pSS = d.pAA = 0.5;
        d.pSA = 0.5;
    } else if (name == "s1g2") {
        // S/2 - A/2 + G/sqrt2
        d.pSS = d.pAA = 0.25;
        d.pSA = -0.25;
        d.pGG = 0.5;
        d.pGS = h;
        d.pGA = -h;
    } else if (name == "s1e2") {
        // E/sqrt2 + S/2 + A/2
        d.pEE = 0.5;
        d.pSS = d.pAA = 0.25;
        d.pSA = 0.25;
        d.pSE = h;
        d.pAE = h;
    } else if (name == "s1s2") {
        // E/2 + S/sqrt2 + G/2
        d.pEE = 0.25;
        d.pSS = 0.5;
        d.pGG = 0.25;
        d.pGE = 0.25;
        d.pSE = h;
        d.pGS = h;
    } else if (name == "G") {
        d.pGG = 1.0;
    } else {
        std::string list;
        for (const auto& n : preset_names()) list += (list.empty() ? "" : ", ") + n;
        throw std::invalid_argument("unknown preset '" + std::string(name) + "' (valid: " + list + ")");
    }
    return d;
}

}  // namespace wgqed
