#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wgqed {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;

// Frequencies are in units of Omega (Omega = 1), times in units of 1/Omega.
// Public entry points that take "Gamma t" say so explicitly.
inline constexpr double kOmega = 1.0;

// Switch to the analytic k0d = n*pi limits when |1 -/+ cos k0d| drops below this.
inline constexpr double kDegenerateEps = 1e-9;

struct SystemParams {
    double gamma_ratio = 0.05;  // Gamma / Omega
    double k0d = 0.0;           // radians

    double gamma() const { return gamma_ratio * kOmega; }
};

// Throws std::invalid_argument on gamma_ratio <= 0, k0d < 0 or non-finite input.
void validate(const SystemParams& params);

struct CollectiveRates {
    double gamma_plus = 0.0;
    double gamma_minus = 0.0;
    double omega_plus = 0.0;
    double omega_minus = 0.0;
    double cos_k0d = 1.0;
    double sin_k0d = 0.0;
};

CollectiveRates collective_rates(const SystemParams& params);

enum class Degeneracy { None, EvenPi, OddPi };

// EvenPi: |1 - cos k0d| < eps (A dark); OddPi: |1 + cos k0d| < eps (S dark).
Degeneracy degeneracy(const SystemParams& params);

// Basis order used for every 4x4 matrix in the library.
enum class DickeState { G = 0, E = 1, S = 2, A = 3 };

inline constexpr std::array<DickeState, 4> kDickeStates = {DickeState::G, DickeState::E, DickeState::S,
                                                           DickeState::A};

constexpr int idx(DickeState s) { return static_cast<int>(s); }
std::string_view to_string(DickeState s);
DickeState parse_dicke_state(std::string_view name);

// k = +k0 is Forward, k = -k0 is Backward.
enum class Direction { Forward, Backward };

// Observable resolution: one direction, or Total = (Forward + Backward) / 2.
// Total keeps the per-direction normalization of the single-qubit rate Gamma/2 e^{-Gamma t}.
enum class Detection { Forward, Backward, Total };

std::string_view to_string(Direction d);
std::string_view to_string(Detection d);
Detection parse_detection(std::string_view name);

// sin(k d) for the mode propagating in direction d.
double directional_sin(const CollectiveRates& rates, Direction d);

struct DickeDensity {
    double pEE = 0.0;
    double pSS = 0.0;
    double pAA = 0.0;
    cplx pSA{};  // <S|rho|A>; <A|rho|S> is its conjugate
    double pGG = 0.0;
    cplx pGE{};  // <G|rho|E>
    cplx pGS{};
    cplx pGA{};
    cplx pSE{};  // <S|rho|E>
    cplx pAE{};

    cplx pAS() const { return std::conj(pSA); }
    double trace() const { return pEE + pSS + pAA + pGG; }

    Mat4 matrix() const;
    // Reads a matrix that is already known to be Hermitian (lower triangle wins).
    static DickeDensity from_matrix(const Mat4& m);
};

struct DensityTolerances {
    double trace = 1e-8;
    double hermitian = 1e-10;
    double psd = 1e-10;
};

class DensityError : public std::invalid_argument {
public:
    DensityError(std::string rule, const std::string& what)
        : std::invalid_argument(what), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

// Throws DensityError naming the violated rule: "trace", "hermitian" or "psd".
void check_density(const Mat4& m, const DensityTolerances& tol = {});

const std::vector<std::string>& preset_names();

// Throws std::invalid_argument listing the valid names.
DickeDensity preset_state(std::string_view name);

}  // namespace wgqed
