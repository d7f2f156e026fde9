#include "doctest.h"

#include "wgqed/core.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace wgqed;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

TEST_CASE("collective rates at the reference distances") {
    const double g = 0.05;
    auto r = collective_rates({0.05, 2 * pi});
    CHECK(r.gamma_plus == Approx(2 * g).epsilon(1e-15));
    CHECK(r.gamma_minus == Approx(0.0).epsilon(1e-15));

    r = collective_rates({0.05, pi / 2});
    CHECK(r.gamma_plus == Approx(g).epsilon(1e-15));
    CHECK(r.gamma_minus == Approx(g).epsilon(1e-15));
    CHECK(r.omega_plus == Approx(1.0 + g / 2).epsilon(1e-15));
    CHECK(r.omega_minus == Approx(1.0 - g / 2).epsilon(1e-15));

    r = collective_rates({0.05, pi});
    CHECK(std::abs(r.gamma_plus) < 1e-15);
    CHECK(r.gamma_minus == Approx(2 * g).epsilon(1e-15));
}

TEST_CASE("collective rate sums are exact") {
    for (double k = 0.0; k < 13.0; k += 0.173) {
        const auto r = collective_rates({0.05, k});
        CHECK(r.gamma_plus + r.gamma_minus == 0.1);
        CHECK(r.omega_plus + r.omega_minus == 2.0);
        CHECK(r.gamma_plus >= 0.0);
        CHECK(r.gamma_minus >= 0.0);
    }
}

TEST_CASE("degeneracy switch") {
    CHECK(degeneracy({0.05, 2 * pi}) == Degeneracy::EvenPi);
    CHECK(degeneracy({0.05, 0.0}) == Degeneracy::EvenPi);
    CHECK(degeneracy({0.05, pi}) == Degeneracy::OddPi);
    CHECK(degeneracy({0.05, 3 * pi}) == Degeneracy::OddPi);
    CHECK(degeneracy({0.05, pi / 2}) == Degeneracy::None);
    CHECK(degeneracy({0.05, 2 * pi + 1e-4}) == Degeneracy::None);
    CHECK(degeneracy({0.05, 2 * pi + 1e-5}) == Degeneracy::EvenPi);  // 1 - cos = 5e-11
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({-0.1, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({0.05, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({0.05, NAN}), std::invalid_argument);
    CHECK_NOTHROW(validate({0.05, 0.0}));
}

TEST_CASE("names round-trip") {
    for (auto s : kDickeStates) CHECK(parse_dicke_state(to_string(s)) == s);
    for (auto d : {Detection::Forward, Detection::Backward, Detection::Total})
        CHECK(parse_detection(to_string(d)) == d);
    CHECK_THROWS_AS(parse_dicke_state("X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_detection("left"), std::invalid_argument);
}

TEST_CASE("preset eg") {
    const auto r = preset_state("eg");
    CHECK(r.pSS == Approx(0.5));
    CHECK(r.pAA == Approx(0.5));
    CHECK(r.pSA == cplx(-0.5));
    CHECK(r.pAS() == cplx(-0.5));
    CHECK(r.pEE == 0.0);
    CHECK(r.pGG == 0.0);
}

TEST_CASE("preset s1s2") {
    const auto r = preset_state("s1s2");
    CHECK(r.pEE == Approx(0.25));
    CHECK(r.pSS == Approx(0.5));
    CHECK(r.pGG == Approx(0.25));
    CHECK(r.pAA == Approx(0.0));
    CHECK(std::abs(r.pGE - 0.25) < 1e-15);
    CHECK(std::abs(r.pSE - 1 / (2 * std::sqrt(2.0))) < 1e-15);
    CHECK(std::abs(r.pGS - 1 / (2 * std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("preset G and unknown names") {
    const auto r = preset_state("G");
    CHECK(r.pGG == 1.0);
    CHECK(r.trace() == 1.0);
    CHECK((r.matrix() - Mat4::Zero()).norm() == Approx(1.0));
    try {
        preset_state("XX");
        FAIL("expected throw");
    } catch (const std::invalid_argument& e) {
        const std::string msg = e.what();
        for (const auto& n : preset_names()) CHECK(msg.find(n) != std::string::npos);
    }
}

TEST_CASE("every preset is a valid density matrix") {
    CHECK(preset_names().size() == 9);
    for (const auto& n : preset_names()) {
        CAPTURE(n);
        const Mat4 m = preset_state(n).matrix();
        CHECK(std::abs(m.trace() - 1.0) < 1e-14);
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
        Eigen::SelfAdjointEigenSolver<Mat4> es(m);
        CHECK(es.eigenvalues().minCoeff() >= -1e-12);
        CHECK_NOTHROW(check_density(m));
        // pure states
        CHECK((m * m - m).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("density matrix round trip") {
    for (const auto& n : preset_names()) {
        const auto a = preset_state(n);
        const auto b = DickeDensity::from_matrix(a.matrix());
        CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("density checks name the violated rule") {
    auto rule_of = [](const Mat4& m) -> std::string {
        try {
            check_density(m);
        } catch (const DensityError& e) {
            return e.rule();
        }
        return "ok";
    };
    Mat4 m = Mat4::Identity() / 4.0;
    CHECK(rule_of(m) == "ok");
    CHECK(rule_of(0.9 * m) == "trace");
    Mat4 h = m;
    h(0, 1) = cplx(0.1, 0.0);
    CHECK(rule_of(h) == "hermitian");
    Mat4 neg = Mat4::Zero();
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK(rule_of(neg) == "psd");
}
