#include <cmath>
#include <numbers>
#include <random>

#include "catweak/errors.hpp"
#include "catweak/weak_measurement.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace catweak;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFigPhi = kPi / 2.02;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

CatState meter_for(const SpinSelection& sel, double x0, double p0, double eta = 1.0, double hbar = 1.0) {
    const auto [a, b] = branch_amplitudes(sel);
    return CatState(a, b, x0, p0, eta, hbar);
}

SpinSelection selection_for_weak_value(Complex w) {
    const double n = std::sqrt(1.0 + std::norm(w));
    return SpinSelection(1.0 / n, w / n);
}

}  // namespace

TEST_SUITE("weak-measurement") {

TEST_CASE("weak values") {
    CHECK(std::abs(weak_value(SpinSelection(kInvSqrt2, kInvSqrt2)) - Complex(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(weak_value(SpinSelection(1.0, 0.0))) <= 1e-15);
    const auto w = weak_value(SpinSelection::from_phase(kFigPhi));
    CHECK(std::abs(w.real()) <= 1e-12);
    CHECK(w.imag() == doctest::Approx(std::tan(kFigPhi)).epsilon(1e-13));
    CHECK(w.imag() == doctest::Approx(64.2934).epsilon(1e-6));
    CHECK_THROWS_AS(weak_value(SpinSelection(0.0, 1.0)), DivergentWeakValue);
    CHECK_THROWS_AS(weak_value(SpinSelection(1e-13, Complex(0.0, 1.0))), DivergentWeakValue);
}

TEST_CASE("selection validation") {
    CHECK_THROWS_AS(SpinSelection(1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(SpinSelection(Complex(NAN, 0.0), 0.0), InvalidArgument);
}

TEST_CASE("regime classification") {
    CHECK(classify_regime(1.0) == Regime::weak);
    CHECK(classify_regime(0.99) == Regime::weak);
    CHECK(classify_regime(0.5) == Regime::intermediate);
    CHECK(classify_regime(0.01) == Regime::strong);
    CHECK(classify_regime(1.5e-8) == Regime::strong);
    CHECK(to_string(Regime::intermediate) == "intermediate");
    const auto sel = SpinSelection::from_phase(kFigPhi);
    CHECK(weak_value(sel, meter_for(sel, 1e-4, 1e-3)).regime == Regime::weak);
    CHECK(weak_value(sel, meter_for(sel, 6.0, 0.01)).regime == Regime::strong);
}

TEST_CASE("branch amplitudes round trip") {
    std::mt19937_64 rng(808);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto [a1, a2] = oracle::random_amplitudes(rng);
        const auto branches = branch_amplitudes(SpinSelection(a1, a2));
        CHECK(std::norm(branches.a) + std::norm(branches.b) == doctest::Approx(1.0).epsilon(1e-12));
        const auto back = selection_from_branches(branches.a, branches.b);
        worst = std::max({worst, std::abs(back.a1() - a1), std::abs(back.a2() - a2)});
    }
    CHECK(worst <= 1e-12);

    const auto fig = branch_amplitudes(SpinSelection::from_phase(kFigPhi));
    CHECK(std::abs(fig.a - std::polar(kInvSqrt2, kFigPhi)) <= 1e-15);
    CHECK(std::abs(fig.b - std::polar(kInvSqrt2, -kFigPhi)) <= 1e-15);
}

TEST_CASE("global phase leaves weak value and meter density unchanged") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 20; ++i) {
        const auto [a1, a2] = oracle::random_amplitudes(rng);
        const Complex phase = std::polar(1.0, 1.234 * i);
        const SpinSelection s1(a1, a2), s2(a1 * phase, a2 * phase);
        CHECK(std::abs(weak_value(s1) - weak_value(s2)) <= 1e-12 * (1.0 + std::abs(weak_value(s1))));
        const auto m1 = meter_for(s1, 0.7, 0.3), m2 = meter_for(s2, 0.7, 0.3);
        for (double x : {-2.0, -0.4, 0.0, 1.1}) {
            CHECK(std::norm(m1.wavefunction(x)) == doctest::Approx(std::norm(m2.wavefunction(x))).epsilon(1e-12));
        }
    }
}

TEST_CASE("imaginary weak value: pointer shifts in position") {
    const auto sel = SpinSelection::from_phase(kFigPhi);
    const auto state = meter_for(sel, 1e-4, 1e-3);
    const auto pointer = weak_pointer_approx(state, sel);
    CHECK(pointer.peak() == doctest::Approx(-2e-3 * std::tan(kFigPhi)).epsilon(1e-12));
    CHECK(position_peak_prediction(state, sel) == doctest::Approx(-0.1285868).epsilon(1e-6));
    // Second-order terms move the exact peak by about 1.04e-3.
    const double exact = position_density_peak(state);
    CHECK(std::abs(exact - pointer.peak()) <= 1.1e-3);
    CHECK(std::abs(exact + 0.129) <= 0.005);
    CHECK(weak_pointer_error(state, sel) <= 0.01);

    // The normalized approximate density is a unit-width Gaussian.
    CHECK(pointer.density(pointer.peak()) == doctest::Approx(1.0 / std::sqrt(2.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("weak approximation refuses strong coupling") {
    const auto sel = SpinSelection::from_phase(kFigPhi);
    CHECK_THROWS_AS(weak_pointer_approx(meter_for(sel, 6.0, 0.01), sel), RegimeViolation);
    CHECK_THROWS_AS(position_peak_prediction(meter_for(sel, 6.0, 0.01), sel), RegimeViolation);
    // I ~ 1 but the first-order phase p0 * 4 eta |w| / hbar is too large.
    CHECK_THROWS_AS(weak_pointer_approx(meter_for(sel, 1e-4, 0.01), sel), RegimeViolation);
}

TEST_CASE("real weak value: no position shift, momentum shift p0 w") {
    const auto sel = selection_for_weak_value(3.0);
    const auto state = meter_for(sel, 1e-4, 1e-3);
    CHECK(std::abs(weak_pointer_approx(state, sel).peak()) <= 1e-15);
    CHECK(std::abs(position_density_peak(state)) <= 1e-3);
    CHECK(momentum_peak_prediction(state, sel) == doctest::Approx(3e-3).epsilon(1e-12));
    CHECK(momentum_density_peak(state) == doctest::Approx(3e-3).epsilon(0.05));
    CHECK_THROWS_AS(momentum_peak_prediction(state, SpinSelection::from_phase(kFigPhi)), RegimeViolation);
}

TEST_CASE("momentum peak for w = 1 and w = 0") {
    SUBCASE("w = 1 leaves a single packet at p0") {
        const auto sel = SpinSelection(kInvSqrt2, kInvSqrt2);
        const auto state = meter_for(sel, 1e-4, 1e-3);
        CHECK(momentum_peak_prediction(state, sel) == doctest::Approx(1e-3).epsilon(1e-12));
        CHECK(momentum_density_peak(state) == doctest::Approx(1e-3).epsilon(1e-6));
    }
    SUBCASE("w = 0 is symmetric about zero") {
        const auto sel = SpinSelection(1.0, 0.0);
        const auto state = meter_for(sel, 1e-4, 1e-3);
        CHECK(momentum_peak_prediction(state, sel) == 0.0);
        CHECK(std::abs(momentum_density_peak(state)) <= 1e-6);
    }
}

TEST_CASE("position shift is linear in p0") {
    const auto sel = selection_for_weak_value(Complex(0.0, 10.0));
    const auto s1 = meter_for(sel, 1e-4, 1e-3);
    const auto s2 = meter_for(sel, 1e-4, 2e-3);
    CHECK(position_peak_prediction(s2, sel) == doctest::Approx(2.0 * position_peak_prediction(s1, sel)).epsilon(1e-12));
    CHECK(position_density_peak(s2) / position_density_peak(s1) == doctest::Approx(2.0).epsilon(0.02));
    CHECK(position_density_peak(s1) == doctest::Approx(-0.02).epsilon(0.02));
}

TEST_CASE("weak approximation holds only with overlapping branches") {
    const auto sel = SpinSelection::from_phase(kFigPhi);
    for (double x0 : {1e-4, 0.01, 0.1, 1.0, 6.0}) {
        const auto state = meter_for(sel, x0, 1e-3);
        const bool weak = state.inner_product() >= kWeakThreshold;
        if (weak) {
            CHECK_NOTHROW(weak_pointer_approx(state, sel));
        } else {
            CHECK_THROWS_AS(weak_pointer_approx(state, sel), RegimeViolation);
        }
        CHECK(weak == (x0 <= 0.1));
    }
}

}  // TEST_SUITE
