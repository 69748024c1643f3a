#include "catweak/weak_measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catweak/errors.hpp"

namespace catweak {

namespace {

constexpr const char* kModule = "weak-measurement";

void require_weak(const CatState& state) {
    if (classify_regime(state.inner_product()) != Regime::weak) {
        throw RegimeViolation(kModule, "weak-coupling approximation needs I >= 0.99, got I = " +
                                           std::to_string(state.inner_product()));
    }
}

}  // namespace

SpinSelection::SpinSelection(Complex a1, Complex a2)
    : a1_(require_finite(a1, "a1")), a2_(require_finite(a2, "a2")) {
    if (std::abs(std::norm(a1) + std::norm(a2) - 1.0) > 1e-12) {
        throw InvalidArgument(kModule, "selection must satisfy |a1|^2 + |a2|^2 = 1");
    }
}

SpinSelection SpinSelection::from_phase(double phi) {
    return SpinSelection(std::cos(phi), Complex(0.0, std::sin(phi)));
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::weak: return "weak";
        case Regime::intermediate: return "intermediate";
        case Regime::strong: return "strong";
    }
    return "unknown";
}

Regime classify_regime(double inner_product) {
    if (inner_product >= kWeakThreshold) return Regime::weak;
    if (inner_product <= kStrongThreshold) return Regime::strong;
    return Regime::intermediate;
}

Complex weak_value(const SpinSelection& sel) {
    if (std::abs(sel.a1()) <= 1e-12) {
        throw DivergentWeakValue(kModule, "|a1| <= 1e-12: weak value a2/a1 is unbounded");
    }
    return sel.a2() / sel.a1();
}

WeakValue weak_value(const SpinSelection& sel, const CatState& meter) {
    return {weak_value(sel), classify_regime(meter.inner_product())};
}

BranchAmplitudes branch_amplitudes(const SpinSelection& sel) {
    const double s = 1.0 / std::numbers::sqrt2;
    return {(sel.a1() + sel.a2()) * s, (sel.a1() - sel.a2()) * s};
}

SpinSelection selection_from_branches(Complex a, Complex b) {
    const double s = 1.0 / std::numbers::sqrt2;
    return SpinSelection((a + b) * s, (a - b) * s);
}

WeakPointer::WeakPointer(Complex weak_value, double p0, double eta, double hbar)
    : w_(weak_value), p0_(p0), eta_(eta), hbar_(hbar),
      peak_(-2.0 * p0 * eta * eta * weak_value.imag() / hbar) {}

Complex WeakPointer::shape(double x) const {
    return std::exp(Complex(-x * x / (4.0 * eta_ * eta_), 0.0) + Complex(0.0, p0_ * x / hbar_) * w_);
}

double WeakPointer::density(double x) const {
    const double d = x - peak_;
    return std::exp(-d * d / (2.0 * eta_ * eta_)) / std::sqrt(2.0 * std::numbers::pi * eta_ * eta_);
}

WeakPointer weak_pointer_approx(const CatState& state, const SpinSelection& sel) {
    require_weak(state);
    const Complex w = weak_value(sel);
    const double phase = state.p0() * 4.0 * state.eta() * std::abs(w) / state.hbar();
    if (phase > kMaxFirstOrderPhase) {
        throw RegimeViolation(kModule, "first-order expansion invalid: |p0 x w / hbar| = " +
                                           std::to_string(phase) + " at x = 4 eta");
    }
    return WeakPointer(w, state.p0(), state.eta(), state.hbar());
}

double weak_pointer_error(const CatState& state, const SpinSelection& sel) {
    const auto pointer = weak_pointer_approx(state, sel);
    const auto exact = position_density(state, default_position_grid(state));
    double sup = 0.0;
    for (std::size_t i = 0; i < exact.grid.n; ++i) {
        sup = std::max(sup, std::abs(exact.values[i] - pointer.density(exact.grid[i])));
    }
    return sup;
}

double position_peak_prediction(const CatState& state, const SpinSelection& sel) {
    require_weak(state);
    return -2.0 * state.p0() * state.eta() * state.eta() * weak_value(sel).imag() / state.hbar();
}

double momentum_peak_prediction(const CatState& state, const SpinSelection& sel) {
    require_weak(state);
    const Complex w = weak_value(sel);
    if (std::abs(w.imag()) > 1e-9) {
        throw RegimeViolation(kModule, "momentum pointer shift is defined for a real weak value; Im(w) = " +
                                           std::to_string(w.imag()));
    }
    return state.p0() * w.real();
}

}  // namespace catweak
