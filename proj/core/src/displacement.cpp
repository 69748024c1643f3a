#include "catweak/displacement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "catweak/errors.hpp"
#include "catweak/minimize.hpp"

namespace catweak {

namespace {

constexpr const char* kModule = "displacement-sensitivity";
constexpr double kMaxExponent = 700.0;

double log_inner_product(const CatState& s) {
    return -2.0 * s.p0() * s.p0() * s.eta() * s.eta() / (s.hbar() * s.hbar()) -
           s.x0() * s.x0() / (2.0 * s.eta() * s.eta());
}

// Evaluates the bracket of the closed form with an extra real exponent
// `envelope` folded into every term, so e^{z} never overflows on its own.
Complex bracket(const CatState& s, double delta, double envelope) {
    const double z = make_shift(s, delta).z;
    const double log_i = log_inner_product(s);
    const double hi = std::max(log_i + z, log_i - z) + envelope;
    if (hi > kMaxExponent) {
        throw NumericalFailure(kModule, "cross-term exponent overflows at delta=" + std::to_string(delta));
    }
    const Complex ab = std::conj(s.a()) * s.b();
    const Complex direct = std::norm(s.a()) * std::exp(Complex(envelope, s.x0() * delta)) +
                           std::norm(s.b()) * std::exp(Complex(envelope, -s.x0() * delta));
    const Complex cross = ab * std::exp(log_i + z + envelope) + std::conj(ab) * std::exp(log_i - z + envelope);
    const double n = s.normalization();
    return n * n * (direct + cross);
}

}  // namespace

OverlapShift make_shift(const CatState& state, double delta) {
    return {delta, 2.0 * state.p0() * state.eta() * state.eta() * delta / state.hbar()};
}

Complex overlap_amplitude(const CatState& state, double delta) {
    return bracket(state, delta, -0.5 * state.eta() * state.eta() * delta * delta);
}

double overlap(const CatState& state, double delta) { return std::norm(overlap_amplitude(state, delta)); }

Complex interference_factor(const CatState& state, double delta) { return bracket(state, delta, 0.0); }

double overlap_quadrature(const CatState& state, double delta, const quadrature::Options& opts) {
    const double half = state.support_half_width();
    try {
        const auto r = quadrature::integrate(
            [&](double x) { return std::norm(state.wavefunction(x)) * std::exp(Complex(0.0, x * delta)); },
            -half, half, opts);
        return std::norm(r.value);
    } catch (const NumericalFailure& e) {
        throw NumericalFailure(kModule, e.what());
    }
}

DeltaRange default_delta_range(const CatState& state) {
    const double floor = 1e-3 * state.eta();
    return {0.0, std::max(5.0 / state.eta(), 4.0 * std::numbers::pi / std::max(state.x0(), floor))};
}

OverlapProfile find_zeros(const CatState& state, DeltaRange range, std::size_t scan_points) {
    if (!(range.min >= 0.0) || !(range.max > range.min)) {
        throw InvalidArgument(kModule, "delta range must satisfy 0 <= min < max");
    }
    if (scan_points < 100) throw InvalidArgument(kModule, "scan_points must be at least 100");

    const UniformGrid scan{range.min, range.max, scan_points};
    OverlapProfile out;
    out.deltas = scan.points();
    out.values.resize(scan_points);
    std::vector<double> factor(scan_points);
    for (std::size_t i = 0; i < scan_points; ++i) {
        out.values[i] = overlap(state, out.deltas[i]);
        factor[i] = std::abs(interference_factor(state, out.deltas[i]));
    }

    const auto modulus = [&](double d) { return std::abs(interference_factor(state, d)); };
    for (std::size_t i = 1; i + 1 < scan_points; ++i) {
        if (!(factor[i] < factor[i - 1] && factor[i] <= factor[i + 1])) continue;
        const auto m = minimize::golden_section(modulus, out.deltas[i - 1], out.deltas[i + 1],
                                                1e-15 * std::max(1.0, out.deltas[i + 1]));
        if (m.value * m.value > kZeroThreshold) continue;
        if (!out.zeros.empty() && m.x - out.zeros.back() <= 1e-9 * std::max(1.0, m.x)) continue;
        out.zeros.push_back(m.x);
    }

    if (!out.zeros.empty()) out.first_zero = out.zeros.front();
    for (std::size_t i = 1; i < out.zeros.size(); ++i) {
        const double gap = out.zeros[i] - out.zeros[i - 1];
        if (!out.min_spacing || gap < *out.min_spacing) out.min_spacing = gap;
    }
    return out;
}

SensitivityReport sensitivity_report(const CatState& state) {
    const auto profile = find_zeros(state, default_delta_range(state));
    SensitivityReport report{state.inner_product(), profile.first_zero, 1.0 / state.eta(), false};
    report.sub_fourier = report.first_zero && *report.first_zero < report.fourier_scale;
    return report;
}

}  // namespace catweak
