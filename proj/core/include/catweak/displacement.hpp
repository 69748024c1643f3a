#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catweak/cat_state.hpp"
#include "catweak/quadrature.hpp"

namespace catweak {

/// Phase-shift parameter delta together with z = 2 p0 eta^2 delta / hbar of
/// the state it was computed for.
struct OverlapShift {
    double delta;
    double z;
};

OverlapShift make_shift(const CatState& state, double delta);

/// Characteristic amplitude <Psi| e^{i x delta} |Psi>, closed form:
///
///   N^2 e^{-eta^2 delta^2/2} [ |a|^2 e^{i x0 delta} + |b|^2 e^{-i x0 delta}
///                             + I (a* b e^{z} + a b* e^{-z}) ].
///
/// Its modulus squared is the overlap between the shifted and original states.
Complex overlap_amplitude(const CatState& state, double delta);

/// |overlap_amplitude|^2.
double overlap(const CatState& state, double delta);

/// overlap_amplitude with the Gaussian envelope e^{-eta^2 delta^2/2} removed.
/// Vanishes exactly where the overlap does and stays O(1) in the tail.
Complex interference_factor(const CatState& state, double delta);

/// Independent route: |int |Psi(x)|^2 e^{i x delta} dx|^2 by adaptive quadrature.
double overlap_quadrature(const CatState& state, double delta, const quadrature::Options& opts = {});

struct DeltaRange {
    double min;
    double max;
};

struct OverlapProfile {
    std::vector<double> deltas;
    std::vector<double> values;
    std::vector<double> zeros;
    std::optional<double> first_zero;
    std::optional<double> min_spacing;
};

inline constexpr std::size_t kDefaultScanPoints = 2000;
inline constexpr double kZeroThreshold = 1e-10;

/// [0, max(5/eta, 4 pi / max(x0, 1e-3 eta))].
DeltaRange default_delta_range(const CatState& state);

/// Samples the overlap on a uniform scan and locates its zeros.
///
/// The overlap is a squared modulus and touches zero without crossing, so zeros
/// are found as local minima of |interference_factor| on the scan, refined by
/// golden-section search, and kept when |factor|^2 <= kZeroThreshold. An empty
/// zero list is a valid result (the I ~ 1 regime).
OverlapProfile find_zeros(const CatState& state, DeltaRange range,
                          std::size_t scan_points = kDefaultScanPoints);

struct SensitivityReport {
    double inner_product;
    std::optional<double> first_zero;
    double fourier_scale;
    bool sub_fourier;
};

/// sub_fourier holds when a zero exists below the single-packet scale 1/eta.
SensitivityReport sensitivity_report(const CatState& state);

}  // namespace catweak
