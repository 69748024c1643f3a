#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace catweak {

/// n equally spaced samples covering [min, max] inclusive.
struct UniformGrid {
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;

    double spacing() const { return (max - min) / static_cast<double>(n - 1); }
    double operator[](std::size_t i) const {
        return i + 1 == n ? max : min + spacing() * static_cast<double>(i);
    }
    std::vector<double> points() const;
};

/// Largest sample count grid_with_spacing will produce.
inline constexpr std::size_t kMaxGridPoints = 10'000'000;

/// Builds a grid on [min, max] whose spacing does not exceed max_spacing.
/// Throws NumericalFailure if that needs more than kMaxGridPoints samples.
UniformGrid grid_with_spacing(double min, double max, double max_spacing);

/// Composite trapezoid rule over uniformly spaced samples.
double trapezoid(std::span<const double> values, double dx);

/// Samples of a 1-D density on a uniform grid plus any resolution warnings.
struct SampledDensity {
    UniformGrid grid;
    std::vector<double> values;
    std::vector<std::string> warnings;

    double integral() const { return trapezoid(values, grid.spacing()); }
    /// Grid point holding the largest sample.
    double argmax() const;
};

}  // namespace catweak
