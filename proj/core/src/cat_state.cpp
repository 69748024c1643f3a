#include "catweak/cat_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "catweak/errors.hpp"
#include "catweak/minimize.hpp"

namespace catweak {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kDegenerateTolerance = 1e-14;

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument("cat-state-core", what);
}

bool spans(const UniformGrid& grid, double half_width) {
    const double slack = 1e-12 * std::max(1.0, half_width);
    return grid.n >= 2 && grid.min <= -half_width + slack && grid.max >= half_width - slack;
}

template <class F>
double refine_peak(const F& density, const UniformGrid& grid, std::span<const double> values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) best = i;
    }
    const double dx = grid.spacing();
    return minimize::golden_section_max(density, grid[best] - dx, grid[best] + dx, 1e-12 * dx).x;
}

}  // namespace

Complex require_finite(Complex z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InvalidArgument("cat-state-core", std::string(what) + " must be finite");
    }
    return z;
}

CatState::CatState(Complex a, Complex b, double x0, double p0, double eta, double hbar)
    : a_(require_finite(a, "a")), b_(require_finite(b, "b")), x0_(x0), p0_(p0), eta_(eta), hbar_(hbar) {
    require(std::isfinite(x0) && std::isfinite(p0) && std::isfinite(eta) && std::isfinite(hbar),
            "geometry must be finite");
    require(eta > 0.0, "eta must be positive");
    require(hbar > 0.0, "hbar must be positive");
    require(x0 >= 0.0 && p0 >= 0.0, "x0 and p0 must be non-negative");
    require(std::abs(std::norm(a) + std::norm(b) - 1.0) <= kNormTolerance,
            "amplitudes must satisfy |a|^2 + |b|^2 = 1");

    inner_product_ = std::exp(-2.0 * p0 * p0 * eta * eta / (hbar * hbar) - x0 * x0 / (2.0 * eta * eta));
    const double norm_sq_inv = 1.0 + 2.0 * inner_product_ * (std::conj(a) * b).real();
    if (!(norm_sq_inv > kDegenerateTolerance)) {
        throw DegenerateState("cat-state-core",
                              "1 + 2 I Re(a* b) = " + std::to_string(norm_sq_inv) +
                                  ": the branches cancel and the state vanishes");
    }
    normalization_ = 1.0 / std::sqrt(norm_sq_inv);
}

CatState CatState::from_phase(double phi, double x0, double p0, double eta, double hbar) {
    const Complex a = std::polar(1.0 / std::numbers::sqrt2, phi);
    return CatState(a, std::conj(a), x0, p0, eta, hbar);
}

Complex CatState::branch_plus(double x) const {
    const double c = std::pow(2.0 * std::numbers::pi * eta_ * eta_, -0.25);
    const double d = x - x0_;
    return c * std::exp(Complex(-d * d / (4.0 * eta_ * eta_), p0_ * x / hbar_));
}

Complex CatState::branch_minus(double x) const {
    const double c = std::pow(2.0 * std::numbers::pi * eta_ * eta_, -0.25);
    const double d = x + x0_;
    return c * std::exp(Complex(-d * d / (4.0 * eta_ * eta_), -p0_ * x / hbar_));
}

Complex CatState::wavefunction(double x) const {
    return normalization_ * (a_ * branch_plus(x) + b_ * branch_minus(x));
}

// phi_+-(p) = (2 eta^2 / (pi hbar^2))^(1/4) exp(-eta^2 (p -+ p0)^2 / hbar^2 -+ i (p -+ p0) x0 / hbar)
Complex CatState::momentum_branch_plus(double p) const {
    const double c = std::pow(2.0 * eta_ * eta_ / (std::numbers::pi * hbar_ * hbar_), 0.25);
    const double k = (p - p0_) / hbar_;
    return c * std::exp(Complex(-eta_ * eta_ * k * k, -k * x0_));
}

Complex CatState::momentum_branch_minus(double p) const {
    const double c = std::pow(2.0 * eta_ * eta_ / (std::numbers::pi * hbar_ * hbar_), 0.25);
    const double k = (p + p0_) / hbar_;
    return c * std::exp(Complex(-eta_ * eta_ * k * k, k * x0_));
}

Complex CatState::momentum_wavefunction(double p) const {
    return normalization_ * (a_ * momentum_branch_plus(p) + b_ * momentum_branch_minus(p));
}

double inner_product_I(const CatState& state) { return state.inner_product(); }

double normalization(const CatState& state) { return state.normalization(); }

Complex wavefunction(const CatState& state, double x) { return state.wavefunction(x); }

UniformGrid default_position_grid(const CatState& state) {
    const double half = state.x0() + 8.0 * state.eta();
    return grid_with_spacing(-half, half, state.eta() / 20.0);
}

UniformGrid default_momentum_grid(const CatState& state) {
    const double width = state.hbar() / (2.0 * state.eta());
    const double half = state.p0() + 8.0 * width;
    return grid_with_spacing(-half, half, width / 20.0);
}

SampledDensity position_density(const CatState& state, const UniformGrid& grid) {
    if (!spans(grid, state.x0() + 6.0 * state.eta())) {
        throw InvalidArgument("cat-state-core", "position grid must span +-(x0 + 6 eta)");
    }
    SampledDensity out{grid, std::vector<double>(grid.n), {}};
    for (std::size_t i = 0; i < grid.n; ++i) out.values[i] = std::norm(state.wavefunction(grid[i]));
    if (grid.spacing() > state.eta() / 10.0) {
        out.warnings.push_back("position grid spacing " + std::to_string(grid.spacing()) +
                               " exceeds eta/10");
    }
    return out;
}

SampledDensity momentum_density(const CatState& state, const UniformGrid& grid) {
    const double width = state.hbar() / (2.0 * state.eta());
    if (!spans(grid, state.p0() + 6.0 * width)) {
        throw InvalidArgument("cat-state-core", "momentum grid must span +-(p0 + 6 hbar/(2 eta))");
    }
    SampledDensity out{grid, std::vector<double>(grid.n), {}};
    for (std::size_t i = 0; i < grid.n; ++i) {
        out.values[i] = std::norm(state.momentum_wavefunction(grid[i]));
    }
    if (grid.spacing() > width / 10.0) {
        out.warnings.push_back("momentum grid spacing " + std::to_string(grid.spacing()) +
                               " exceeds hbar/(20 eta)");
    }
    return out;
}

double position_density_peak(const CatState& state) {
    const auto density = position_density(state, default_position_grid(state));
    return refine_peak([&](double x) { return std::norm(state.wavefunction(x)); }, density.grid,
                       density.values);
}

double momentum_density_peak(const CatState& state) {
    const auto density = momentum_density(state, default_momentum_grid(state));
    return refine_peak([&](double p) { return std::norm(state.momentum_wavefunction(p)); },
                       density.grid, density.values);
}

}  // namespace catweak
