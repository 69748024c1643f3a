#include "catweak/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "catweak/errors.hpp"

namespace catweak {

namespace {

constexpr const char* kModule = "wigner-phase-space";
constexpr double kImaginaryResidue = 1e-10;

}  // namespace

void PhaseSpaceGrid::validate() const {
    if (!(x_max > x_min) || !(p_max > p_min)) {
        throw InvalidArgument(kModule, "grid bounds must satisfy x_max > x_min and p_max > p_min");
    }
    if (nx < 16 || np < 16) throw InvalidArgument(kModule, "grid needs at least 16 samples per axis");
}

PhaseSpaceGrid default_phase_space_grid(const CatState& state, std::size_t nx, std::size_t np) {
    const double xh = state.x0() + 6.0 * state.eta();
    const double ph = state.p0() + 6.0 * state.hbar() / (2.0 * state.eta());
    return {-xh, xh, -ph, ph, nx, np};
}

double wigner_closed(const CatState& s, double x, double p) {
    const double eta2 = s.eta() * s.eta();
    const double hbar = s.hbar();
    const auto gauss = [&](double u, double v) {
        return std::exp(-u * u / (2.0 * eta2) - 2.0 * eta2 * v * v / (hbar * hbar));
    };
    const Complex ab = std::conj(s.a()) * s.b();
    const double t = 2.0 * (p * s.x0() - s.p0() * x) / hbar;
    const double fringe = 2.0 * gauss(x, p) * (ab.real() * std::cos(t) - ab.imag() * std::sin(t));
    const double n = s.normalization();
    return n * n / (std::numbers::pi * hbar) *
           (std::norm(s.a()) * gauss(x - s.x0(), p - s.p0()) +
            std::norm(s.b()) * gauss(x + s.x0(), p + s.p0()) + fringe);
}

double wigner_quadrature(const CatState& s, double x, double p, const quadrature::Options& opts) {
    const double half = s.support_half_width() + std::abs(x);
    quadrature::Result<Complex> r;
    try {
        r = quadrature::integrate(
            [&](double y) {
                return std::conj(s.wavefunction(x + y)) * s.wavefunction(x - y) *
                       std::exp(Complex(0.0, 2.0 * p * y / s.hbar()));
            },
            -half, half, opts);
    } catch (const NumericalFailure& e) {
        throw NumericalFailure(kModule, e.what());
    }
    const Complex w = r.value / (std::numbers::pi * s.hbar());
    if (std::abs(w.imag()) > kImaginaryResidue) {
        throw NumericalFailure(kModule, "imaginary residue " + std::to_string(w.imag()) +
                                            " in Wigner transform");
    }
    return w.real();
}

WignerField wigner_field(const CatState& state, const PhaseSpaceGrid& grid) {
    grid.validate();
    WignerField field;
    field.grid = grid;
    field.values.resize(grid.nx * grid.np);
    const auto xs = grid.x_axis();
    const auto ps = grid.p_axis();
    for (std::size_t i = 0; i < grid.nx; ++i) {
        const double x = xs[i];
        for (std::size_t j = 0; j < grid.np; ++j) field.values[i * grid.np + j] = wigner_closed(state, x, ps[j]);
    }

    const auto [lo, hi] = std::minmax_element(field.values.begin(), field.values.end());
    field.min_value = *lo;
    field.max_abs = std::max(std::abs(*lo), std::abs(*hi));

    // Trapezoid in p for each row, then in x.
    std::vector<double> rows(grid.nx);
    for (std::size_t i = 0; i < grid.nx; ++i) {
        rows[i] = trapezoid(std::span(field.values).subspan(i * grid.np, grid.np), ps.spacing());
    }
    field.total_mass = trapezoid(rows, xs.spacing());

    if (xs.spacing() > state.eta() / 8.0) {
        field.warnings.push_back("x spacing " + std::to_string(xs.spacing()) + " exceeds eta/8");
    }
    if (ps.spacing() > state.hbar() / (16.0 * state.eta())) {
        field.warnings.push_back("p spacing " + std::to_string(ps.spacing()) + " exceeds hbar/(16 eta)");
    }
    return field;
}

Marginals marginals(const WignerField& field) {
    const auto& g = field.grid;
    Marginals m{{g.x_axis(), std::vector<double>(g.nx), {}}, {g.p_axis(), std::vector<double>(g.np), {}}};
    std::vector<double> column(g.nx);
    for (std::size_t i = 0; i < g.nx; ++i) {
        m.position.values[i] =
            trapezoid(std::span(field.values).subspan(i * g.np, g.np), g.p_axis().spacing());
    }
    for (std::size_t j = 0; j < g.np; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) column[i] = field.at(i, j);
        m.momentum.values[j] = trapezoid(column, g.x_axis().spacing());
    }
    return m;
}

}  // namespace catweak
