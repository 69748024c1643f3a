#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catweak/cat_state.hpp"
#include "catweak/quadrature.hpp"

namespace catweak {

/// Rectangular (x, p) sampling, endpoints included.
struct PhaseSpaceGrid {
    double x_min = 0.0;
    double x_max = 0.0;
    double p_min = 0.0;
    double p_max = 0.0;
    std::size_t nx = 0;
    std::size_t np = 0;

    UniformGrid x_axis() const { return {x_min, x_max, nx}; }
    UniformGrid p_axis() const { return {p_min, p_max, np}; }
    /// Throws InvalidArgument unless the bounds are ordered and nx, np >= 16.
    void validate() const;
};

inline constexpr std::size_t kDefaultWignerSamples = 512;

/// +-(x0 + 6 eta) by +-(p0 + 6 hbar/(2 eta)).
PhaseSpaceGrid default_phase_space_grid(const CatState& state, std::size_t nx = kDefaultWignerSamples,
                                        std::size_t np = kDefaultWignerSamples);

/// Closed-form Wigner function, normalized so that its integral over the plane is 1:
///
///   W = N^2/(pi hbar) [ |a|^2 G(x - x0, p - p0) + |b|^2 G(x + x0, p + p0)
///                       + 2 G(x, p) (Re(a* b) cos t - Im(a* b) sin t) ],
///   G(u, v) = exp(-u^2/(2 eta^2) - 2 eta^2 v^2 / hbar^2),  t = 2 (p x0 - p0 x) / hbar.
///
/// The fringe term sits at the origin with the full Gaussian height; the branch
/// overlap I only appears once it is integrated over p.
double wigner_closed(const CatState& state, double x, double p);

/// (1/(pi hbar)) int Psi*(x+y) Psi(x-y) e^{2 i p y / hbar} dy by adaptive quadrature.
/// Throws NumericalFailure if the imaginary residue exceeds 1e-10.
double wigner_quadrature(const CatState& state, double x, double p, const quadrature::Options& opts = {});

struct WignerField {
    PhaseSpaceGrid grid;
    /// Row-major, values[ix * np + ip].
    std::vector<double> values;
    double min_value = 0.0;
    double max_abs = 0.0;
    double total_mass = 0.0;
    std::vector<std::string> warnings;

    double at(std::size_t ix, std::size_t ip) const { return values[ix * grid.np + ip]; }
};

/// Dense evaluation of wigner_closed. Warns when the spacing is coarser than
/// eta/8 in x or hbar/(16 eta) in p.
WignerField wigner_field(const CatState& state, const PhaseSpaceGrid& grid);

struct Marginals {
    SampledDensity position;  ///< int W dp, sampled on the x axis
    SampledDensity momentum;  ///< int W dx, sampled on the p axis
};

/// Trapezoid-rule projections of the field onto each axis.
Marginals marginals(const WignerField& field);

}  // namespace catweak
