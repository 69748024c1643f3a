#pragma once

#include <complex>

#include "catweak/grid.hpp"

namespace catweak {

using Complex = std::complex<double>;

/// Throws InvalidArgument naming `what` when z has a NaN or infinite part.
Complex require_finite(Complex z, const char* what);

/// Two-branch Gaussian cat state
///
///   Psi(x) = N (a psi_+(x) + b psi_-(x)),
///   psi_+-(x) = (2 pi eta^2)^(-1/4) exp(-(x -+ x0)^2 / (4 eta^2) +- i p0 x / hbar),
///
/// with |a|^2 + |b|^2 = 1. The value is immutable; the branch overlap I and the
/// normalization N are fixed at construction.
class CatState {
public:
    CatState(Complex a, Complex b, double x0, double p0, double eta, double hbar = 1.0);

    /// a = e^{i phi}/sqrt(2), b = e^{-i phi}/sqrt(2).
    static CatState from_phase(double phi, double x0, double p0, double eta, double hbar = 1.0);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    double x0() const { return x0_; }
    double p0() const { return p0_; }
    double eta() const { return eta_; }
    double hbar() const { return hbar_; }

    /// I = <psi_+|psi_-> = exp(-2 p0^2 eta^2 / hbar^2 - x0^2 / (2 eta^2)).
    double inner_product() const { return inner_product_; }
    /// N = 1 / sqrt(1 + 2 I Re(a* b)).
    double normalization() const { return normalization_; }

    Complex branch_plus(double x) const;
    Complex branch_minus(double x) const;
    Complex wavefunction(double x) const;

    /// Momentum-space branches (unitary transform with kernel e^{-ipx/hbar}/sqrt(2 pi hbar)).
    Complex momentum_branch_plus(double p) const;
    Complex momentum_branch_minus(double p) const;
    Complex momentum_wavefunction(double p) const;

    /// Half-width of the interval that carries all but ~e^-50 of the branch mass.
    double support_half_width() const { return x0_ + 10.0 * eta_; }

private:
    Complex a_;
    Complex b_;
    double x0_;
    double p0_;
    double eta_;
    double hbar_;
    double inner_product_;
    double normalization_;
};

double inner_product_I(const CatState& state);
double normalization(const CatState& state);
Complex wavefunction(const CatState& state, double x);

/// Default sampling for densities: +-(x0 + 8 eta) at spacing eta/20.
UniformGrid default_position_grid(const CatState& state);
/// Default momentum sampling: +-(p0 + 8 hbar/(2 eta)) at spacing hbar/(40 eta).
UniformGrid default_momentum_grid(const CatState& state);

/// |Psi(x)|^2 on the grid. The grid must span +-(x0 + 6 eta); spacing above
/// eta/10 is reported as a warning.
SampledDensity position_density(const CatState& state, const UniformGrid& grid);
/// |Phi(p)|^2 on the grid. The grid must span +-(p0 + 6 hbar/(2 eta)).
SampledDensity momentum_density(const CatState& state, const UniformGrid& grid);

/// Location of the global maximum of |Psi(x)|^2, grid scan then golden-section refinement.
double position_density_peak(const CatState& state);
/// Same for |Phi(p)|^2.
double momentum_density_peak(const CatState& state);

}  // namespace catweak
