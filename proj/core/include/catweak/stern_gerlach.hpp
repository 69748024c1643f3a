#pragma once

#include <array>
#include <optional>

#include "catweak/cat_state.hpp"
#include "catweak/weak_measurement.hpp"

namespace catweak {

/// Weak-coupling Stern-Gerlach stage with the idealized field B = (B x, 0, 0).
/// Units default to hbar = m = mu = 1. p_y and d are optional; when both are
/// given they must satisfy d = p_y tau / m.
struct SGConfig {
    double mu = 1.0;
    double B = 0.0;
    double tau = 1.0;
    double m = 1.0;
    double eta = 1.0;
    double hbar = 1.0;
    std::optional<double> p_y;
    std::optional<double> d;

    void validate() const;
};

/// x-axis reduction of the evolved spinor components after the magnet.
/// Spreading is neglected, so both packets keep width eta.
struct EvolvedPacketPair {
    double drift_momentum;  ///< p'_x = mu B tau
    double center_offset;   ///< p'_x tau / (2 m)
    double phase_delta;     ///< Delta = p'_x^2 tau / (6 m hbar)
    double eta;
    double hbar;

    /// (2 pi eta^2)^(-1/4) exp(-(x -+ offset)^2/(4 eta^2) +- i p'_x x / hbar - i Delta)
    Complex plus(double x) const;
    Complex minus(double x) const;
};

EvolvedPacketPair evolve_packets(const SGConfig& cfg);

/// exp(-mu^2 B^2 tau^4 / (8 m^2 eta^2) - 2 mu^2 B^2 tau^2 eta^2 / hbar^2).
double sg_inner_product(const SGConfig& cfg);

/// Position density with the spin traced out: |a|^2 |psi_+|^2 + |b|^2 |psi_-|^2.
double entangled_state_density(const SGConfig& cfg, const SpinSelection& sel, double x);

struct ReducedSpinDensity {
    /// Row-major 2x2: {rho00, rho01, rho10, rho11}.
    std::array<Complex, 4> rho;

    Complex trace() const { return rho[0] + rho[3]; }
    double purity() const;
    /// Largest |rho_ij - conj(rho_ji)|.
    double hermiticity_error() const;
    /// Eigenvalues of the Hermitian part, ascending.
    std::array<double, 2> eigenvalues() const;
};

/// [[|a1|^2, a1 a2* I], [a1* a2 I*, |a2|^2]] with I = sg_inner_product(cfg).
ReducedSpinDensity reduced_density_matrix(const SGConfig& cfg, const SpinSelection& sel);

struct CatGeometry {
    double x0;
    double p0;
};

/// x0 = p'_x tau / (2 m), p0 = p'_x.
CatGeometry to_cat_state(const SGConfig& cfg);

/// Solves tau = 2 m x0 / p0 and B = p0 / (mu tau) for the given mu, m, eta.
/// (0, 0) maps to B = 0, tau = 1. Throws InvalidArgument when exactly one of
/// x0, p0 vanishes (no finite positive tau exists).
SGConfig from_cat_state(CatGeometry geometry, double mu = 1.0, double m = 1.0, double eta = 1.0,
                        double hbar = 1.0);

/// Meter state after <up_z| post-selection with the other coordinates traced
/// out: the cat state with amplitudes branch_amplitudes(sel) and geometry
/// to_cat_state(cfg). Throws DegenerateState if the branches cancel.
CatState post_select(const SGConfig& cfg, const SpinSelection& sel);

}  // namespace catweak
