#pragma once

#include <string_view>

#include "catweak/cat_state.hpp"

namespace catweak {

/// Pre-selected spin a1|up_z> + a2|down_z>; the measured observable is sigma_x
/// and the post-selection is <up_z|, both fixed.
class SpinSelection {
public:
    SpinSelection(Complex a1, Complex a2);

    /// (cos phi, i sin phi): the selection whose branch amplitudes are
    /// (e^{i phi}, e^{-i phi}) / sqrt(2).
    static SpinSelection from_phase(double phi);

    Complex a1() const { return a1_; }
    Complex a2() const { return a2_; }

private:
    Complex a1_;
    Complex a2_;
};

enum class Regime { weak, intermediate, strong };

std::string_view to_string(Regime r);

inline constexpr double kWeakThreshold = 0.99;
inline constexpr double kStrongThreshold = 0.01;

/// weak iff I >= 0.99, strong iff I <= 0.01.
Regime classify_regime(double inner_product);

struct WeakValue {
    Complex value;
    Regime regime;
};

/// (sigma_x)_w = <up_z|sigma_x|chi> / <up_z|chi> = a2 / a1.
/// Throws DivergentWeakValue when |a1| <= 1e-12.
Complex weak_value(const SpinSelection& sel);
WeakValue weak_value(const SpinSelection& sel, const CatState& meter);

struct BranchAmplitudes {
    Complex a;
    Complex b;
};

/// (a, b) = (a1 + a2, a1 - a2) / sqrt(2).
BranchAmplitudes branch_amplitudes(const SpinSelection& sel);
/// Inverse of branch_amplitudes: (a1, a2) = (a + b, a - b) / sqrt(2).
SpinSelection selection_from_branches(Complex a, Complex b);

/// First-order pointer state exp(-x^2/(4 eta^2) + i p0 x w / hbar) (unnormalized).
/// Its density is a Gaussian of width eta centred at -2 p0 eta^2 Im(w) / hbar.
class WeakPointer {
public:
    WeakPointer(Complex weak_value, double p0, double eta, double hbar);

    Complex shape(double x) const;
    /// |shape|^2 normalized to unit integral.
    double density(double x) const;
    double peak() const { return peak_; }
    Complex weak_value() const { return w_; }

private:
    Complex w_;
    double p0_;
    double eta_;
    double hbar_;
    double peak_;
};

inline constexpr double kMaxFirstOrderPhase = 0.5;

/// Weak-coupling approximation of the post-selected meter. Throws
/// RegimeViolation unless I >= 0.99 and |p0 * 4 eta * w / hbar| <= 0.5.
WeakPointer weak_pointer_approx(const CatState& state, const SpinSelection& sel);

/// Sup-norm distance between the normalized approximate density and the
/// exact |Psi|^2 on the default position grid.
double weak_pointer_error(const CatState& state, const SpinSelection& sel);

/// -2 p0 eta^2 Im(w) / hbar, weak regime only.
double position_peak_prediction(const CatState& state, const SpinSelection& sel);

/// p0 Re(w); requires the weak regime and |Im(w)| <= 1e-9.
double momentum_peak_prediction(const CatState& state, const SpinSelection& sel);

}  // namespace catweak
