#pragma once

#include <cmath>
#include <utility>

#include "catweak/errors.hpp"

namespace catweak::minimize {

struct Minimum {
    double x = 0.0;
    double value = 0.0;
};

/// Golden-section search for a minimum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than x_tol or after max_iter steps.
template <class F>
Minimum golden_section(const F& f, double lo, double hi, double x_tol = 1e-14, int max_iter = 200) {
    if (!(hi > lo)) throw InvalidArgument("minimize", "golden_section needs lo < hi");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && (hi - lo) > x_tol; ++i) {
        if (fc <= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc <= fd ? Minimum{c, fc} : Minimum{d, fd};
}

/// Maximum of f on [lo, hi]; thin wrapper over golden_section.
template <class F>
Minimum golden_section_max(const F& f, double lo, double hi, double x_tol = 1e-14) {
    auto m = golden_section([&](double x) { return -f(x); }, lo, hi, x_tol);
    m.value = -m.value;
    return m;
}

}  // namespace catweak::minimize
