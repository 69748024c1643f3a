#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "catweak/errors.hpp"

namespace catweak::quadrature {

inline constexpr std::size_t kRuleOrder = 20;

/// Abscissae on [-1, 1] and weights of the 20-point Gauss-Legendre rule,
/// computed once by Newton iteration on P_20.
struct GaussLegendreRule {
    std::array<double, kRuleOrder> nodes{};
    std::array<double, kRuleOrder> weights{};
};

const GaussLegendreRule& gauss_legendre_rule();

struct Options {
    double abs_tol = 1e-12;
    double rel_tol = 0.0;
    /// Smallest subinterval, relative to the full interval, before giving up.
    double min_width_fraction = 1e-12;
    std::size_t max_evaluations = 4'000'000;
};

template <class T>
struct Result {
    T value{};
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

template <class F>
auto apply_rule(const F& f, double a, double b) {
    using T = std::invoke_result_t<const F&, double>;
    const auto& rule = gauss_legendre_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    T sum{};
    for (std::size_t k = 0; k < kRuleOrder; ++k) {
        sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    return T(sum * half);
}

template <class T>
double magnitude(const T& v) {
    return std::abs(v);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre quadrature of f over [a, b].
///
/// Each panel is accepted once the 20-point rule on the panel and the sum of
/// the rule on its two halves agree to within the panel's share of the
/// tolerance. The tolerance is max(abs_tol, rel_tol * |estimate|) where the
/// estimate comes from a 16-panel first pass. Works for real and complex
/// integrands. Throws NumericalFailure instead of returning a truncated sum.
template <class F>
auto integrate(const F& f, double a, double b, const Options& opts = {})
    -> Result<std::invoke_result_t<const F&, double>> {
    using T = std::invoke_result_t<const F&, double>;
    Result<T> out;
    if (!(b > a)) {
        if (a == b) return out;
        throw InvalidArgument("quadrature", "integration bounds must satisfy a <= b");
    }

    constexpr int kInitialPanels = 16;
    const double width = b - a;
    struct Panel {
        double lo, hi;
        T whole;
    };
    std::vector<Panel> stack;
    stack.reserve(256);
    T first_pass{};
    for (int i = kInitialPanels - 1; i >= 0; --i) {
        const double lo = a + width * i / kInitialPanels;
        const double hi = (i == kInitialPanels - 1) ? b : a + width * (i + 1) / kInitialPanels;
        T w = detail::apply_rule(f, lo, hi);
        first_pass += w;
        stack.push_back({lo, hi, w});
    }
    out.evaluations = kInitialPanels * kRuleOrder;

    const double tol = std::max(opts.abs_tol, opts.rel_tol * detail::magnitude(first_pass));
    const double min_width = width * opts.min_width_fraction;

    T total{};
    double error = 0.0;
    while (!stack.empty()) {
        const Panel panel = stack.back();
        stack.pop_back();
        const double mid = 0.5 * (panel.lo + panel.hi);
        const T left = detail::apply_rule(f, panel.lo, mid);
        const T right = detail::apply_rule(f, mid, panel.hi);
        out.evaluations += 2 * kRuleOrder;
        const T refined = left + right;
        const double diff = detail::magnitude(refined - panel.whole);
        const double share = tol * (panel.hi - panel.lo) / width;
        // Roundoff floor: differences at the level of the summed magnitude times
        // a few ulps cannot be reduced by further splitting.
        const double roundoff = 64.0 * 2.220446049250313e-16 *
                                (detail::magnitude(left) + detail::magnitude(right));
        if (diff <= share || diff <= roundoff) {
            total += refined;
            error += diff;
            continue;
        }
        if (panel.hi - panel.lo < min_width || out.evaluations > opts.max_evaluations) {
            throw NumericalFailure("quadrature",
                                   "tolerance " + std::to_string(tol) +
                                       " not met near x=" + std::to_string(mid));
        }
        stack.push_back({mid, panel.hi, right});
        stack.push_back({panel.lo, mid, left});
    }
    out.value = total;
    out.error_estimate = error;
    return out;
}

}  // namespace catweak::quadrature
