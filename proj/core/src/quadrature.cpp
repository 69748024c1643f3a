#include "catweak/quadrature.hpp"

#include <numbers>

namespace catweak::quadrature {

namespace {

GaussLegendreRule build_rule() {
    GaussLegendreRule rule;
    constexpr std::size_t n = kRuleOrder;
    for (std::size_t i = 0; i < n; ++i) {
        // Tricomi initial guess for the i-th root, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double step = p1 / dp;
            x -= step;
            if (std::abs(step) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule() {
    static const GaussLegendreRule rule = build_rule();
    return rule;
}

}  // namespace catweak::quadrature
