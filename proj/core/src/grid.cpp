#include "catweak/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catweak/errors.hpp"

namespace catweak {

std::vector<double> UniformGrid::points() const {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = (*this)[i];
    return out;
}

UniformGrid grid_with_spacing(double min, double max, double max_spacing) {
    if (!(max > min) || !(max_spacing > 0.0)) {
        throw InvalidArgument("grid", "need max > min and a positive spacing");
    }
    const double needed = std::ceil((max - min) / max_spacing - 1e-9);
    if (!(needed < static_cast<double>(kMaxGridPoints))) {
        throw NumericalFailure("grid", "resolving [" + std::to_string(min) + ", " + std::to_string(max) +
                                           "] at spacing " + std::to_string(max_spacing) + " needs more than " +
                                           std::to_string(kMaxGridPoints) + " samples");
    }
    const auto intervals = static_cast<std::size_t>(needed);
    return UniformGrid{min, max, std::max<std::size_t>(intervals, 1) + 1};
}

double trapezoid(std::span<const double> values, double dx) {
    if (values.size() < 2) return 0.0;
    double sum = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i) sum += values[i];
    return sum * dx;
}

double SampledDensity::argmax() const {
    const auto it = std::max_element(values.begin(), values.end());
    return grid[static_cast<std::size_t>(it - values.begin())];
}

}  // namespace catweak
