#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "catweak/displacement.hpp"
#include "catweak/figures/config.hpp"
#include "catweak/wigner.hpp"

namespace catweak::figures {

struct RunReport {
    std::vector<std::filesystem::path> files;
    std::string summary;
};

/// One row of the complementarity table.
struct SweepRow {
    double x0;
    double p0;
    double inner_product;
    Regime regime;
    std::optional<double> first_zero;
    bool sub_fourier;
    double wigner_min;
    bool weak_valid;
    std::optional<double> weak_peak;
};

inline constexpr double kSweepX0[] = {1e-4, 0.01, 0.1, 1.0, 6.0};
inline constexpr double kSweepP0[] = {1e-3, 0.01};

/// phi = pi/2.02, eta = 1, every (x0, p0) pair from kSweepX0 x kSweepP0.
std::vector<SweepRow> complementarity_sweep(std::size_t nx, std::size_t np, double hbar);

/// Overlap profile written for fig1/fig4: delta in [0, 5/eta].
OverlapProfile figure_overlap_profile(const CatState& state);
/// Position density written for fig3/fig6: +-(x0 + 8 eta) at spacing eta/1000.
SampledDensity figure_position_density(const CatState& state);

std::string overlap_csv(const OverlapProfile& profile);
std::string wigner_csv(const WignerField& field);
std::string density_csv(const SampledDensity& density);
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json wigner_summary_json(const WignerField& field);

/// Runs the scenario and writes its data files into cfg.out_dir. Output is a
/// pure function of the config. Throws ConfigError for unusable configs or
/// output locations and the library's NumericalFailure for failed numerics.
RunReport run(const RunConfig& cfg);

/// Derived quantities (I, N, regime, weak value, grid resolutions) without
/// running the heavy computations.
std::string validate(const RunConfig& cfg);

}  // namespace catweak::figures
