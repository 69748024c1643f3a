#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "catweak/cat_state.hpp"
#include "catweak/errors.hpp"
#include "catweak/stern_gerlach.hpp"
#include "catweak/weak_measurement.hpp"

namespace catweak::figures {

inline constexpr int kSchemaVersion = 1;

/// Malformed or inconsistent run configuration. Maps to exit code 2.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("figures-cli", what) {}
};

enum class Scenario { fig1, fig2, fig3, fig4, fig5, fig6, sweep, custom };
enum class OutputFormat { csv, json };

std::string_view to_string(Scenario s);
std::string_view to_string(OutputFormat f);
std::optional<Scenario> parse_scenario(std::string_view name);
std::optional<OutputFormat> parse_format(std::string_view name);

/// Cat-state parameters as given by the user (amplitudes already resolved).
struct StateParams {
    Complex a;
    Complex b;
    double x0;
    double p0;
    double eta;
};

/// Parameter bundle for one of the six published figures.
struct FigureRecipe {
    double x0;
    double eta;
    double p0;
    double phi;
};

/// fig1-3 share the I ~ 0 bundle, fig4-6 the I ~ 1 bundle.
FigureRecipe recipe_for(Scenario s);

struct RunConfig {
    Scenario scenario = Scenario::custom;
    std::optional<StateParams> state;
    std::optional<SGConfig> stern_gerlach;
    std::optional<SpinSelection> selection;
    double hbar = 1.0;
    std::size_t nx = 512;
    std::size_t np = 512;
    std::filesystem::path out_dir = ".";
    OutputFormat format = OutputFormat::csv;

    /// Checks the exactly-one-source rule and parameter ranges. Throws ConfigError.
    void check() const;
    /// The cat state this run analyses (post-selected meter for SG configs).
    CatState cat_state() const;
};

/// Config for a figure recipe or the sweep, with default grid and output.
RunConfig recipe_config(Scenario s);

/// Strict parse of the versioned JSON schema; unknown fields are rejected.
RunConfig parse_config(const nlohmann::json& doc);
/// Reads and parses a config file; parse errors carry line and column.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config_text(std::string_view text);

}  // namespace catweak::figures
