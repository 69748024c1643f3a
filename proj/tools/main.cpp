// catweak: figure data, complementarity sweep and config validation.
//
// Exit codes: 0 success, 2 config error, 3 numerical failure.

#include <iostream>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "catweak/figures/run.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct Flags {
    std::string out = ".";
    std::string format = "csv";
    std::optional<double> hbar;
    std::vector<std::size_t> grid;
    std::string config;
    std::string scenario;  // validate only
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--hbar", f.hbar, "Reduced Planck constant");
    cmd->add_option("--grid", f.grid, "Wigner grid samples NX NP")->expected(2);
    cmd->add_option("--config", f.config, "JSON run configuration");
}

catweak::figures::RunConfig resolve(catweak::figures::Scenario scenario, const Flags& f, bool from_config) {
    using namespace catweak::figures;
    RunConfig cfg;
    if (!f.config.empty()) {
        cfg = load_config(f.config);
        if (!from_config) {
            if (cfg.scenario != scenario && cfg.scenario != Scenario::custom) {
                throw ConfigError("config scenario '" + std::string(to_string(cfg.scenario)) +
                                  "' does not match subcommand '" + std::string(to_string(scenario)) + "'");
            }
            cfg.scenario = scenario;
        }
    } else if (from_config) {
        throw ConfigError("this subcommand needs --config <file.json>");
    } else {
        cfg = recipe_config(scenario);
    }
    if (f.out != ".") cfg.out_dir = f.out;
    if (f.format != "csv" || f.config.empty()) cfg.format = *parse_format(f.format);
    if (f.hbar) cfg.hbar = *f.hbar;
    if (f.grid.size() == 2) {
        cfg.nx = f.grid[0];
        cfg.np = f.grid[1];
    }
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace catweak::figures;

    CLI::App app{"Cat-state phase-space analysis: overlap zeros, Wigner function, weak-value pointer"};
    app.require_subcommand(1);

    Flags flags;
    std::optional<Scenario> chosen;
    bool validate_only = false;

    for (auto s : {Scenario::fig1, Scenario::fig2, Scenario::fig3, Scenario::fig4, Scenario::fig5, Scenario::fig6,
                   Scenario::sweep, Scenario::custom}) {
        const std::string name(to_string(s));
        auto* cmd = app.add_subcommand(name, s == Scenario::sweep    ? "Complementarity sweep over x0 and p0"
                                             : s == Scenario::custom ? "Run all analyses for a JSON config"
                                                                     : "Write data for figure " + name.substr(3));
        add_common(cmd, flags);
        cmd->callback([&chosen, s] { chosen = s; });
    }
    auto* validate_cmd = app.add_subcommand("validate", "Print derived quantities without heavy computation");
    add_common(validate_cmd, flags);
    validate_cmd->add_option("scenario", flags.scenario, "fig1..fig6, sweep or custom");
    validate_cmd->callback([&] { validate_only = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (validate_only) {
            Scenario scenario = Scenario::custom;
            if (!flags.scenario.empty()) {
                const auto parsed = parse_scenario(flags.scenario);
                if (!parsed) throw ConfigError("unknown scenario '" + flags.scenario + "'");
                scenario = *parsed;
            }
            const bool needs_config = flags.scenario.empty() || scenario == Scenario::custom;
            std::cout << validate(resolve(scenario, flags, needs_config));
            return 0;
        }
        const auto report = run(resolve(*chosen, flags, *chosen == Scenario::custom));
        std::cout << report.summary;
        for (const auto& file : report.files) std::cout << "wrote " << file.string() << "\n";
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const catweak::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const catweak::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory; reduce the grid or the x0/eta ratio\n";
        return kExitNumerical;
    }
}
