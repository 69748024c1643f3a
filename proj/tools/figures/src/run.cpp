#include "catweak/figures/run.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "catweak/weak_measurement.hpp"

namespace catweak::figures {

namespace {

// Shortest round-trip representation; identical bytes for identical doubles.
std::string num(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : "null"; }

nlohmann::json opt_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

nlohmann::json grid_json(const PhaseSpaceGrid& g) {
    return {{"x_min", g.x_min}, {"x_max", g.x_max}, {"p_min", g.p_min},
            {"p_max", g.p_max}, {"nx", g.nx},       {"np", g.np}};
}

class Writer {
public:
    explicit Writer(const RunConfig& cfg) : dir_(cfg.out_dir) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec || !std::filesystem::is_directory(dir_)) {
            throw ConfigError("output directory '" + dir_.string() + "' is not writable");
        }
    }

    void write(const std::string& name, const std::string& body) {
        const auto path = dir_ / name;
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out << body;
        out.close();
        if (!out) throw ConfigError("cannot write '" + path.string() + "'");
        files_.push_back(path);
    }

    std::vector<std::filesystem::path> files() && { return std::move(files_); }

private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> files_;
};

std::string overlap_json(const OverlapProfile& p) {
    nlohmann::json j = {{"delta", p.deltas},
                        {"overlap", p.values},
                        {"zeros", p.zeros},
                        {"first_zero", opt_json(p.first_zero)},
                        {"min_spacing", opt_json(p.min_spacing)}};
    return j.dump(1) + "\n";
}

std::string wigner_json(const WignerField& f) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < f.grid.nx; ++i) {
        rows.push_back(std::vector<double>(f.values.begin() + static_cast<std::ptrdiff_t>(i * f.grid.np),
                                           f.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * f.grid.np)));
    }
    nlohmann::json j = {{"x", f.grid.x_axis().points()}, {"p", f.grid.p_axis().points()}, {"w", rows}};
    return j.dump() + "\n";
}

std::string density_json(const SampledDensity& d) {
    nlohmann::json j = {{"x", d.grid.points()}, {"density", d.values}};
    return j.dump() + "\n";
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
        j.push_back({{"x0", r.x0},
                     {"p0", r.p0},
                     {"inner_product", r.inner_product},
                     {"regime", std::string(to_string(r.regime))},
                     {"first_zero", opt_json(r.first_zero)},
                     {"sub_fourier", r.sub_fourier},
                     {"wigner_min", r.wigner_min},
                     {"weak_valid", r.weak_valid},
                     {"weak_peak", opt_json(r.weak_peak)}});
    }
    return j.dump(1) + "\n";
}

std::string ext(const RunConfig& cfg) { return cfg.format == OutputFormat::csv ? ".csv" : ".json"; }

std::optional<double> weak_peak(const CatState& state) {
    try {
        const auto sel = selection_from_branches(state.a(), state.b());
        return weak_pointer_approx(state, sel).peak();
    } catch (const RegimeViolation&) {
        return std::nullopt;
    } catch (const DivergentWeakValue&) {
        return std::nullopt;
    }
}

void describe_state(std::ostringstream& s, const CatState& state) {
    s << "inner_product I: " << num(state.inner_product()) << "\n"
      << "normalization N: " << num(state.normalization()) << "\n"
      << "regime: " << to_string(classify_regime(state.inner_product())) << "\n";
}

void emit_overlap(Writer& w, std::ostringstream& s, const RunConfig& cfg, const CatState& state,
                  const std::string& stem) {
    const auto profile = figure_overlap_profile(state);
    w.write(stem + ext(cfg), cfg.format == OutputFormat::csv ? overlap_csv(profile) : overlap_json(profile));
    const auto report = sensitivity_report(state);
    s << "overlap zeros in [0, " << num(profile.deltas.back()) << "]: " << profile.zeros.size() << "\n"
      << "first zero: " << opt(profile.first_zero) << "\n"
      << "min zero spacing: " << opt(profile.min_spacing) << "\n"
      << "sub-Fourier: " << (report.sub_fourier ? "yes" : "no") << " (fourier scale "
      << num(report.fourier_scale) << ")\n";
}

void emit_wigner(Writer& w, std::ostringstream& s, const RunConfig& cfg, const CatState& state,
                 const std::string& stem) {
    const auto field = wigner_field(state, default_phase_space_grid(state, cfg.nx, cfg.np));
    w.write(stem + ext(cfg), cfg.format == OutputFormat::csv ? wigner_csv(field) : wigner_json(field));
    w.write(stem + "_summary.json", wigner_summary_json(field).dump(1) + "\n");
    s << "wigner min: " << num(field.min_value) << " (x pi hbar: " << num(field.min_value * std::numbers::pi * state.hbar())
      << ")\n"
      << "wigner total mass: " << num(field.total_mass) << "\n";
    for (const auto& warning : field.warnings) s << "warning: " << warning << "\n";
}

void emit_density(Writer& w, std::ostringstream& s, const RunConfig& cfg, const CatState& state,
                  const std::string& stem) {
    const auto density = figure_position_density(state);
    w.write(stem + ext(cfg), cfg.format == OutputFormat::csv ? density_csv(density) : density_json(density));
    s << "position density peak: " << num(position_density_peak(state)) << "\n"
      << "weak-value pointer prediction: " << opt(weak_peak(state)) << "\n";
}

}  // namespace

std::vector<SweepRow> complementarity_sweep(std::size_t nx, std::size_t np, double hbar) {
    const double phi = std::numbers::pi / 2.02;
    std::vector<SweepRow> rows;
    for (double x0 : kSweepX0) {
        for (double p0 : kSweepP0) {
            const auto state = CatState::from_phase(phi, x0, p0, 1.0, hbar);
            const auto report = sensitivity_report(state);
            const auto field = wigner_field(state, default_phase_space_grid(state, nx, np));
            const auto peak = weak_peak(state);
            rows.push_back({x0, p0, state.inner_product(), classify_regime(state.inner_product()),
                            report.first_zero, report.sub_fourier, field.min_value, peak.has_value(), peak});
        }
    }
    return rows;
}

OverlapProfile figure_overlap_profile(const CatState& state) {
    return find_zeros(state, {0.0, 5.0 / state.eta()}, kDefaultScanPoints);
}

SampledDensity figure_position_density(const CatState& state) {
    const double half = state.x0() + 8.0 * state.eta();
    return position_density(state, grid_with_spacing(-half, half, state.eta() / 1000.0));
}

std::string overlap_csv(const OverlapProfile& profile) {
    std::string out = "delta,overlap\n";
    for (std::size_t i = 0; i < profile.deltas.size(); ++i) {
        out += num(profile.deltas[i]) + "," + num(profile.values[i]) + "\n";
    }
    return out;
}

std::string wigner_csv(const WignerField& field) {
    std::string out = "x,p,w\n";
    const auto xs = field.grid.x_axis();
    const auto ps = field.grid.p_axis();
    for (std::size_t i = 0; i < field.grid.nx; ++i) {
        const std::string x = num(xs[i]) + ",";
        for (std::size_t j = 0; j < field.grid.np; ++j) out += x + num(ps[j]) + "," + num(field.at(i, j)) + "\n";
    }
    return out;
}

std::string density_csv(const SampledDensity& density) {
    std::string out = "x,density\n";
    for (std::size_t i = 0; i < density.grid.n; ++i) {
        out += num(density.grid[i]) + "," + num(density.values[i]) + "\n";
    }
    return out;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "x0,p0,inner_product,regime,first_zero,sub_fourier,wigner_min,weak_valid,weak_peak\n";
    for (const auto& r : rows) {
        out += num(r.x0) + "," + num(r.p0) + "," + num(r.inner_product) + "," + std::string(to_string(r.regime)) +
               "," + opt(r.first_zero) + "," + (r.sub_fourier ? "true" : "false") + "," + num(r.wigner_min) + "," +
               (r.weak_valid ? "true" : "false") + "," + opt(r.weak_peak) + "\n";
    }
    return out;
}

nlohmann::json wigner_summary_json(const WignerField& field) {
    return {{"min_value", field.min_value},
            {"max_abs", field.max_abs},
            {"total_mass", field.total_mass},
            {"grid", grid_json(field.grid)},
            {"warnings", field.warnings}};
}

RunReport run(const RunConfig& cfg) {
    cfg.check();
    Writer writer(cfg);
    std::ostringstream s;
    const std::string name(to_string(cfg.scenario));
    s << "scenario: " << name << "\n";

    switch (cfg.scenario) {
        case Scenario::fig1:
        case Scenario::fig4: {
            const auto state = cfg.cat_state();
            describe_state(s, state);
            emit_overlap(writer, s, cfg, state, name);
            break;
        }
        case Scenario::fig2:
        case Scenario::fig5: {
            const auto state = cfg.cat_state();
            describe_state(s, state);
            emit_wigner(writer, s, cfg, state, name);
            break;
        }
        case Scenario::fig3:
        case Scenario::fig6: {
            const auto state = cfg.cat_state();
            describe_state(s, state);
            emit_density(writer, s, cfg, state, name);
            break;
        }
        case Scenario::custom: {
            const auto state = cfg.cat_state();
            describe_state(s, state);
            emit_overlap(writer, s, cfg, state, "custom_overlap");
            emit_wigner(writer, s, cfg, state, "custom_wigner");
            emit_density(writer, s, cfg, state, "custom_density");
            break;
        }
        case Scenario::sweep: {
            const auto rows = complementarity_sweep(cfg.nx, cfg.np, cfg.hbar);
            writer.write("sweep" + ext(cfg), cfg.format == OutputFormat::csv ? sweep_csv(rows) : sweep_json(rows));
            bool overlap_found = false;
            for (const auto& r : rows) {
                s << "x0=" << num(r.x0) << " p0=" << num(r.p0) << " I=" << num(r.inner_product)
                  << " regime=" << to_string(r.regime) << " sub_fourier=" << (r.sub_fourier ? "yes" : "no")
                  << " weak_valid=" << (r.weak_valid ? "yes" : "no") << "\n";
                overlap_found = overlap_found || (r.sub_fourier && r.weak_valid);
            }
            s << "complementarity: " << (overlap_found ? "VIOLATED" : "holds") << "\n";
            break;
        }
    }

    return {std::move(writer).files(), s.str()};
}

std::string validate(const RunConfig& cfg) {
    cfg.check();
    std::ostringstream s;
    s << "scenario: " << to_string(cfg.scenario) << "\n"
      << "hbar: " << num(cfg.hbar) << "\n"
      << "output: " << cfg.out_dir.string() << " (" << to_string(cfg.format) << ")\n";
    if (cfg.scenario == Scenario::sweep) {
        s << "sweep points: " << std::size(kSweepX0) * std::size(kSweepP0) << "\n"
          << "wigner grid: " << cfg.nx << " x " << cfg.np << "\n";
        return s.str();
    }
    const auto state = cfg.cat_state();
    s << "x0: " << num(state.x0()) << "\n"
      << "p0: " << num(state.p0()) << "\n"
      << "eta: " << num(state.eta()) << "\n";
    describe_state(s, state);
    try {
        const auto sel = selection_from_branches(state.a(), state.b());
        const Complex w = weak_value(sel);
        s << "weak value: " << num(w.real()) << " + " << num(w.imag()) << "i\n";
    } catch (const DivergentWeakValue&) {
        s << "weak value: divergent (a1 = 0)\n";
    }
    s << "weak pointer prediction: " << opt(weak_peak(state)) << "\n";

    const auto grid = default_phase_space_grid(state, cfg.nx, cfg.np);
    const double dx = grid.x_axis().spacing();
    const double dp = grid.p_axis().spacing();
    s << "wigner grid: " << cfg.nx << " x " << cfg.np << ", dx=" << num(dx) << " (limit " << num(state.eta() / 8.0)
      << "), dp=" << num(dp) << " (limit " << num(state.hbar() / (16.0 * state.eta())) << ")\n";
    if (dx > state.eta() / 8.0 || dp > state.hbar() / (16.0 * state.eta())) {
        s << "warning: wigner grid coarser than the default acceptance resolution\n";
    }
    s << "density grid spacing: " << num(state.eta() / 1000.0) << "\n";
    return s.str();
}

}  // namespace catweak::figures
