#include "catweak/figures/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace catweak::figures {

namespace {

using nlohmann::json;

constexpr double kFigurePhi = std::numbers::pi / 2.02;

// Reads fields of one JSON object and remembers which were consumed so that
// anything left over is reported as an unknown field.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) throw ConfigError("field '" + label() + "' must be an object");
    }

    bool has(const std::string& key) const { return obj_.contains(key); }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        return obj_.at(key);
    }

    double number(const std::string& key) {
        if (!has(key)) throw ConfigError("missing field '" + field(key) + "'");
        const auto& v = raw(key);
        if (!v.is_number()) throw ConfigError("field '" + field(key) + "' must be a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) throw ConfigError("field '" + field(key) + "' must be finite");
        return d;
    }

    double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

    std::optional<double> optional_number(const std::string& key) {
        if (!has(key)) return std::nullopt;
        return number(key);
    }

    std::size_t count(const std::string& key, std::size_t fallback) {
        if (!has(key)) return fallback;
        const auto& v = raw(key);
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ConfigError("field '" + field(key) + "' must be a non-negative integer");
        }
        return v.get<std::size_t>();
    }

    std::string text(const std::string& key) {
        const auto& v = raw(key);
        if (!v.is_string()) throw ConfigError("field '" + field(key) + "' must be a string");
        return v.get<std::string>();
    }

    Complex complex(const std::string& key) {
        if (!has(key)) throw ConfigError("missing field '" + field(key) + "'");
        const auto& v = raw(key);
        if (v.is_number()) return {v.get<double>(), 0.0};
        if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
            return {v[0].get<double>(), v[1].get<double>()};
        }
        throw ConfigError("field '" + field(key) + "' must be a number or [re, im]");
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    void finish() const {
        for (const auto& [key, _] : obj_.items()) {
            if (!seen_.contains(key)) throw ConfigError("unknown field '" + field(key) + "'");
        }
    }

private:
    std::string label() const { return path_.empty() ? "<root>" : path_; }

    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

StateParams parse_state(ObjectReader& r) {
    StateParams s{};
    s.x0 = r.number("x0");
    s.p0 = r.number("p0");
    s.eta = r.number("eta");
    if (r.has("phi")) {
        if (r.has("a") || r.has("b")) throw ConfigError("field 'state': give either phi or a/b, not both");
        const double phi = r.number("phi");
        s.a = std::polar(1.0 / std::numbers::sqrt2, phi);
        s.b = std::conj(s.a);
    } else {
        s.a = r.complex("a");
        s.b = r.complex("b");
    }
    r.finish();
    return s;
}

SGConfig parse_sg(ObjectReader& r) {
    SGConfig cfg;
    cfg.mu = r.number_or("mu", 1.0);
    cfg.B = r.number("B");
    cfg.tau = r.number("tau");
    cfg.m = r.number_or("m", 1.0);
    cfg.eta = r.number_or("eta", 1.0);
    cfg.p_y = r.optional_number("p_y");
    cfg.d = r.optional_number("d");
    r.finish();
    return cfg;
}

SpinSelection parse_selection(ObjectReader& r) {
    try {
        if (r.has("phi")) {
            if (r.has("a1") || r.has("a2")) {
                throw ConfigError("field 'selection': give either phi or a1/a2, not both");
            }
            const double phi = r.number("phi");
            r.finish();
            return SpinSelection::from_phase(phi);
        }
        const Complex a1 = r.complex("a1");
        const Complex a2 = r.complex("a2");
        r.finish();
        return SpinSelection(a1, a2);
    } catch (const InvalidArgument& e) {
        throw ConfigError(std::string("field 'selection': ") + e.what());
    }
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

std::string_view to_string(Scenario s) {
    switch (s) {
        case Scenario::fig1: return "fig1";
        case Scenario::fig2: return "fig2";
        case Scenario::fig3: return "fig3";
        case Scenario::fig4: return "fig4";
        case Scenario::fig5: return "fig5";
        case Scenario::fig6: return "fig6";
        case Scenario::sweep: return "sweep";
        case Scenario::custom: return "custom";
    }
    return "unknown";
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "json"; }

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (auto s : {Scenario::fig1, Scenario::fig2, Scenario::fig3, Scenario::fig4, Scenario::fig5,
                   Scenario::fig6, Scenario::sweep, Scenario::custom}) {
        if (to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    return std::nullopt;
}

FigureRecipe recipe_for(Scenario s) {
    switch (s) {
        case Scenario::fig1:
        case Scenario::fig2:
        case Scenario::fig3: return {6.0, 1.0, 0.01, kFigurePhi};
        case Scenario::fig4:
        case Scenario::fig5:
        case Scenario::fig6: return {1e-4, 1.0, 1e-3, kFigurePhi};
        default: break;
    }
    throw ConfigError("scenario '" + std::string(to_string(s)) + "' has no figure recipe");
}

RunConfig recipe_config(Scenario s) {
    RunConfig cfg;
    cfg.scenario = s;
    if (s == Scenario::sweep) return cfg;
    const auto r = recipe_for(s);
    const Complex a = std::polar(1.0 / std::numbers::sqrt2, r.phi);
    cfg.state = StateParams{a, std::conj(a), r.x0, r.p0, r.eta};
    return cfg;
}

void RunConfig::check() const {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ConfigError("hbar must be positive");
    if (nx < 16 || np < 16) throw ConfigError("grid needs at least 16 samples per axis");
    if (state && stern_gerlach) throw ConfigError("give either 'state' or 'stern_gerlach', not both");
    if (stern_gerlach && !selection) throw ConfigError("'stern_gerlach' requires a 'selection'");
    if (state && selection) throw ConfigError("'selection' only applies to 'stern_gerlach' configs");
    if (scenario == Scenario::sweep) {
        if (state || stern_gerlach) throw ConfigError("'sweep' takes no state parameters");
        return;
    }
    if (!state && !stern_gerlach) throw ConfigError("config needs 'state' or 'stern_gerlach'");
    (void)cat_state();
}

CatState RunConfig::cat_state() const {
    try {
        if (stern_gerlach) {
            SGConfig sg = *stern_gerlach;
            sg.hbar = hbar;
            return post_select(sg, *selection);
        }
        if (!state) throw ConfigError("no state parameters in this config");
        return CatState(state->a, state->b, state->x0, state->p0, state->eta, hbar);
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(e.what());
    }
}

RunConfig parse_config(const nlohmann::json& doc) {
    ObjectReader root(doc, "");
    if (!root.has("schema_version")) throw ConfigError("missing field 'schema_version'");
    const auto& version = root.raw("schema_version");
    if (!version.is_number_integer() || version.get<int>() != kSchemaVersion) {
        throw ConfigError("field 'schema_version' must be " + std::to_string(kSchemaVersion));
    }

    RunConfig cfg;
    if (root.has("scenario")) {
        const auto name = root.text("scenario");
        const auto s = parse_scenario(name);
        if (!s) throw ConfigError("field 'scenario': unknown scenario '" + name + "'");
        cfg = (*s == Scenario::custom) ? RunConfig{} : recipe_config(*s);
        cfg.scenario = *s;
    }
    cfg.hbar = root.number_or("hbar", cfg.hbar);
    if (root.has("state")) {
        ObjectReader r(root.raw("state"), "state");
        cfg.state = parse_state(r);
    }
    if (root.has("stern_gerlach")) {
        ObjectReader r(root.raw("stern_gerlach"), "stern_gerlach");
        cfg.stern_gerlach = parse_sg(r);
        // A recipe's preset state gives way to an explicit Stern-Gerlach source.
        if (!root.has("state")) cfg.state.reset();
    }
    if (root.has("selection")) {
        ObjectReader r(root.raw("selection"), "selection");
        cfg.selection = parse_selection(r);
    }
    if (root.has("grid")) {
        ObjectReader r(root.raw("grid"), "grid");
        cfg.nx = r.count("nx", cfg.nx);
        cfg.np = r.count("np", cfg.np);
        r.finish();
    }
    if (root.has("output")) {
        ObjectReader r(root.raw("output"), "output");
        if (r.has("path")) cfg.out_dir = r.text("path");
        if (r.has("format")) {
            const auto name = r.text("format");
            const auto f = parse_format(name);
            if (!f) throw ConfigError("field 'output.format' must be 'csv' or 'json'");
            cfg.format = *f;
        }
        r.finish();
    }
    root.finish();
    if (cfg.stern_gerlach) {
        try {
            SGConfig sg = *cfg.stern_gerlach;
            sg.hbar = cfg.hbar;
            sg.validate();
        } catch (const InvalidArgument& e) {
            throw ConfigError(std::string("field 'stern_gerlach': ") + e.what());
        }
    }
    cfg.check();
    return cfg;
}

RunConfig parse_config_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ConfigError("parse error at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what());
    }
    return parse_config(doc);
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace catweak::figures
