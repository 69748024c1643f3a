#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catweak/figures/config.hpp"
#include "catweak/figures/run.hpp"
#include "doctest.h"

using namespace catweak;
using namespace catweak::figures;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const auto dir = fs::temp_directory_path() / ("catweak_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> csv_rows(const std::string& text, std::string& header) {
    std::istringstream in(text);
    std::getline(in, header);
    std::vector<std::vector<double>> rows;
    for (std::string line; std::getline(in, line);) {
        std::vector<double> row;
        std::istringstream cells(line);
        for (std::string cell; std::getline(cells, cell, ',');) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

RunConfig small(Scenario s, const fs::path& dir) {
    auto cfg = recipe_config(s);
    cfg.nx = 128;
    cfg.np = 128;
    cfg.out_dir = dir;
    return cfg;
}

}  // namespace

TEST_SUITE("figures-cli") {

TEST_CASE("scenario and format names") {
    for (auto s : {Scenario::fig1, Scenario::fig6, Scenario::sweep, Scenario::custom}) {
        CHECK(parse_scenario(to_string(s)) == s);
    }
    CHECK_FALSE(parse_scenario("fig7"));
    CHECK(parse_format("json") == OutputFormat::json);
    CHECK_FALSE(parse_format("xml"));
}

TEST_CASE("recipes") {
    const auto r1 = recipe_for(Scenario::fig1);
    CHECK(r1.x0 == 6.0);
    CHECK(r1.p0 == 0.01);
    const auto r5 = recipe_for(Scenario::fig5);
    CHECK(r5.x0 == 1e-4);
    CHECK(r5.p0 == 1e-3);
    CHECK(r5.phi == doctest::Approx(std::numbers::pi / 2.02));
    CHECK_THROWS_AS(recipe_for(Scenario::sweep), ConfigError);
}

TEST_CASE("strict config parsing") {
    const auto cfg = parse_config_text(R"({"schema_version": 1, "scenario": "custom",
        "state": {"x0": 2, "p0": 0.1, "eta": 1, "a": [0.6, 0], "b": [0, 0.8]},
        "grid": {"nx": 64, "np": 32}, "output": {"path": "out", "format": "json"}})");
    CHECK(cfg.scenario == Scenario::custom);
    REQUIRE(cfg.state);
    CHECK(cfg.state->b == Complex(0.0, 0.8));
    CHECK(cfg.nx == 64);
    CHECK(cfg.np == 32);
    CHECK(cfg.format == OutputFormat::json);
    CHECK(cfg.out_dir == fs::path("out"));

    CHECK_THROWS_AS(parse_config_text(R"({"scenario": "fig1"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 2, "scenario": "fig1"})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "scenario": "fig1", "colour": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "state": {"x0": 1, "p0": 0, "eta": 1, "phi": 0, "q": 1}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "state": {"x0": 1, "p0": 0, "eta": -1, "phi": 0}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "state": {"x0": 1, "p0": 0, "eta": 1, "phi": 0},
        "stern_gerlach": {"B": 1, "tau": 1}, "selection": {"phi": 0.3}})"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "stern_gerlach": {"B": 1, "tau": 1}})"), ConfigError);
    CHECK_THROWS_AS(parse_config_text(R"({"schema_version": 1, "scenario": "sweep", "grid": {"nx": 8}})"), ConfigError);
}

TEST_CASE("parse errors report line and column") {
    try {
        parse_config_text("{\n  \"schema_version\": 1,\n  \"scenario\": fig1\n}");
        FAIL("expected a parse error");
    } catch (const ConfigError& e) {
        const std::string what = e.what();
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("column") != std::string::npos);
    }
}

TEST_CASE("Stern-Gerlach config becomes the post-selected meter") {
    const auto cfg = parse_config_text(R"({"schema_version": 1, "scenario": "custom",
        "stern_gerlach": {"mu": 1, "B": 0.005, "tau": 0.2, "m": 1, "eta": 1},
        "selection": {"phi": 1.5552}})");
    const auto state = cfg.cat_state();
    CHECK(state.x0() == doctest::Approx(1e-4));
    CHECK(state.p0() == doctest::Approx(1e-3));
}

TEST_CASE("fig1 and fig4 overlap files") {
    const auto dir = scratch_dir("overlap");
    const auto r1 = run(small(Scenario::fig1, dir));
    REQUIRE(r1.files.size() == 1);
    std::string header;
    const auto rows = csv_rows(slurp(r1.files[0]), header);
    CHECK(header == "delta,overlap");
    CHECK(rows.front()[0] == 0.0);
    CHECK(rows.front()[1] == doctest::Approx(1.0));
    int dips = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        if (rows[i][0] <= 1.5 && rows[i][1] < rows[i - 1][1] && rows[i][1] <= rows[i + 1][1] && rows[i][1] < 1e-4) ++dips;
    }
    CHECK(dips >= 3);
    CHECK(r1.summary.find("sub-Fourier: yes") != std::string::npos);

    const auto r4 = run(small(Scenario::fig4, dir));
    CHECK(r4.summary.find("overlap zeros in [0, 5]: 0") != std::string::npos);
    CHECK(r4.summary.find("regime: weak") != std::string::npos);
}

TEST_CASE("fig2 and fig5 Wigner files") {
    const auto dir = scratch_dir("wigner");
    const auto r2 = run(small(Scenario::fig2, dir));
    REQUIRE(r2.files.size() == 2);
    std::string header;
    const auto rows = csv_rows(slurp(r2.files[0]), header);
    CHECK(header == "x,p,w");
    CHECK(rows.size() == 128 * 128);
    const auto summary = nlohmann::json::parse(slurp(r2.files[1]));
    CHECK(summary.at("min_value").get<double>() < 0.0);
    CHECK(summary.at("total_mass").get<double>() == doctest::Approx(1.0).epsilon(5e-3));

    const auto r5 = run(small(Scenario::fig5, dir));
    const auto s5 = nlohmann::json::parse(slurp(r5.files[1]));
    CHECK(s5.at("min_value").get<double>() >= -1e-6 / std::numbers::pi);
}

TEST_CASE("fig6 density file peaks at the weak-value shift") {
    const auto dir = scratch_dir("density");
    const auto r = run(small(Scenario::fig6, dir));
    std::string header;
    const auto rows = csv_rows(slurp(r.files[0]), header);
    CHECK(header == "x,density");
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i][1] > rows[best][1]) best = i;
    }
    CHECK(std::abs(rows[best][0] + 0.129) <= 0.005);
    CHECK(r.summary.find("weak-value pointer prediction: -0.12858") != std::string::npos);
}

TEST_CASE("json output format") {
    const auto dir = scratch_dir("json");
    auto cfg = small(Scenario::fig3, dir);
    cfg.format = OutputFormat::json;
    const auto r = run(cfg);
    REQUIRE(r.files.size() == 1);
    CHECK(r.files[0].extension() == ".json");
    CHECK_FALSE(nlohmann::json::parse(slurp(r.files[0])).is_null());
}

TEST_CASE("output is a pure function of the config") {
    const auto a = scratch_dir("det_a");
    const auto b = scratch_dir("det_b");
    for (auto s : {Scenario::fig1, Scenario::fig2, Scenario::fig6}) {
        const auto ra = run(small(s, a));
        const auto rb = run(small(s, b));
        CHECK(ra.summary == rb.summary);
        for (std::size_t i = 0; i < ra.files.size(); ++i) CHECK(slurp(ra.files[i]) == slurp(rb.files[i]));
    }
}

TEST_CASE("complementarity sweep") {
    const auto rows = complementarity_sweep(64, 64, 1.0);
    CHECK(rows.size() == 10);
    for (const auto& r : rows) {
        CHECK_FALSE((r.sub_fourier && r.weak_valid));
        if (r.regime == Regime::strong) CHECK(r.sub_fourier);
    }
    const auto dir = scratch_dir("sweep");
    auto cfg = small(Scenario::sweep, dir);
    cfg.nx = cfg.np = 64;
    const auto report = run(cfg);
    CHECK(report.summary.find("complementarity: holds") != std::string::npos);
    std::string header;
    std::istringstream(slurp(report.files[0])) >> header;
    CHECK(header.rfind("x0,p0,", 0) == 0);
}

TEST_CASE("validate summaries") {
    const auto v1 = validate(recipe_config(Scenario::fig1));
    CHECK(v1.find("inner_product I: 1.52269") != std::string::npos);
    CHECK(v1.find("regime: strong") != std::string::npos);
    const auto v4 = validate(recipe_config(Scenario::fig4));
    CHECK(v4.find("regime: weak") != std::string::npos);
    CHECK(v4.find("weak value: ") != std::string::npos);
}

TEST_CASE("unwritable output directory is a config error") {
    const auto dir = scratch_dir("blocked");
    const auto file = dir / "not_a_dir";
    std::ofstream(file) << "x";
    auto cfg = small(Scenario::fig1, file);
    CHECK_THROWS_AS(run(cfg), ConfigError);
}

}  // TEST_SUITE
