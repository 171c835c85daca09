// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "lisbt/config.hpp"
#include "lisbt/report.hpp"

using namespace lisbt;

namespace {

const char* kReferenceConfig = R"(# reference link, far field
[geometry]
fc = 30 GHz
lambda = 1 cm
Mx = 257
My = 257
dr = lambda/4
Le = 0.8 dr
P = 30 dBm
N0 = -115 dBm

[scenario]
name = demo
d0 = 200 m
realizations = 4
seed = 3
estimators = proposed, grid
nlos_paths = 4
nlos_gap_db = 20
pilot_power = 20 dBm
pilot_budget = 23
sweep = pilot_power_dbm
sweep_values = 0, 20
)";

std::string with_line_replaced(const std::string& text, const std::string& from,
                               const std::string& to) {
    std::string out = text;
    const auto pos = out.find(from);
    REQUIRE(pos != std::string::npos);
    out.replace(pos, from.size(), to);
    return out;
}

} // namespace

TEST_CASE("reference parameter block parses verbatim") {
    const Scenario scn = parse_scenario_text(kReferenceConfig);
    CHECK(scn.cfg.wavelength == doctest::Approx(0.01));
    CHECK(scn.cfg.mx == 257);
    CHECK(scn.cfg.my == 257);
    CHECK(scn.cfg.dr == doctest::Approx(0.0025));
    CHECK(scn.cfg.le == doctest::Approx(0.002));
    CHECK(scn.cfg.pattern_factor == 1.0);
    CHECK(scn.data_power == doctest::Approx(1.0));              // 30 dBm
    CHECK(scn.noise_power == doctest::Approx(3.16227766e-15));  // -115 dBm
    CHECK(scn.pilot_power == doctest::Approx(0.1));             // 20 dBm
    CHECK(scn.name == "demo");
    CHECK(scn.d0 == 200.0);
    CHECK(scn.realizations == 4);
    CHECK(scn.base_seed == 3);
    CHECK(scn.nlos_paths == 4);
    CHECK(scn.estimators ==
          std::vector{EstimatorKind::proposed, EstimatorKind::grid});
    CHECK(scn.sweep == SweepVariable::pilot_power_dbm);
    CHECK(scn.sweep_values == std::vector{0.0, 20.0});
}

TEST_CASE("parse errors carry line references") {
    SUBCASE("even element count") {
        const auto bad = with_line_replaced(kReferenceConfig, "Mx = 257", "Mx = 256");
        CHECK_THROWS_WITH_AS(parse_scenario_text(bad),
                             "line 5: Mx must be an odd positive integer", ConfigError);
    }
    SUBCASE("unknown key") {
        const auto bad = with_line_replaced(kReferenceConfig, "Le = 0.8 dr",
                                            "Lz = 0.8 dr");
        CHECK_THROWS_WITH_AS(parse_scenario_text(bad),
                             "line 8: unknown key 'Lz' in [geometry]", ConfigError);
    }
    SUBCASE("malformed line") {
        const auto bad = with_line_replaced(kReferenceConfig, "d0 = 200 m", "d0 200 m");
        CHECK_THROWS_WITH_AS(parse_scenario_text(bad),
                             "line 14: expected 'key = value', got 'd0 200 m'",
                             ConfigError);
    }
    SUBCASE("unknown unit") {
        const auto bad = with_line_replaced(kReferenceConfig, "d0 = 200 m", "d0 = 200 ly");
        CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);
    }
    SUBCASE("unknown estimator") {
        const auto bad = with_line_replaced(kReferenceConfig, "proposed, grid",
                                            "proposed, annealing");
        CHECK_THROWS_WITH_AS(parse_scenario_text(bad),
                             "line 17: unknown estimator 'annealing'", ConfigError);
    }
    SUBCASE("inconsistent fc and lambda") {
        const auto bad = with_line_replaced(kReferenceConfig, "fc = 30 GHz", "fc = 60 GHz");
        CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);
    }
    SUBCASE("missing required key") {
        const auto bad = with_line_replaced(kReferenceConfig, "sweep = pilot_power_dbm", "");
        CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);
    }
    SUBCASE("duplicate key") {
        const auto bad =
            with_line_replaced(kReferenceConfig, "My = 257", "My = 257\nMy = 255");
        CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);
    }
    SUBCASE("even element_count sweep values") {
        auto bad = with_line_replaced(kReferenceConfig, "sweep = pilot_power_dbm",
                                      "sweep = element_count");
        bad = with_line_replaced(bad, "sweep_values = 0, 20", "sweep_values = 64, 128");
        CHECK_THROWS_AS(parse_scenario_text(bad), ConfigError);
    }
}

TEST_CASE("unit parsing alternatives") {
    auto text = with_line_replaced(kReferenceConfig, "dr = lambda/4", "dr = 2.5 mm");
    text = with_line_replaced(text, "Le = 0.8 dr", "Le = 0.2 cm");
    text = with_line_replaced(text, "P = 30 dBm", "P = 1 W");
    text = with_line_replaced(text, "pilot_power = 20 dBm", "pilot_power = 100 mW");
    const Scenario scn = parse_scenario_text(text);
    CHECK(scn.cfg.dr == doctest::Approx(0.0025));
    CHECK(scn.cfg.le == doctest::Approx(0.002));
    CHECK(scn.data_power == 1.0);
    CHECK(scn.pilot_power == doctest::Approx(0.1));

    // lambda alone (no fc), and "0.25 lambda" pitch form
    auto text2 = with_line_replaced(kReferenceConfig, "fc = 30 GHz", "");
    text2 = with_line_replaced(text2, "dr = lambda/4", "dr = 0.25 lambda");
    CHECK(parse_scenario_text(text2).cfg.dr == doctest::Approx(0.0025));
}

TEST_CASE("scale presets") {
    const Scenario scn = parse_scenario_text(kReferenceConfig);
    const Scenario desk = apply_scale(scn, ScalePreset::desk);
    CHECK(desk.cfg.mx == 65);
    CHECK(desk.realizations == 100);
    const Scenario paper = apply_scale(scn, ScalePreset::paper);
    CHECK(paper.cfg.mx == 257);
    CHECK(paper.realizations == 1000);
    CHECK(apply_scale(scn, ScalePreset::none).cfg.mx == 257);
}

TEST_CASE("sweep run writes deterministic outputs") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "lisbt_cfg_test";
    fs::remove_all(dir);

    // desk-sized quick scenario
    std::string text(kReferenceConfig);
    text = with_line_replaced(text, "Mx = 257", "Mx = 17");
    text = with_line_replaced(text, "My = 257", "My = 17");
    text = with_line_replaced(text, "nlos_paths = 4", "nlos_paths = 2");
    const fs::path cfg_path = dir / "in" / "demo.ini";
    fs::create_directories(cfg_path.parent_path());
    std::ofstream(cfg_path) << text;

    RunConfig rc;
    rc.config_path = cfg_path.string();
    rc.out_dir = (dir / "out").string(); // does not exist yet: must be created
    CHECK(run_sweep(rc) == 0);

    const fs::path csv = dir / "out" / "demo.csv";
    const fs::path manifest = dir / "out" / "demo_manifest.json";
    REQUIRE(fs::exists(csv));
    REQUIRE(fs::exists(manifest));

    const auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
    };
    const std::string first = slurp(csv);
    CHECK(first.rfind(csv_header, 0) == 0);
    CHECK(std::count(first.begin(), first.end(), '\n') == 5); // header + 4 rows

    // second run rewrites the same bytes
    CHECK(run_sweep(rc) == 0);
    CHECK(slurp(csv) == first);

    // seed override changes the table
    RunConfig rc2 = rc;
    rc2.seed = 99;
    CHECK(run_sweep(rc2) == 0);
    CHECK(slurp(csv) != first);

    // manifest echoes the resolved scenario
    const std::string m = slurp(manifest);
    CHECK(m.find("\"seed\": 99") != std::string::npos);
    CHECK(m.find("\"Mx\": 17") != std::string::npos);

    fs::remove_all(dir);
}

TEST_CASE("missing config file") {
    CHECK_THROWS_AS(parse_scenario_file("/nonexistent/path.ini"), ConfigError);
    RunConfig rc;
    rc.config_path = "/nonexistent/path.ini";
    CHECK(run_sweep(rc) == 2);
}
