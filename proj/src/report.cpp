// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

namespace lisbt {

std::string format_g9(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string to_csv(const std::vector<MetricRow>& rows) {
    std::string out = csv_header;
    out += '\n';
    for (const auto& r : rows) {
        out += format_g9(r.sweep_value);
        out += ',';
        out += r.estimator;
        out += ',';
        out += format_g9(r.mean_rate);
        out += ',';
        out += format_g9(r.mse_alpha1);
        out += ',';
        out += format_g9(r.mse_alpha2);
        out += ',';
        out += format_g9(r.mean_pilots);
        out += ',';
        out += std::to_string(r.realizations);
        out += ',';
        out += std::to_string(r.exclusions);
        out += '\n';
    }
    return out;
}

namespace {

const char* scale_name(ScalePreset s) {
    switch (s) {
    case ScalePreset::none: return "none";
    case ScalePreset::desk: return "desk";
    case ScalePreset::paper: return "paper";
    }
    return "?";
}

} // namespace

std::string scenario_manifest(const Scenario& scn, ScalePreset scale) {
    nlohmann::json j;
    j["version"] = version;
    j["scale"] = scale_name(scale);
    j["scenario"]["name"] = scn.name;
    j["scenario"]["seed"] = scn.base_seed;
    j["scenario"]["realizations"] = scn.realizations;
    j["scenario"]["d0_m"] = scn.d0;
    j["scenario"]["nlos_paths"] = scn.nlos_paths;
    j["scenario"]["nlos_gap_db"] = scn.nlos_gap_db;
    j["scenario"]["noise_power_w"] = scn.noise_power;
    j["scenario"]["data_power_w"] = scn.data_power;
    j["scenario"]["pilot_power_w"] = scn.pilot_power;
    j["scenario"]["pilot_budget"] = scn.pilot_budget;
    j["scenario"]["delta"] = scn.delta;
    j["scenario"]["k_max"] = scn.k_max;
    j["scenario"]["sweep"] = to_string(scn.sweep);
    j["scenario"]["sweep_values"] = scn.sweep_values;
    {
        std::vector<std::string> names;
        for (auto e : scn.estimators) names.push_back(to_string(e));
        j["scenario"]["estimators"] = names;
    }
    j["geometry"]["wavelength_m"] = scn.cfg.wavelength;
    j["geometry"]["Mx"] = scn.cfg.mx;
    j["geometry"]["My"] = scn.cfg.my;
    j["geometry"]["dr_m"] = scn.cfg.dr;
    j["geometry"]["Le_m"] = scn.cfg.le;
    j["geometry"]["pattern_factor"] = scn.cfg.pattern_factor;
    return j.dump(2) + "\n";
}

int run_sweep(const RunConfig& rc) {
    std::optional<Scenario> parsed;
    try {
        parsed = parse_scenario_file(rc.config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    Scenario scn = apply_scale(*parsed, rc.scale);
    if (rc.seed) scn.base_seed = *rc.seed;
    if (rc.realizations) scn.realizations = *rc.realizations;

    std::vector<MetricRow> rows;
    try {
        rows = run_scenario(scn);
    } catch (const std::exception& e) {
        std::cerr << "run failed: " << e.what() << "\n";
        return 1;
    }

    namespace fs = std::filesystem;
    try {
        fs::create_directories(rc.out_dir);
        const fs::path csv_path = fs::path(rc.out_dir) / (scn.name + ".csv");
        const fs::path manifest_path =
            fs::path(rc.out_dir) / (scn.name + "_manifest.json");
        {
            std::ofstream out(csv_path, std::ios::trunc | std::ios::binary);
            if (!out) throw std::runtime_error("cannot write " + csv_path.string());
            out << to_csv(rows);
        }
        {
            std::ofstream out(manifest_path, std::ios::trunc | std::ios::binary);
            if (!out)
                throw std::runtime_error("cannot write " + manifest_path.string());
            out << scenario_manifest(scn, rc.scale);
        }
        std::cout << "wrote " << csv_path.string() << " (" << rows.size() << " rows)\n";
    } catch (const std::exception& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace lisbt
