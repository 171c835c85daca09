// SPDX-License-Identifier: Apache-2.0
//
// lisbt-sim: channel models and pilot-based parameter estimators for
// large-intelligent-surface transceivers.

#include "lisbt/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace lisbt {

namespace {

struct Entry {
    int line;
    std::string value;
};

using Section = std::map<std::string, Entry>;

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_number(const std::string& s, int line) {
    try {
        size_t used = 0;
        const double x = std::stod(s, &used);
        if (used != s.size()) fail(line, "trailing characters after number in '" + s + "'");
        return x;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + s + "'");
    }
}

long parse_int(const std::string& s, int line) {
    long x = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(line, "expected an integer, got '" + s + "'");
    return x;
}

// "<number> [unit]" split; returns (number text, unit text).
std::pair<std::string, std::string> split_unit(const std::string& s) {
    const auto pos = s.find_first_of(" \t");
    if (pos == std::string::npos) return {s, ""};
    return {trim(s.substr(0, pos)), trim(s.substr(pos + 1))};
}

double parse_length(const std::string& s, int line) {
    const auto [num, unit] = split_unit(s);
    const double x = parse_number(num, line);
    if (unit == "m" || unit.empty()) return x;
    if (unit == "cm") return x * 1e-2;
    if (unit == "mm") return x * 1e-3;
    fail(line, "unknown length unit '" + unit + "'");
}

double parse_frequency(const std::string& s, int line) {
    const auto [num, unit] = split_unit(s);
    const double x = parse_number(num, line);
    if (unit == "GHz") return x * 1e9;
    if (unit == "MHz") return x * 1e6;
    if (unit == "kHz") return x * 1e3;
    if (unit == "Hz" || unit.empty()) return x;
    fail(line, "unknown frequency unit '" + unit + "'");
}

double parse_power_watt(const std::string& s, int line) {
    const auto [num, unit] = split_unit(s);
    const double x = parse_number(num, line);
    if (unit == "dBm") return dbm_to_watt(x);
    if (unit == "W" || unit.empty()) return x;
    if (unit == "mW") return x * 1e-3;
    fail(line, "unknown power unit '" + unit + "'");
}

// Element pitch: "lambda/<n>", "<x> lambda", or a plain length.
double parse_pitch(const std::string& s, double lambda, int line) {
    if (s.rfind("lambda/", 0) == 0)
        return lambda / parse_number(s.substr(7), line);
    const auto [num, unit] = split_unit(s);
    if (unit == "lambda") return parse_number(num, line) * lambda;
    return parse_length(s, line);
}

// Element edge: "<x> dr" or a plain length.
double parse_edge(const std::string& s, double dr, int line) {
    const auto [num, unit] = split_unit(s);
    if (unit == "dr") return parse_number(num, line) * dr;
    return parse_length(s, line);
}

struct IniFile {
    Section geometry;
    Section scenario;
};

IniFile read_sections(const std::string& text) {
    IniFile ini;
    Section* current = nullptr;
    std::string current_name;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto comment = raw.find_first_of("#;");
        if (comment != std::string::npos) raw.erase(comment);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            current_name = trim(s.substr(1, s.size() - 2));
            if (current_name == "geometry")
                current = &ini.geometry;
            else if (current_name == "scenario")
                current = &ini.scenario;
            else
                fail(line, "unknown section [" + current_name + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + s + "'");
        if (!current) fail(line, "key/value outside any section");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (value.empty()) fail(line, "empty value for key '" + key + "'");
        if (!current->emplace(key, Entry{line, value}).second)
            fail(line, "duplicate key '" + key + "' in [" + current_name + "]");
    }
    return ini;
}

const Entry& require(const Section& sec, const std::string& section_name,
                     const std::string& key) {
    const auto it = sec.find(key);
    if (it == sec.end())
        throw ConfigError("missing required key '" + key + "' in [" + section_name + "]");
    return it->second;
}

void reject_unknown(const Section& sec, const std::string& section_name,
                    std::initializer_list<const char*> known) {
    for (const auto& [key, entry] : sec) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) { ok = true; break; }
        if (!ok) fail(entry.line, "unknown key '" + key + "' in [" + section_name + "]");
    }
}

} // namespace

Scenario parse_scenario_text(const std::string& text) {
    const IniFile ini = read_sections(text);

    reject_unknown(ini.geometry, "geometry",
                   {"fc", "lambda", "Mx", "My", "dr", "Le", "F", "P", "N0"});
    reject_unknown(ini.scenario, "scenario",
                   {"name", "d0", "realizations", "seed", "estimators", "nlos_paths",
                    "nlos_gap_db", "pilot_power", "pilot_budget", "delta", "k_max",
                    "sweep", "sweep_values"});

    // Wavelength: lambda wins when both are given; fc is accepted as rounded
    // (it must agree with lambda within 2%).
    double lambda = 0.0;
    const auto it_lambda = ini.geometry.find("lambda");
    const auto it_fc = ini.geometry.find("fc");
    if (it_lambda != ini.geometry.end())
        lambda = parse_length(it_lambda->second.value, it_lambda->second.line);
    if (it_fc != ini.geometry.end()) {
        const double from_fc =
            speed_of_light / parse_frequency(it_fc->second.value, it_fc->second.line);
        if (lambda == 0.0)
            lambda = from_fc;
        else if (std::abs(from_fc - lambda) > 0.02 * lambda)
            fail(it_fc->second.line, "fc and lambda disagree by more than 2%");
    }
    if (lambda <= 0.0)
        throw ConfigError("[geometry] needs 'lambda' or 'fc'");

    const Entry& e_mx = require(ini.geometry, "geometry", "Mx");
    const Entry& e_my = require(ini.geometry, "geometry", "My");
    const long mx = parse_int(e_mx.value, e_mx.line);
    const long my = parse_int(e_my.value, e_my.line);
    if (mx <= 0 || mx % 2 == 0) fail(e_mx.line, "Mx must be an odd positive integer");
    if (my <= 0 || my % 2 == 0) fail(e_my.line, "My must be an odd positive integer");

    const Entry& e_dr = require(ini.geometry, "geometry", "dr");
    const double dr = parse_pitch(e_dr.value, lambda, e_dr.line);
    const Entry& e_le = require(ini.geometry, "geometry", "Le");
    const double le = parse_edge(e_le.value, dr, e_le.line);
    double pattern = 1.0;
    if (const auto it = ini.geometry.find("F"); it != ini.geometry.end())
        pattern = parse_number(it->second.value, it->second.line);

    const Entry& e_p = require(ini.geometry, "geometry", "P");
    const Entry& e_n0 = require(ini.geometry, "geometry", "N0");
    const double data_power = parse_power_watt(e_p.value, e_p.line);
    const double noise_power = parse_power_watt(e_n0.value, e_n0.line);

    LisConfig cfg = [&] {
        try {
            return LisConfig(lambda, int(mx), int(my), dr, le, pattern);
        } catch (const std::exception& e) {
            fail(e_dr.line, std::string("invalid geometry: ") + e.what());
        }
    }();

    Scenario scn{.name = "", .cfg = cfg};
    scn.data_power = data_power;
    scn.noise_power = noise_power;

    scn.name = require(ini.scenario, "scenario", "name").value;
    {
        const Entry& e = require(ini.scenario, "scenario", "d0");
        scn.d0 = parse_length(e.value, e.line);
        if (scn.d0 <= 0.0) fail(e.line, "d0 must be positive");
    }
    {
        const Entry& e = require(ini.scenario, "scenario", "realizations");
        scn.realizations = int(parse_int(e.value, e.line));
        if (scn.realizations < 1) fail(e.line, "realizations must be >= 1");
    }
    {
        const Entry& e = require(ini.scenario, "scenario", "seed");
        scn.base_seed = std::uint64_t(parse_int(e.value, e.line));
    }
    {
        const Entry& e = require(ini.scenario, "scenario", "estimators");
        scn.estimators.clear();
        for (const auto& tok : split_list(e.value)) {
            if (tok == "proposed") scn.estimators.push_back(EstimatorKind::proposed);
            else if (tok == "grid") scn.estimators.push_back(EstimatorKind::grid);
            else if (tok == "hierarchical")
                scn.estimators.push_back(EstimatorKind::hierarchical);
            else fail(e.line, "unknown estimator '" + tok + "'");
        }
        if (scn.estimators.empty()) fail(e.line, "empty estimator roster");
    }
    if (const auto it = ini.scenario.find("nlos_paths"); it != ini.scenario.end()) {
        scn.nlos_paths = int(parse_int(it->second.value, it->second.line));
        if (scn.nlos_paths < 0) fail(it->second.line, "nlos_paths must be >= 0");
    }
    if (const auto it = ini.scenario.find("nlos_gap_db"); it != ini.scenario.end())
        scn.nlos_gap_db = parse_number(it->second.value, it->second.line);
    if (const auto it = ini.scenario.find("pilot_power"); it != ini.scenario.end())
        scn.pilot_power = parse_power_watt(it->second.value, it->second.line);
    if (const auto it = ini.scenario.find("pilot_budget"); it != ini.scenario.end()) {
        scn.pilot_budget = int(parse_int(it->second.value, it->second.line));
        if (scn.pilot_budget < 1) fail(it->second.line, "pilot_budget must be >= 1");
    }
    if (const auto it = ini.scenario.find("delta"); it != ini.scenario.end()) {
        scn.delta = parse_number(it->second.value, it->second.line);
        if (scn.delta <= 0.0) fail(it->second.line, "delta must be positive");
    }
    if (const auto it = ini.scenario.find("k_max"); it != ini.scenario.end()) {
        scn.k_max = int(parse_int(it->second.value, it->second.line));
        if (scn.k_max < 1) fail(it->second.line, "k_max must be >= 1");
    }
    {
        const Entry& e = require(ini.scenario, "scenario", "sweep");
        if (e.value == "pilot_power_dbm") scn.sweep = SweepVariable::pilot_power_dbm;
        else if (e.value == "pilot_count") scn.sweep = SweepVariable::pilot_count;
        else if (e.value == "element_count") scn.sweep = SweepVariable::element_count;
        else if (e.value == "nlos_gap_db") scn.sweep = SweepVariable::nlos_gap_db;
        else fail(e.line, "unknown sweep variable '" + e.value + "'");
    }
    {
        const Entry& e = require(ini.scenario, "scenario", "sweep_values");
        scn.sweep_values.clear();
        for (const auto& tok : split_list(e.value))
            scn.sweep_values.push_back(parse_number(tok, e.line));
        if (scn.sweep_values.empty()) fail(e.line, "empty sweep_values");
        if (scn.sweep == SweepVariable::element_count) {
            for (double m : scn.sweep_values) {
                const long mi = long(m);
                if (double(mi) != m || mi <= 0 || mi % 2 == 0)
                    fail(e.line, "element_count sweep values must be odd positive integers");
            }
        }
        if (scn.sweep == SweepVariable::pilot_count) {
            for (double c : scn.sweep_values)
                if (double(long(c)) != c || c < 1)
                    fail(e.line, "pilot_count sweep values must be positive integers");
        }
    }
    return scn;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_scenario_text(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

Scenario apply_scale(const Scenario& scn, ScalePreset scale) {
    if (scale == ScalePreset::none) return scn;
    Scenario out = scn;
    const int m = (scale == ScalePreset::desk) ? 65 : 257;
    out.realizations = (scale == ScalePreset::desk) ? 100 : 1000;
    if (scn.sweep != SweepVariable::element_count)
        out.cfg = LisConfig(scn.cfg.wavelength, m, m, scn.cfg.dr, scn.cfg.le,
                            scn.cfg.pattern_factor);
    return out;
}

} // namespace lisbt
