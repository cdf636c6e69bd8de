#include "alphapatch/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "alphapatch/errors.hpp"

namespace ap {

namespace {

using nlohmann::json;

const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "geometry",        "alpha",          "n_nodes",
        "cfl",             "dt_max",         "t_end",
        "output_cadence",  "monitor_p",      "monitor_delta",
        "arc_chord_stop_factor", "min_distance_stop_factor",
        "min_distance_stop_abs", "velocity_guard", "step_reject_factor",
        "quad_n",          "reproj_tol",     "chord_floor_rel",
        "normalization",   "seed",           "out_dir",
        "snapshot_times"};
    return keys;
}

size_t edit_distance(const std::string& a, const std::string& b) {
    std::vector<size_t> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= b.size(); ++j) {
            size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

std::string nearest_key(const std::string& key) {
    std::string best;
    size_t best_dist = std::string::npos;
    for (const auto& k : known_keys()) {
        size_t d = edit_distance(key, k);
        if (d < best_dist) { best_dist = d; best = k; }
    }
    return best;
}

}  // namespace

SimulationConfig parse_config_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("config root must be a JSON object");

    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::find(known_keys().begin(), known_keys().end(), key) ==
            known_keys().end()) {
            throw ParseError("unknown config key \"" + key + "\" (did you mean \"" +
                             nearest_key(key) + "\"?)");
        }
    }

    SimulationConfig cfg;
    try {
        if (j.contains("geometry")) {
            std::string g = j["geometry"].get<std::string>();
            if (g == "full_plane") cfg.geometry = Geometry::FullPlane;
            else if (g == "half_plane") cfg.geometry = Geometry::HalfPlane;
            else throw ParseError("geometry must be \"full_plane\" or \"half_plane\"");
        }
        if (j.contains("alpha")) cfg.alpha = j["alpha"].get<double>();
        if (j.contains("n_nodes")) cfg.n_nodes = j["n_nodes"].get<int>();
        if (j.contains("cfl")) cfg.cfl = j["cfl"].get<double>();
        if (j.contains("dt_max")) cfg.dt_max = j["dt_max"].get<double>();
        if (j.contains("t_end")) cfg.t_end = j["t_end"].get<double>();
        if (j.contains("output_cadence")) cfg.output_cadence = j["output_cadence"].get<int>();
        if (j.contains("monitor_p")) cfg.monitor_p = j["monitor_p"].get<double>();
        if (j.contains("monitor_delta")) cfg.monitor_delta = j["monitor_delta"].get<double>();
        if (j.contains("arc_chord_stop_factor"))
            cfg.arc_chord_stop_factor = j["arc_chord_stop_factor"].get<double>();
        if (j.contains("min_distance_stop_factor"))
            cfg.min_distance_stop_factor = j["min_distance_stop_factor"].get<double>();
        if (j.contains("min_distance_stop_abs"))
            cfg.min_distance_stop_abs = j["min_distance_stop_abs"].get<double>();
        if (j.contains("velocity_guard")) cfg.velocity_guard = j["velocity_guard"].get<double>();
        if (j.contains("step_reject_factor"))
            cfg.step_reject_factor = j["step_reject_factor"].get<double>();
        if (j.contains("quad_n")) cfg.quad_n = j["quad_n"].get<int>();
        if (j.contains("reproj_tol")) cfg.reproj_tol = j["reproj_tol"].get<double>();
        if (j.contains("chord_floor_rel")) cfg.chord_floor_rel = j["chord_floor_rel"].get<double>();
        if (j.contains("normalization")) cfg.normalization = j["normalization"].get<double>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<unsigned>();
        if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
        if (j.contains("snapshot_times"))
            cfg.snapshot_times = j["snapshot_times"].get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("config value error: ") + e.what());
    }

    validate_config(cfg);
    return cfg;
}

SimulationConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void validate_config(const SimulationConfig& cfg) {
    std::vector<std::string> problems;
    if (!(cfg.alpha > 0.0 && cfg.alpha < 2.0))
        problems.push_back("alpha must be in (0,2), got " + std::to_string(cfg.alpha));
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
        problems.push_back("cfl must be in (0,1]");
    if (cfg.n_nodes < 16 || cfg.n_nodes % 2 != 0)
        problems.push_back("n_nodes must be even and >= 16");
    if (cfg.monitor_p != 0.0 && cfg.monitor_p <= 1.0)
        problems.push_back("monitor_p must exceed 1");
    if (cfg.t_end < 0.0) problems.push_back("t_end must be nonnegative");
    if (cfg.dt_max <= 0.0) problems.push_back("dt_max must be positive");
    if (cfg.output_cadence < 1) problems.push_back("output_cadence must be >= 1");
    if (cfg.quad_n < 4) problems.push_back("quad_n must be >= 4");
    if (!problems.empty()) {
        std::string msg = "invalid config:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw ValidationError(msg);
    }
}

}  // namespace ap
