#pragma once

#include <string>
#include <vector>

#include "alphapatch/dynamics.hpp"

namespace ap {

struct SimulationConfig {
    Geometry geometry = Geometry::FullPlane;
    double alpha = 0.5;
    int n_nodes = 256;
    double cfl = 0.5;
    double dt_max = 1e-2;
    double t_end = 0.5;
    int output_cadence = 10;  // diagnostics every this many steps
    double monitor_p = 0.0;   // 0 -> module default
    double monitor_delta = 0.0;
    // stop thresholds
    double arc_chord_stop_factor = 1e4;       // sup F > factor * initial
    double min_distance_stop_factor = 1e-3;   // delta < factor * initial
    double min_distance_stop_abs = 0.0;       // optional absolute threshold
    double velocity_guard = 1e8;
    double step_reject_factor = 10.0;         // per-step arc-chord growth limit
    int quad_n = 64;
    double reproj_tol = 1e-3;
    double chord_floor_rel = 1e-8;
    double normalization = 1.0;
    unsigned seed = 0;
    std::string out_dir = "out";
    std::vector<double> snapshot_times;
};

// Parses the JSON config file; unknown keys are rejected with a nearest-key
// suggestion, and all range violations are reported together.
SimulationConfig parse_config(const std::string& path);
SimulationConfig parse_config_text(const std::string& text);

void validate_config(const SimulationConfig& cfg);

}  // namespace ap
