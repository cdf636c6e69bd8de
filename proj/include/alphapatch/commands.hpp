#pragma once

#include <string>
#include <vector>

#include "alphapatch/config.hpp"
#include "alphapatch/evolve.hpp"
#include "alphapatch/singularity.hpp"

namespace ap {

// Runs the simulation and writes diagnostics.csv, snapshot_<k>.json and
// summary.json under cfg.out_dir. Returns the run result.
RunResult command_simulate(const SimulationConfig& cfg, const PatchSystem& sys);

struct VerifyLemmasParams {
    std::vector<double> m_list = {5.0};
    double beta_min = 0.02;
    double beta_max = 0.16;
    int beta_count = 8;
    int x_samples = 6;
    int quad_n = 48;
    unsigned seed = 7;
};

// Checks the closed-form strip-velocity bounds against direct quadrature on
// random evaluation points and reports sign-change thresholds per m.
// Returns the JSON report text; per-cell failures are recorded inline rather
// than aborting the sweep.
std::string command_verify_lemmas(const VerifyLemmasParams& params);

struct LemmaCheck {
    double bound = 0.0;
    double quadrature = 0.0;
    double slack = 0.0;  // >= 0 when the closed-form bound holds
};

// Compares the bad-part strip velocity against its closed-form bound for a
// single evaluation point; the strip is truncated at extent L (truncation
// only increases the slack).
LemmaCheck check_bad_bound(int axis, Vec2 x, double m, double beta, int quad_n,
                           double L = 40.0);

struct ScenarioParams {
    double epsilon = 0.05;
    double m = 5.0;
    double a = 0.5;
    double beta = 0.15;
    double smoothing = 0.2;
    int sign_samples = 10;
    int quad_n = 48;
};

struct ScenarioSignCheck {
    Vec2 point;
    double value = 0.0;
    bool ok = false;
};

struct ScenarioReport {
    std::vector<ScenarioSignCheck> u1_checks;  // front side, expect u1 < 0
    std::vector<ScenarioSignCheck> u2_checks;  // sloped side, expect u2 > 0
    bool all_signs_ok = false;
    double collision_time = 0.0;
    RunResult run;
    std::vector<double> containment_times;
    std::vector<double> containment_X;
    std::vector<ContainmentResult> containment;
};

// Builds the odd-symmetric half-plane data, verifies the t=0 velocity signs
// on the barrier trapezoid, then simulates while tracking containment in the
// shrinking trapezoid. Writes scenario artifacts under cfg.out_dir.
ScenarioReport command_scenario(const ScenarioParams& params,
                                SimulationConfig cfg);

}  // namespace ap
