#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alphapatch/config.hpp"
#include "alphapatch/diagnostics.hpp"

namespace ap {

struct SimulationState {
    double time = 0.0;
    PatchSystem system;
    long step_count = 0;
    double cumulative_criterion = 0.0;
};

enum class StopReason { TEnd, ArcChordBlowup, MinDistanceReached, VelocityBlowup,
                        StepRejectedStop };

std::string stop_reason_name(StopReason r);

struct RunResult {
    std::vector<DiagnosticsRecord> series;
    std::vector<std::pair<double, PatchSystem>> snapshots;
    SimulationState final_state;
    StopReason stop_reason = StopReason::TEnd;
};

double choose_dt(const PatchSystem& sys, const VelocityBundle& bundle, double cfl,
                 double dt_max, double velocity_guard = 1e8);

// Classical RK4 on all node positions; reparametrizes afterwards when the
// speed defect exceeds cfg.reproj_tol and advances the blow-up criterion by
// a left-endpoint rule.
SimulationState step_rk4(const SimulationState& state, double dt,
                         const SimulationConfig& cfg);

PatchSystem enforce_parametrization(const PatchSystem& sys, double tol);

RunResult run(const SimulationConfig& cfg, const PatchSystem& initial);

}  // namespace ap
