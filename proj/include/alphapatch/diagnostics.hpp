#pragma once

#include <vector>

#include "alphapatch/dynamics.hpp"

namespace ap {

struct PatchDiagnostics {
    double area = 0.0;
    double sup_arc_chord = 0.0;
    double dx_linf = 0.0;        // |dx/dgamma| sup
    double d2x_l2 = 0.0;
    double d2x_lp = 0.0;         // monitored exponent p
    double d3x_l2 = 0.0;         // 0 when not resolvable (n < 128)
    double dx_holder = 0.0;      // |dx|_{C^delta} at the monitored delta
    double lambda_linf = 0.0;
    double dlambda_linf = 0.0;
    double mirror_defect = 0.0;  // vs patch 0, odd-symmetric systems only
};

struct DiagnosticsRecord {
    double time = 0.0;
    std::vector<PatchDiagnostics> patches;
    double min_distance = 0.0;   // +inf flagged below for single patch
    bool min_distance_infinite = false;
    double criterion_integrand = 0.0;
    double cumulative_criterion = 0.0;
    bool p_below_threshold = false;  // monitored p violates p > (1-alpha/2)^(-1)
    double monitored_p = 0.0;
    double monitored_delta = 0.0;
};

struct DiagnosticsOptions {
    double p = 0.0;      // 0 -> max(2, 1.1/(1-alpha/2))
    double delta = 0.0;  // 0 -> alpha/2 + 0.05
};

double default_monitor_p(double alpha);
double default_monitor_delta(double alpha);

// Discrete min over node pairs of distinct patches; half-plane geometry also
// scans each patch against every reflected patch.
double min_patch_distance(const PatchSystem& sys, bool* infinite = nullptr);

double blowup_integrand(const PatchSystem& sys, double p, bool* p_warning = nullptr);

// max over nodes of |df| - 2 ||df||_{C^sigma}^{1/(1+sigma)} f^{sigma/(1+sigma)};
// nonpositive certifies the interpolation inequality on the grid.
double interpolation_check(const ScalarField& f, double sigma);

// Trapezoidal integral of f'^4 / f^beta with spectral f'.
double quartic_quotient(const ScalarField& f, double beta);

// Mirror defect of an odd-symmetric pair: patch 1 against the axis reflection
// of patch 0 (index-reversed to keep orientation).
double mirror_defect(const PatchSystem& sys);

DiagnosticsRecord collect(const PatchSystem& sys, const VelocityBundle& bundle,
                          const DiagnosticsOptions& opts = {});

}  // namespace ap
