#include "alphapatch/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "alphapatch/errors.hpp"

namespace ap {

double default_monitor_p(double alpha) {
    return std::max(2.0, 1.1 / (1.0 - alpha / 2.0));
}

double default_monitor_delta(double alpha) { return alpha / 2.0 + 0.05; }

double min_patch_distance(const PatchSystem& sys, bool* infinite) {
    const int np = sys.n_patches();
    double best = std::numeric_limits<double>::infinity();
    bool inf_flag = true;
    for (int i = 0; i < np; ++i) {
        for (int j = i + 1; j < np; ++j) {
            inf_flag = false;
            for (const auto& a : sys.contours[i].points)
                for (const auto& b : sys.contours[j].points)
                    best = std::min(best, (a - b).norm());
        }
    }
    if (sys.geometry == Geometry::HalfPlane) {
        // reflected images participate in the kernels, including a patch's own
        for (int i = 0; i < np; ++i) {
            for (int j = 0; j < np; ++j) {
                inf_flag = false;
                for (const auto& a : sys.contours[i].points)
                    for (const auto& b : sys.contours[j].points)
                        best = std::min(best, (a - b.wall_reflect()).norm());
            }
        }
    }
    if (infinite) *infinite = inf_flag;
    return best;
}

double blowup_integrand(const PatchSystem& sys, double p, bool* p_warning) {
    if (p_warning) *p_warning = p <= 1.0 / (1.0 - sys.alpha / 2.0);
    double d2x_lp = 0.0;
    double supF = 0.0;
    for (const auto& c : sys.contours) {
        d2x_lp = std::max(d2x_lp, lp_seminorm(spectral_derivative(c, 2), p));
        supF = std::max(supF, arc_chord(c, sys.chord_floor_rel).sup_value);
    }
    return (d2x_lp + supF) * d2x_lp * std::pow(supF, 2.0 + sys.alpha);
}

double interpolation_check(const ScalarField& f, double sigma) {
    for (double v : f)
        if (v < 0.0) throw NegativeInput("interpolation_check needs f >= 0");
    if (sigma < 0.0 || sigma > 1.0) throw BadExponent("sigma must be in [0,1]");
    auto df = spectral_derivative(f, 1);
    double norm = lp_seminorm(std::span<const double>(df),
                              std::numeric_limits<double>::infinity());
    if (sigma > 0.0) norm += holder_seminorm(std::span<const double>(df), sigma);
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < f.size(); ++i) {
        double bound = 2.0 * std::pow(norm, 1.0 / (1.0 + sigma)) *
                       std::pow(f[i], sigma / (1.0 + sigma));
        worst = std::max(worst, std::fabs(df[i]) - bound);
    }
    return worst;
}

double quartic_quotient(const ScalarField& f, double beta) {
    for (double v : f)
        if (v <= 0.0) throw NonpositiveInput("quartic_quotient needs f > 0");
    if (beta <= 1.0 || beta > 2.0) throw BadExponent("beta must be in (1,2]");
    auto df = spectral_derivative(f, 1);
    const double h = grid_spacing(static_cast<int>(f.size()));
    double sum = 0.0;
    for (size_t i = 0; i < f.size(); ++i)
        sum += std::pow(df[i], 4) / std::pow(f[i], beta);
    return sum * h;
}

double mirror_defect(const PatchSystem& sys) {
    if (sys.n_patches() < 2) return 0.0;
    const auto& a = sys.contours[0].points;
    const auto& b = sys.contours[1].points;
    const int n = static_cast<int>(a.size());
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec2 expected = a[(n - i) % n].axis_reflect();
        worst = std::max(worst, (b[i] - expected).norm());
    }
    return worst;
}

DiagnosticsRecord collect(const PatchSystem& sys, const VelocityBundle& bundle,
                          const DiagnosticsOptions& opts) {
    DiagnosticsRecord rec;
    rec.monitored_p = opts.p > 0.0 ? opts.p : default_monitor_p(sys.alpha);
    rec.monitored_delta = opts.delta > 0.0 ? opts.delta : default_monitor_delta(sys.alpha);

    const int np = sys.n_patches();
    rec.patches.resize(np);
    for (int k = 0; k < np; ++k) {
        const Contour& c = sys.contours[k];
        auto& pd = rec.patches[k];
        pd.area = area(c);
        pd.sup_arc_chord = arc_chord(c, sys.chord_floor_rel).sup_value;
        auto dx = spectral_derivative(c, 1);
        auto d2x = spectral_derivative(c, 2);
        pd.dx_linf = lp_seminorm(dx, std::numeric_limits<double>::infinity());
        pd.d2x_l2 = lp_seminorm(d2x, 2.0);
        pd.d2x_lp = lp_seminorm(d2x, rec.monitored_p);
        if (c.n_nodes() >= 128)
            pd.d3x_l2 = lp_seminorm(spectral_derivative(c, 3), 2.0);
        pd.dx_holder = holder_seminorm(dx, std::min(rec.monitored_delta, 1.0));
        if (k < static_cast<int>(bundle.lambda.size())) {
            pd.lambda_linf = lp_seminorm(std::span<const double>(bundle.lambda[k]),
                                         std::numeric_limits<double>::infinity());
            auto dl = spectral_derivative(bundle.lambda[k], 1);
            pd.dlambda_linf = lp_seminorm(std::span<const double>(dl),
                                          std::numeric_limits<double>::infinity());
        }
        if (k > 0 && np == 2) pd.mirror_defect = mirror_defect(sys);
    }
    rec.min_distance = min_patch_distance(sys, &rec.min_distance_infinite);
    rec.criterion_integrand =
        blowup_integrand(sys, rec.monitored_p, &rec.p_below_threshold);
    return rec;
}

}  // namespace ap
