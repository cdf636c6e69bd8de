#pragma once

#include <stdexcept>
#include <string>

namespace ap {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define AP_DEFINE_ERROR(Name)                                    \
    struct Name : Error {                                        \
        explicit Name(const std::string& msg) : Error(msg) {}    \
    }

// curve
AP_DEFINE_ERROR(TooFewNodes);
AP_DEFINE_ERROR(DegenerateSegment);
AP_DEFINE_ERROR(OrderTooHigh);
AP_DEFINE_ERROR(DegenerateCurve);
AP_DEFINE_ERROR(NoConvergence);
AP_DEFINE_ERROR(SelfIntersection);
AP_DEFINE_ERROR(BadExponent);

// dynamics
AP_DEFINE_ERROR(ChordBelowFloor);
AP_DEFINE_ERROR(PatchOverlap);
AP_DEFINE_ERROR(SpeedDefectTooLarge);
AP_DEFINE_ERROR(PointOnBoundary);
AP_DEFINE_ERROR(InvalidSystem);

// evolve
AP_DEFINE_ERROR(VelocityBlowup);
AP_DEFINE_ERROR(StepRejected);

// diagnostics
AP_DEFINE_ERROR(NegativeInput);
AP_DEFINE_ERROR(NonpositiveInput);

// singularity
AP_DEFINE_ERROR(CoincidentPoints);
AP_DEFINE_ERROR(UnresolvedSingularity);
AP_DEFINE_ERROR(OutsideApplicabilityRegion);
AP_DEFINE_ERROR(BadParameters);
AP_DEFINE_ERROR(NoSignChange);
AP_DEFINE_ERROR(TimeOutOfRange);
AP_DEFINE_ERROR(ConstraintInfeasible);

// cli / config
AP_DEFINE_ERROR(ParseError);
AP_DEFINE_ERROR(ValidationError);

#undef AP_DEFINE_ERROR

}  // namespace ap
