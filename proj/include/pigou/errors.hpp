#ifndef PIGOU_ERRORS_HPP
#define PIGOU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pigou {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two curves with equal slope have no unique intersection.
struct ParallelCurves : Error {
    using Error::Error;
};

/// A scenario parameter set violated one of the model constraints.
/// `predicate` names the first failed check (e.g. "b <= a").
struct ConstraintViolation : Error {
    std::string predicate;
    ConstraintViolation(std::string pred, const std::string& detail)
        : Error("constraint violated: " + pred + " (" + detail + ")"),
          predicate(std::move(pred)) {}
};

/// Calibration inputs show no efficiency improvement.
struct NoImprovement : Error {
    using Error::Error;
};

/// A comparison report carried a false verdict; indicates an upstream bug.
struct VerdictFailure : Error {
    using Error::Error;
};

/// Rejection sampling could not find any valid scenario in the region.
struct RegionInfeasible : Error {
    using Error::Error;
};

/// A parameter name outside {a, b, c, y1}.
struct UnknownParameter : Error {
    using Error::Error;
};

/// Finite-difference perturbation left the valid parameter region.
struct PerturbationInvalid : Error {
    using Error::Error;
};

/// Malformed scenario document (syntax level).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid document that violates the scenario schema.
struct SchemaError : Error {
    using Error::Error;
};

/// A scenario file supplies both an explicit c and a calibration block.
struct CalibrationConflict : Error {
    using Error::Error;
};

}  // namespace pigou

#endif
