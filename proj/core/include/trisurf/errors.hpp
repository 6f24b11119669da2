#pragma once

#include <stdexcept>
#include <string>

namespace trisurf {

/*
 * Error taxonomy shared by all modules. Every failure mode that a caller can
 * act on gets its own type; generic invariant violations use the base class.
 */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Matrix/vector shapes do not conform for the requested operation.
struct DimensionMismatch : Error {
    using Error::Error;
};

// An argument lies outside the mathematical domain of the operation.
struct DomainError : Error {
    using Error::Error;
};

// Adaptive quadrature hit its depth limit with the error estimate still
// above tolerance.
struct ToleranceNotMet : Error {
    using Error::Error;
};

// Sampled growth near a flagged endpoint exceeds the declared singular
// exponent; the integral is treated as non-integrable.
struct NonIntegrableSingularity : Error {
    using Error::Error;
};

// Sheet continuation found two cube roots equally near the previous value;
// the step must be refined before a branch can be chosen.
struct AmbiguousContinuation : Error {
    using Error::Error;
};

// A continuation seed does not satisfy the curve equation.
struct SeedOffCurve : Error {
    using Error::Error;
};

// Differential evaluation was requested at a point with w = 0.
struct BranchPointSingularity : Error {
    using Error::Error;
};

// A 2-D integrand was evaluated on the branch locus.
struct SingularPoint : Error {
    using Error::Error;
};

// A pullback-verification sample landed on the singular locus.
struct SampleOnSingularLocus : Error {
    using Error::Error;
};

// Group closure exceeded its safety bound, signalling an arithmetic error.
struct NonClosure : Error {
    using Error::Error;
};

// Numeric and symbolic period values disagree beyond tolerance, signalling a
// branch or orientation bug.
struct MismatchError : Error {
    using Error::Error;
};

// An associate-family angle with cos θ = 0 was requested; the rescaled
// period matrix is undefined there.
struct DegenerateAngle : Error {
    using Error::Error;
};

// A mesh vertex landed inside the protective disk around a branch point.
// Recoverable: the builder perturbs the vertex and records a warning.
struct BranchCollision : Error {
    using Error::Error;
};

// File input/output failure.
struct IOError : Error {
    using Error::Error;
};

// Malformed configuration or command-line input.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace trisurf
