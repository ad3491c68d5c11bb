#pragma once

#include <stdexcept>
#include <string>

namespace packetlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// an input is outside the mathematical domain of the operation
struct DomainError : Error { using Error::Error; };
// a grid does not cover enough of a packet's support
struct CoverageError : Error { using Error::Error; };
// inconsistent array/grid shapes
struct ShapeError : Error { using Error::Error; };
// wrong dispersion kind for the operation
struct KindError : Error { using Error::Error; };
// a directed flux integral vanishes at the probe
struct EmptyFluxError : Error { using Error::Error; };
// level spacings admit no common divisor at the requested tolerance
struct NoCycleError : Error { using Error::Error; };
// resonance system has no root in the scanned bracket
struct NoResonanceError : Error { using Error::Error; };
// an iterative solver failed to converge
struct ConvergenceError : Error { using Error::Error; };
// inhomogeneous linear problem is singular with incompatible source
struct SolvabilityError : Error { using Error::Error; };
// a division guard tripped (weight below floor)
struct DivisionGuardError : Error { using Error::Error; };
// a field or state fails its normalization contract
struct NormalizationError : Error { using Error::Error; };
// scenario file failed validation
struct ValidationError : Error { using Error::Error; };

}  // namespace packetlab
