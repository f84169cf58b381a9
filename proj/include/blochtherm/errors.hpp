#pragma once

#include <stdexcept>
#include <string>

namespace blochtherm {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroBlochVector : Error { using Error::Error; };
struct NonPhysicalState : Error { using Error::Error; };
struct NonPhysicalMatrix : Error { using Error::Error; };
struct InvalidField : Error { using Error::Error; };
struct InvalidGenerator : Error { using Error::Error; };
struct OutOfPlane : Error { using Error::Error; };
struct InvalidTarget : Error { using Error::Error; };
struct NegativeBranch : Error { using Error::Error; };
struct StepTooLarge : Error { using Error::Error; };
struct DegenerateTrajectory : Error { using Error::Error; };
struct ZeroTemperature : Error { using Error::Error; };
struct InvalidSpec : Error { using Error::Error; };
struct InfeasibleGeometry : Error { using Error::Error; };
struct MissingReservoir : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

}  // namespace blochtherm
