#pragma once

#include <stdexcept>
#include <string>

namespace zs {

// Every recoverable numerical failure is a typed exception so the CLI can
// map it to a machine-readable error report.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct BoundStateOnBoundary : Error { using Error::Error; };
struct DegenerateBoundState : Error { using Error::Error; };
struct NonSimpleZero : Error { using Error::Error; };
struct IllConditionedBoundState : Error { using Error::Error; };
struct FlipAngleOverflow : Error { using Error::Error; };
struct FullInversionUnrepresentable : Error { using Error::Error; };
struct RemezDiverged : Error { using Error::Error; };
struct BoundStateRangeOverflow : Error { using Error::Error; };
struct DistBreakdown : Error { using Error::Error; };
struct TruncationInsufficient : Error { using Error::Error; };
struct FrtBreakdown : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct FactorizationSingular : Error { using Error::Error; };
struct InfeasibleHalfPulse : Error { using Error::Error; };
struct EnergyNotInUpperHalfPlane : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace zs
