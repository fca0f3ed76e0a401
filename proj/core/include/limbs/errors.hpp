#pragma once

#include <stdexcept>
#include <string>

namespace limbs {

// Domain errors carry the failing operation's name in what().
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error { using Error::Error; };
struct PreperiodicAngle : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };
struct NotM2Combinatorics : Error { using Error::Error; };
struct OverlappingOrbits : Error { using Error::Error; };
struct ZeroAngle : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct NonRepelling : Error { using Error::Error; };
struct NotInBasin : Error { using Error::Error; };
struct ContinuationFailure : Error { using Error::Error; };
struct WrongLimb : Error { using Error::Error; };
struct RayFailure : Error { using Error::Error; };
struct NotInLimb : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace limbs
