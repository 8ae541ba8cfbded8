#pragma once

#include <numbers>

namespace omit {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// CODATA 2018 reduced Planck constant, J*s
inline constexpr double kHbar = 1.054571817e-34;

// exact by SI definition, m/s
inline constexpr double kSpeedOfLight = 299792458.0;

// Denominators smaller than this trigger the analytic-limit branch of the
// response (the transparency point is an operating condition, not an error).
inline constexpr double kPoleEps = 1e-300;

}  // namespace omit
