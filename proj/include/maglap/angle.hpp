// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

namespace maglap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle into [0, 2π).
inline double reduce_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Distance on the circle R/2πZ, in [0, π].
inline double circle_distance(double a, double b) {
    double d = reduce_angle(a - b);
    return d > std::numbers::pi ? kTwoPi - d : d;
}

inline bool angles_equal(double a, double b, double tol = 1e-12) {
    return circle_distance(a, b) <= tol;
}

}  // namespace maglap
