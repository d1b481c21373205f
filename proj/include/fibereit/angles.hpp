#pragma once

#include <cmath>
#include <numbers>

namespace fibereit {

inline constexpr double pi = std::numbers::pi;

inline double deg2rad(double d) { return d * pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / pi; }

/// Wrap to (-pi, pi].
inline double wrap_pi(double a) {
    a = std::fmod(a, 2.0 * pi);
    if (a <= -pi) a += 2.0 * pi;
    if (a > pi) a -= 2.0 * pi;
    return a;
}

/// Wrap an axis-type angle (period pi) to (-pi/2, pi/2].
inline double wrap_half_pi(double a) {
    a = std::fmod(a, pi);
    if (a <= -pi / 2.0) a += pi;
    if (a > pi / 2.0) a -= pi;
    return a;
}

/// Distance between two axis-type angles, in (-pi/2, pi/2].
inline double axis_distance(double a, double b) { return wrap_half_pi(a - b); }

}  // namespace fibereit
