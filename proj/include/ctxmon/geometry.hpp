#pragma once

#include <cmath>

namespace ctxmon {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Axis-aligned box, inclusive on both faces.
struct Box {
    Vec3 min;
    Vec3 max;

    bool contains(const Vec3& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y &&
               p.z >= min.z && p.z <= max.z;
    }
};

// Minimum-jerk easing on [0,1]: zero velocity and acceleration at both ends.
inline double min_jerk(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

inline Vec3 lerp_min_jerk(const Vec3& a, const Vec3& b, double u) {
    const double s = min_jerk(u);
    return a + (b - a) * s;
}

} // namespace ctxmon
