#pragma once

#include <cmath>

namespace elines {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

    constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
    constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }

    // counterclockwise rotation by pi/2
    constexpr Vec2 perp() const { return {-y, x}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    double angle() const { return std::atan2(y, x); }

    Vec2 normalized() const {
        const double n = norm();
        return {x / n, y / n};
    }
};

inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Distance from p to the segment [a,b].
inline double dist_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    double t = (p - a).dot(ab) / len2;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return dist(p, a + t * ab);
}

}  // namespace elines
