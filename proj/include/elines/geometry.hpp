#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "elines/vec2.hpp"

namespace elines {

inline constexpr double kPointTol = 1e-12;

// The convex domain Omega(theta0): interior of the convex hull of the unit
// circle and the external point B where the two tangents at A, A' meet.
struct DomainSpec {
    double theta0 = 0.0;
    Vec2 A, A_prime, B, I_point;
    double len_OB = 0.0;  // 1/cos(theta0)
    double len_OI = 0.0;  // 1/cos^2(theta0/2)
    double len_IB = 0.0;
};

inline void require_theta0(double theta0) {
    if (!(theta0 > 0.0 && theta0 < M_PI / 2))
        throw std::domain_error("theta0 must lie in the open interval (0, pi/2)");
}

inline DomainSpec build_domain(double theta0) {
    require_theta0(theta0);
    DomainSpec d;
    d.theta0 = theta0;
    d.A = unit(theta0);
    d.A_prime = {d.A.x, -d.A.y};
    d.len_OB = 1.0 / std::cos(theta0);
    d.B = {d.len_OB, 0.0};
    const double c = std::cos(theta0 / 2);
    d.len_OI = 1.0 / (c * c);
    d.I_point = {d.len_OI, 0.0};
    d.len_IB = d.len_OB - d.len_OI;
    return d;
}

// Polar equation of the equidistant curve gamma_{theta0}.
inline double gamma_radius(double theta0, double theta) {
    require_theta0(theta0);
    if (std::fabs(theta) > theta0 + kPointTol)
        throw std::domain_error("gamma_radius: |theta| exceeds theta0");
    return 2.0 / (1.0 + std::cos(theta0 - std::fabs(theta)));
}

inline double gamma_radius_derivative(double theta0, double theta) {
    require_theta0(theta0);
    if (std::fabs(theta) > theta0 + kPointTol)
        throw std::domain_error("gamma_radius_derivative: |theta| exceeds theta0");
    const double a = theta0 - std::fabs(theta);
    const double d = 1.0 + std::cos(a);
    const double mag = -2.0 * std::sin(a) / (d * d);
    return theta >= 0.0 ? mag : -mag;
}

// Line element d(gamma) = cos^-3(alpha/2) d(theta), alpha = theta0 - |theta|.
inline double gamma_line_element(double theta0, double theta) {
    require_theta0(theta0);
    if (std::fabs(theta) > theta0 + kPointTol)
        throw std::domain_error("gamma_line_element: |theta| exceeds theta0");
    const double c = std::cos((theta0 - std::fabs(theta)) / 2);
    return 1.0 / (c * c * c);
}

inline Vec2 gamma_point(double theta0, double theta) {
    return gamma_radius(theta0, theta) * unit(theta);
}

inline std::vector<Vec2> gamma_polyline(double theta0, int n_segments) {
    require_theta0(theta0);
    if (n_segments < 2) throw std::invalid_argument("gamma_polyline: n_segments must be >= 2");
    std::vector<Vec2> pts;
    pts.reserve(n_segments + 1);
    for (int k = 0; k <= n_segments; ++k) {
        const double t = -theta0 + 2.0 * theta0 * k / n_segments;
        pts.push_back(gamma_point(theta0, t));
    }
    return pts;
}

// Closure membership: the hull of the unit disk and B is the disk plus the
// triangle A A' B.
inline bool domain_contains(const DomainSpec& d, Vec2 x, double tol = kPointTol) {
    if (x.norm() <= 1.0 + tol) return true;
    const Vec2 nA = d.A;        // outward normal of tangent line at A
    const Vec2 nAp = d.A_prime;
    return x.dot(nA) <= 1.0 + tol && x.dot(nAp) <= 1.0 + tol && x.x >= d.A.x - tol;
}

namespace detail {

// Distance to the large arc {e^{i t} : |t| > theta0}: project to the circle
// when the angular coordinate lies in the arc range, else use the nearest
// arc endpoint.
inline double dist_large_arc(const DomainSpec& d, Vec2 x) {
    const double r = x.norm();
    if (r == 0.0) return 1.0;
    if (std::fabs(x.angle()) >= d.theta0) return std::fabs(1.0 - r);
    return std::fmin(dist(x, d.A), dist(x, d.A_prime));
}

}  // namespace detail

// phi0(x) = dist(x, boundary of Omega).
inline double dist_to_boundary(const DomainSpec& d, Vec2 x) {
    if (!domain_contains(d, x))
        throw std::domain_error("dist_to_boundary: point outside closure(Omega)");
    const double da = detail::dist_large_arc(d, x);
    const double ds1 = dist_segment(x, d.A, d.B);
    const double ds2 = dist_segment(x, d.A_prime, d.B);
    return std::fmin(da, std::fmin(ds1, ds2));
}

// phi(x) = dist(x, boundary of Omega union the full circle C).
inline double dist_to_boundary_union_circle(const DomainSpec& d, Vec2 x) {
    if (!domain_contains(d, x))
        throw std::domain_error("dist_to_boundary_union_circle: point outside closure(Omega)");
    return std::fmin(dist_to_boundary(d, x), std::fabs(1.0 - x.norm()));
}

}  // namespace elines
