#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elines/geometry.hpp"
#include "elines/vec2.hpp"

namespace elines {

inline constexpr double kCurveBand = 1e-9;

class AmbiguousPointError : public std::runtime_error {
public:
    AmbiguousPointError(const std::string& curve_id)
        : std::runtime_error("eval_field: point lies on jump curve '" + curve_id + "'"),
          curve(curve_id) {}
    std::string curve;
};

// A parametrized rectifiable jump curve with per-parameter line element,
// unit normal nu, and two-sided traces (sides labeled by nu).
struct JumpCurve {
    std::string id;
    double s_begin = 0.0;
    double s_end = 0.0;
    std::function<Vec2(double)> point;
    std::function<double(double)> line_element;
    std::function<Vec2(double)> normal;
    std::function<Vec2(double)> trace_plus;
    std::function<Vec2(double)> trace_minus;
    // distance estimate from a query point to the curve
    std::function<double(Vec2)> proximity;
    bool constant_jump = false;

    double jump_size(double s) const { return (trace_plus(s) - trace_minus(s)).norm(); }
};

struct Region {
    std::string id;
    std::function<bool(Vec2)> contains;
    std::function<Vec2(Vec2)> value;
};

struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }
};

enum class FieldKind { viscosity, competitor, transition, tiling };

inline const char* field_kind_name(FieldKind k) {
    switch (k) {
        case FieldKind::viscosity: return "viscosity";
        case FieldKind::competitor: return "competitor";
        case FieldKind::transition: return "transition";
        case FieldKind::tiling: return "tiling";
    }
    return "?";
}

// Divergence-free unit field given as closed-form region formulas plus an
// explicit list of jump curves.
struct PiecewiseField {
    FieldKind kind = FieldKind::viscosity;
    double theta0 = 0.0;
    int tiles = 1;  // tiling fields only
    Rect bounds;
    std::function<bool(Vec2)> in_domain;  // closure membership
    std::vector<Region> regions;
    std::vector<JumpCurve> curves;
    std::vector<Vec2> singular_points;
};

inline const std::vector<JumpCurve>& jump_curves(const PiecewiseField& f) { return f.curves; }

namespace detail {

// tangent unit field -i e^{i theta} = (sin t, -cos t); circulates so that
// (grad dist-to-circle)^perp matches, singular at the origin
inline Vec2 tangent_cw(Vec2 x) {
    const double r = x.norm();
    return {x.y / r, -x.x / r};
}
inline Vec2 tangent_ccw(Vec2 x) {
    const double r = x.norm();
    return {-x.y / r, x.x / r};
}

inline JumpCurve axis_segment_curve(std::string id, double s0, double s1, Vec2 up, Vec2 down) {
    JumpCurve c;
    c.id = std::move(id);
    c.s_begin = s0;
    c.s_end = s1;
    c.point = [](double s) { return Vec2{s, 0.0}; };
    c.line_element = [](double) { return 1.0; };
    c.normal = [](double) { return Vec2{0.0, 1.0}; };
    c.trace_plus = [up](double) { return up; };
    c.trace_minus = [down](double) { return down; };
    c.proximity = [s0, s1](Vec2 x) { return dist_segment(x, {s0, 0.0}, {s1, 0.0}); };
    c.constant_jump = true;
    return c;
}

}  // namespace detail

// Viscosity solution m0 = (grad phi0)^perp: tangent field on the disk sector
// |theta| > theta0, constant in the two wedges, single jump on [O,B].
inline PiecewiseField viscosity_field(double theta0) {
    const DomainSpec dom = build_domain(theta0);
    PiecewiseField f;
    f.kind = FieldKind::viscosity;
    f.theta0 = theta0;
    f.bounds = {-1.0, -1.0, dom.len_OB, 1.0};
    f.in_domain = [dom](Vec2 x) { return domain_contains(dom, x); };
    const Vec2 up{std::sin(theta0), -std::cos(theta0)};
    const Vec2 down{-std::sin(theta0), -std::cos(theta0)};
    f.regions = {
        {"disk-sector",
         [theta0](Vec2 x) { return std::fabs(x.angle()) >= theta0; },
         detail::tangent_cw},
        // half-open on the ridge so the region closures cover the axis
        {"wedge-upper",
         [theta0](Vec2 x) {
             const double a = x.angle();
             return a >= 0.0 && a < theta0;
         },
         [up](Vec2) { return up; }},
        {"wedge-lower",
         [theta0](Vec2 x) {
             const double a = x.angle();
             return a < 0.0 && a > -theta0;
         },
         [down](Vec2) { return down; }},
    };
    f.curves = {detail::axis_segment_curve("OB", 0.0, dom.len_OB, up, down)};
    f.singular_points = {{0.0, 0.0}};
    return f;
}

// Competitor m = (grad phi)^perp with phi = dist(., boundary union circle):
// tangent field in the disk, counter-rotating ring between the small arc and
// gamma_{theta0}, constant wedges beyond gamma. Jumps on the arc, on gamma,
// and on [I,B].
inline PiecewiseField competitor_field(double theta0) {
    const DomainSpec dom = build_domain(theta0);
    PiecewiseField f;
    f.kind = FieldKind::competitor;
    f.theta0 = theta0;
    f.bounds = {-1.0, -1.0, dom.len_OB, 1.0};
    f.in_domain = [dom](Vec2 x) { return domain_contains(dom, x); };
    const Vec2 up{std::sin(theta0), -std::cos(theta0)};
    const Vec2 down{-std::sin(theta0), -std::cos(theta0)};

    auto beyond_gamma = [theta0](Vec2 x) {
        const double a = x.angle();
        return std::fabs(a) < theta0 && x.norm() >= gamma_radius(theta0, a);
    };
    f.regions = {
        {"disk", [](Vec2 x) { return x.norm() < 1.0; }, detail::tangent_cw},
        {"ring",
         [theta0](Vec2 x) {
             const double a = x.angle();
             return x.norm() >= 1.0 && std::fabs(a) < theta0 &&
                    x.norm() < gamma_radius(theta0, a);
         },
         detail::tangent_ccw},
        {"outer-upper",
         [beyond_gamma](Vec2 x) { return x.y > 0.0 && beyond_gamma(x); },
         [up](Vec2) { return up; }},
        {"outer-lower",
         [beyond_gamma](Vec2 x) { return x.y <= 0.0 && beyond_gamma(x); },
         [down](Vec2) { return down; }},
    };

    // (a) the small arc C_{theta0}: jump size 2, radial normal
    JumpCurve arc;
    arc.id = "arc";
    arc.s_begin = -theta0;
    arc.s_end = theta0;
    arc.point = [](double t) { return unit(t); };
    arc.line_element = [](double) { return 1.0; };
    arc.normal = [](double t) { return unit(t); };
    arc.trace_plus = [](double t) { return Vec2{-std::sin(t), std::cos(t)}; };
    arc.trace_minus = [](double t) { return Vec2{std::sin(t), -std::cos(t)}; };
    arc.proximity = [theta0, dom](Vec2 x) {
        if (std::fabs(x.angle()) <= theta0) return std::fabs(x.norm() - 1.0);
        return std::fmin(dist(x, dom.A), dist(x, dom.A_prime));
    };
    arc.constant_jump = true;

    // (b) gamma_{theta0}: jump size 2 cos(alpha/2), line element cos^-3(alpha/2)
    JumpCurve gamma;
    gamma.id = "gamma";
    gamma.s_begin = -theta0;
    gamma.s_end = theta0;
    gamma.point = [theta0](double t) { return gamma_point(theta0, t); };
    gamma.line_element = [theta0](double t) { return gamma_line_element(theta0, t); };
    gamma.normal = [theta0](double t) {
        // bisector of the radial and tangent-line normals; points out of the ring
        return t >= 0.0 ? unit(0.5 * (t + theta0)) : unit(0.5 * (t - theta0));
    };
    gamma.trace_plus = [up, down](double t) { return t >= 0.0 ? up : down; };
    gamma.trace_minus = [](double t) { return Vec2{-std::sin(t), std::cos(t)}; };
    gamma.proximity = [theta0, dom](Vec2 x) {
        const double a = x.angle();
        if (std::fabs(a) <= theta0) return std::fabs(x.norm() - gamma_radius(theta0, a));
        return std::fmin(dist(x, dom.A), dist(x, dom.A_prime));
    };

    f.curves = {gamma, arc, detail::axis_segment_curve("IB", dom.len_OI, dom.len_OB, up, down)};
    f.singular_points = {{0.0, 0.0}};
    return f;
}

// The 1D transition on (0,1)x(-1,1): m = (-+ sin theta0, cos theta0) for +-x2 > 0.
inline PiecewiseField one_d_transition(double theta0) {
    require_theta0(theta0);
    PiecewiseField f;
    f.kind = FieldKind::transition;
    f.theta0 = theta0;
    f.bounds = {0.0, -1.0, 1.0, 1.0};
    f.in_domain = [](Vec2 x) {
        return x.x >= -kPointTol && x.x <= 1.0 + kPointTol && std::fabs(x.y) <= 1.0 + kPointTol;
    };
    const Vec2 up{-std::sin(theta0), std::cos(theta0)};
    const Vec2 down{std::sin(theta0), std::cos(theta0)};
    f.regions = {
        {"upper", [](Vec2 x) { return x.y > 0.0; }, [up](Vec2) { return up; }},
        {"lower", [](Vec2 x) { return x.y <= 0.0; }, [down](Vec2) { return down; }},
    };
    f.curves = {detail::axis_segment_curve("wall", 0.0, 1.0, up, down)};
    return f;
}

namespace detail {

// Shared per-tile transform for the tiling field: tile i maps the rescaled
// copy cos(theta0)/n * Omega0 to [i/n,(i+1)/n] x R.
struct TileMap {
    double theta0;
    int n;
    double scale;  // cos(theta0)/n

    explicit TileMap(double theta0_, int n_)
        : theta0(theta0_), n(n_), scale(std::cos(theta0_) / n_) {}

    int tile_index(Vec2 x) const {
        int i = static_cast<int>(std::floor(x.x * n));
        return std::max(0, std::min(n - 1, i));
    }
    // coordinates in the original Omega0 frame
    Vec2 to_omega0(Vec2 x, int i) const {
        return {(x.x - static_cast<double>(i) / n) / scale, x.y / scale};
    }
    Vec2 from_omega0(Vec2 q, int i) const {
        return {static_cast<double>(i) / n + q.x * scale, q.y * scale};
    }

    bool in_inclusion(Vec2 q, const DomainSpec& dom) const {
        // open sector of Omega cut by |arg| < theta0 (Omega0)
        if (q.norm() <= kPointTol) return false;
        if (std::fabs(q.angle()) >= theta0) return false;
        return domain_contains(dom, q, -kPointTol);
    }
};

}  // namespace detail

// Tiling m_n: n horizontally repeated 1/n-scaled copies of the rescaled,
// negated competitor glued into the 1D transition. Stores one copy of the
// competitor plus an index transform.
inline PiecewiseField tiling_field(double theta0, int n) {
    require_theta0(theta0);
    if (n < 1) throw std::invalid_argument("tiling_field: n must be >= 1");
    const DomainSpec dom = build_domain(theta0);
    const PiecewiseField comp = competitor_field(theta0);
    const detail::TileMap map(theta0, n);

    PiecewiseField f;
    f.kind = FieldKind::tiling;
    f.theta0 = theta0;
    f.tiles = n;
    f.bounds = {0.0, -1.0, 1.0, 1.0};
    f.in_domain = [](Vec2 x) {
        return x.x >= -kPointTol && x.x <= 1.0 + kPointTol && std::fabs(x.y) <= 1.0 + kPointTol;
    };

    const Vec2 up{-std::sin(theta0), std::cos(theta0)};
    const Vec2 down{std::sin(theta0), std::cos(theta0)};

    auto in_inclusion = [map, dom](Vec2 x) {
        return map.in_inclusion(map.to_omega0(x, map.tile_index(x)), dom);
    };
    // inclusion sub-regions reuse the competitor's region tests in Omega0 frame
    auto make_incl_region = [&](std::string id, const Region& sub) {
        auto test = sub.contains;
        auto formula = sub.value;
        return Region{
            std::move(id),
            [map, dom, test](Vec2 x) {
                const Vec2 q = map.to_omega0(x, map.tile_index(x));
                return map.in_inclusion(q, dom) && test(q);
            },
            [map, formula](Vec2 x) {
                return -formula(map.to_omega0(x, map.tile_index(x)));
            }};
    };
    f.regions = {
        make_incl_region("inclusion-disk", comp.regions[0]),
        make_incl_region("inclusion-ring", comp.regions[1]),
        make_incl_region("inclusion-upper", comp.regions[2]),
        make_incl_region("inclusion-lower", comp.regions[3]),
        {"ambient-upper",
         [in_inclusion](Vec2 x) { return x.y > 0.0 && !in_inclusion(x); },
         [up](Vec2) { return up; }},
        {"ambient-lower",
         [in_inclusion](Vec2 x) { return x.y <= 0.0 && !in_inclusion(x); },
         [down](Vec2) { return down; }},
    };

    for (int i = 0; i < n; ++i) {
        for (const JumpCurve& base : comp.curves) {
            JumpCurve c;
            c.id = "tile" + std::to_string(i) + "-" + base.id;
            c.s_begin = base.s_begin;
            c.s_end = base.s_end;
            c.point = [map, i, pt = base.point](double s) { return map.from_omega0(pt(s), i); };
            c.line_element = [map, le = base.line_element](double s) {
                return map.scale * le(s);
            };
            c.normal = base.normal;
            c.trace_plus = [tp = base.trace_plus](double s) { return -tp(s); };
            c.trace_minus = [tm = base.trace_minus](double s) { return -tm(s); };
            c.proximity = [map, i, prox = base.proximity](Vec2 x) {
                return map.scale * prox(map.to_omega0(x, i));
            };
            c.constant_jump = base.constant_jump;
            f.curves.push_back(std::move(c));
        }
    }
    for (int i = 0; i <= n; ++i)
        f.singular_points.push_back({static_cast<double>(i) / n, 0.0});
    return f;
}

// Region-formula evaluation without the jump-curve proximity check; used by
// raster oracles that handle near-curve points themselves.
inline Vec2 eval_field_unchecked(const PiecewiseField& f, Vec2 x) {
    if (!f.in_domain(x)) throw std::domain_error("eval_field: point outside domain");
    for (const Region& r : f.regions)
        if (r.contains(x)) return r.value(x);
    throw std::domain_error("eval_field: no region contains the point");
}

// Index of the region whose formula eval_field_unchecked would use. Region
// boundaries are exactly where the field value or its derivative can break.
inline int region_index(const PiecewiseField& f, Vec2 x) {
    if (!f.in_domain(x)) throw std::domain_error("region_index: point outside domain");
    for (std::size_t k = 0; k < f.regions.size(); ++k)
        if (f.regions[k].contains(x)) return static_cast<int>(k);
    throw std::domain_error("region_index: no region contains the point");
}

inline Vec2 eval_field(const PiecewiseField& f, Vec2 x) {
    if (!f.in_domain(x)) throw std::domain_error("eval_field: point outside domain");
    for (const JumpCurve& c : f.curves)
        if (c.proximity(x) <= kCurveBand) throw AmbiguousPointError(c.id);
    for (const Vec2& s : f.singular_points)
        if (dist(x, s) <= kCurveBand)
            throw AmbiguousPointError("singular point");
    return eval_field_unchecked(f, x);
}

}  // namespace elines
