#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "elines/fields.hpp"
#include "elines/geometry.hpp"

namespace elines {
namespace svg {

namespace detail {

class Canvas {
public:
    Canvas(std::ostream& out, double scale, Vec2 world_min, Vec2 world_max)
        : out_(out), scale_(scale), min_(world_min), max_(world_max) {}

    double px(Vec2 p) const { return (p.x - min_.x) * scale_; }
    double py(Vec2 p) const { return (max_.y - p.y) * scale_; }  // y grows downward

    void header() {
        const int w = static_cast<int>((max_.x - min_.x) * scale_);
        const int h = static_cast<int>((max_.y - min_.y) * scale_);
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
             << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }
    void footer() { out_ << "</svg>\n"; }

    void line(Vec2 a, Vec2 b, const char* style) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" %s/>\n",
                      px(a), py(a), px(b), py(b), style);
        out_ << buf;
    }

    void polyline_start(const char* style) { out_ << "<polyline points=\""; style_ = style; }
    void polyline_point(Vec2 p) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f,%.3f ", px(p), py(p));
        out_ << buf;
    }
    void polyline_end() { out_ << "\" " << style_ << "/>\n"; }

    void dot(Vec2 p, const char* label) {
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\" fill=\"black\"/>\n"
                      "<text x=\"%.3f\" y=\"%.3f\" font-size=\"14\">%s</text>\n",
                      px(p), py(p), px(p) + 6.0, py(p) - 6.0, label);
        out_ << buf;
    }

    void arrow(Vec2 base, Vec2 dir, double len, const char* style) {
        const Vec2 tip = base + len * dir;
        const Vec2 back = dir * (-0.35 * len);
        const Vec2 wing = dir.perp() * (0.18 * len);
        line(base, tip, style);
        line(tip, tip + back + wing, style);
        line(tip, tip + back - wing, style);
    }

private:
    std::ostream& out_;
    double scale_;
    Vec2 min_, max_;
    const char* style_ = "";
};

}  // namespace detail

// Figure of the domain: circle C, boundary, Gamma, gamma_{theta0}, [OB],
// landmarks, and arrow samples of the viscosity solution (red) and the
// competitor (blue). Output bytes are deterministic for fixed inputs.
inline void write_figure(std::ostream& out, double theta0) {
    const DomainSpec dom = build_domain(theta0);
    const PiecewiseField m0 = viscosity_field(theta0);
    const PiecewiseField m = competitor_field(theta0);
    const double pad = 0.15;
    detail::Canvas cv(out, 260.0, {-1.0 - pad, -1.0 - pad}, {dom.len_OB + pad, 1.0 + pad});
    cv.header();

    static constexpr const char* kThin = "stroke=\"#bbbbbb\" stroke-width=\"1\" fill=\"none\"";
    static constexpr const char* kBoundary = "stroke=\"black\" stroke-width=\"2\" fill=\"none\"";
    static constexpr const char* kGamma = "stroke=\"#007700\" stroke-width=\"2\" fill=\"none\"";
    static constexpr const char* kRidge = "stroke=\"#555555\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" fill=\"none\"";
    static constexpr const char* kArrow0 = "stroke=\"#cc2222\" stroke-width=\"1.2\"";
    static constexpr const char* kArrow = "stroke=\"#2244cc\" stroke-width=\"1.2\"";

    // full circle C (context) and the small arc C_{theta0}
    const int kArcSamples = 256;
    cv.polyline_start(kThin);
    for (int k = 0; k <= kArcSamples; ++k)
        cv.polyline_point(unit(2.0 * M_PI * k / kArcSamples));
    cv.polyline_end();
    // domain boundary: large arc + Gamma
    cv.polyline_start(kBoundary);
    for (int k = 0; k <= kArcSamples; ++k)
        cv.polyline_point(unit(theta0 + (2.0 * M_PI - 2.0 * theta0) * k / kArcSamples));
    cv.polyline_end();
    cv.line(dom.A, dom.B, kBoundary);
    cv.line(dom.A_prime, dom.B, kBoundary);
    // ridge [OB] and the equidistant curve gamma
    cv.line({0.0, 0.0}, dom.B, kRidge);
    cv.polyline_start(kGamma);
    for (const Vec2& p : gamma_polyline(theta0, 128)) cv.polyline_point(p);
    cv.polyline_end();

    // arrow lattice; skip points too close to jump curves
    const double step = 0.22;
    const double alen = 0.12;
    auto draw_arrows = [&](const PiecewiseField& field, const char* style, double offset) {
        for (double y = -1.0; y <= 1.0 + 1e-9; y += step) {
            for (double x = -1.0 + offset; x <= dom.len_OB + 1e-9; x += step) {
                const Vec2 q{x, y};
                if (!field.in_domain(q)) continue;
                bool near = false;
                for (const JumpCurve& c : field.curves)
                    if (c.proximity(q) < 0.06) { near = true; break; }
                for (const Vec2& s : field.singular_points)
                    if (dist(q, s) < 0.06) near = true;
                if (near) continue;
                cv.arrow(q, eval_field_unchecked(field, q), alen, style);
            }
        }
    };
    draw_arrows(m0, kArrow0, 0.0);
    draw_arrows(m, kArrow, 0.5 * step);

    cv.dot({0.0, 0.0}, "O");
    cv.dot(dom.A, "A");
    cv.dot(dom.A_prime, "A'");
    cv.dot(dom.B, "B");
    cv.dot(dom.I_point, "I");
    cv.footer();
}

}  // namespace svg
}  // namespace elines
