#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "elines/energy.hpp"
#include "elines/fields.hpp"
#include "elines/quadrature.hpp"

namespace elines {

struct RasterGrid {
    Rect bounds;
    int nx = 0, ny = 0;
    std::vector<Vec2> values;   // row-major, nx*ny
    std::vector<std::uint8_t> mask;  // 1 = excluded cell

    Vec2 cell_center(int ix, int iy) const {
        return {bounds.x0 + (ix + 0.5) * bounds.width() / nx,
                bounds.y0 + (iy + 0.5) * bounds.height() / ny};
    }
    std::size_t index(int ix, int iy) const { return static_cast<std::size_t>(iy) * nx + ix; }
};

inline RasterGrid sample_field(const PiecewiseField& f, Rect bounds, int nx, int ny,
                               double exclusion_band) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("sample_field: nx, ny must be >= 2");
    if (exclusion_band < 0.0) throw std::invalid_argument("sample_field: band must be >= 0");
    RasterGrid g;
    g.bounds = bounds;
    g.nx = nx;
    g.ny = ny;
    g.values.assign(static_cast<std::size_t>(nx) * ny, Vec2{});
    g.mask.assign(static_cast<std::size_t>(nx) * ny, 0);
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Vec2 x = g.cell_center(ix, iy);
            const std::size_t k = g.index(ix, iy);
            if (!f.in_domain(x)) {
                g.mask[k] = 1;
                continue;
            }
            bool near = false;
            for (const JumpCurve& c : f.curves)
                if (c.proximity(x) <= exclusion_band) { near = true; break; }
            if (!near)
                for (const Vec2& s : f.singular_points)
                    if (dist(x, s) <= exclusion_band) { near = true; break; }
            if (near) {
                g.mask[k] = 1;
                continue;
            }
            g.values[k] = eval_field_unchecked(f, x);
        }
    }
    return g;
}

class RepositionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Bisect a bracket whose endpoint values differ by more than thresh. A genuine
// jump keeps the mismatch alive down to machine width and yields a cut point; a
// merely steep smooth stretch dies out once the local variation drops below
// thresh and no cut is emitted (a spurious cut would be harmless anyway).
template <class G>
void locate_cuts(const G& g, double u, double gu, double v, double gv, double thresh,
                 int depth, std::vector<double>& cuts) {
    if (v - u < 1e-13 || depth <= 0) {
        cuts.push_back(0.5 * (u + v));
        return;
    }
    const double m = 0.5 * (u + v);
    const double gm = g(m);
    if (std::fabs(gm - gu) > thresh) locate_cuts(g, u, gu, m, gm, thresh, depth - 1, cuts);
    if (std::fabs(gv - gm) > thresh) locate_cuts(g, m, gm, v, gv, thresh, depth - 1, cuts);
}

// Bisect to the parameter where the containing-region index changes; assumes a
// single boundary inside the bracket (the scan spacing makes brackets with two
// boundaries correspond to unsampled slivers, which no scan can see anyway).
template <class I>
double locate_region_boundary(const I& idx, double u, int iu, double v) {
    while (v - u > 1e-13) {
        const double m = 0.5 * (u + v);
        if (idx(m) == iu)
            u = m;
        else
            v = m;
    }
    return 0.5 * (u + v);
}

inline double edge_flux(const PiecewiseField& f, Vec2 a, Vec2 b, Vec2 n, int panels,
                        double tol) {
    // edge lying along a jump curve: the traces are ambiguous, ask for a nudge
    const Vec2 mid = 0.5 * (a + b);
    for (const JumpCurve& c : f.curves) {
        if (c.proximity(a) <= kCurveBand && c.proximity(b) <= kCurveBand &&
            c.proximity(mid) <= kCurveBand)
            throw RepositionError("flux_check: edge lies along jump curve '" + c.id + "'");
    }
    const double len = dist(a, b);
    auto g = [&](double t) {
        const Vec2 x = a + t * (b - a);
        return eval_field_unchecked(f, x).dot(n) * len;
    };
    auto idx = [&](double t) { return region_index(f, a + t * (b - a)); };
    // The Gauss panels never sample a strip of relative width ~6e-3 next to
    // each interval endpoint, and the halved panels of the error estimate share
    // that blind zone. A jump or kink hiding there passes the convergence test
    // without ever being seen, so locate the integrand's breaks up front and
    // cut the edge exactly at them. Two detectors: region-index changes catch
    // every boundary between piecewise formulas (kinks included), and a value
    // scan catches jumps inside a single region (tile-frame changes).
    const int kScan = 2048;
    const double kJumpThresh = 1e-5;
    std::vector<double> cuts{0.0, 1.0};
    double tprev = 0.0, vprev = g(0.0);
    int iprev = idx(0.0);
    for (int k = 1; k <= kScan; ++k) {
        const double t = static_cast<double>(k) / kScan;
        const double v = g(t);
        const int i = idx(t);
        if (i != iprev) cuts.push_back(locate_region_boundary(idx, tprev, iprev, t));
        if (std::fabs(v - vprev) > kJumpThresh)
            locate_cuts(g, tprev, vprev, t, v, kJumpThresh, 60, cuts);
        tprev = t;
        vprev = v;
        iprev = i;
    }
    for (int k = 1; k < panels; ++k) cuts.push_back(static_cast<double>(k) / panels);
    std::sort(cuts.begin(), cuts.end());
    const int pieces = static_cast<int>(cuts.size()) - 1;
    double sum = 0.0;
    for (int k = 0; k < pieces; ++k) {
        if (cuts[k + 1] - cuts[k] < 1e-13) continue;
        sum += integrate(g, cuts[k], cuts[k + 1], tol / pieces).value;
    }
    return sum;
}

}  // namespace detail

// Max absolute circulation flux over closed rectangles: the discrete
// certificate of the distributional divergence constraint.
inline double flux_check(const PiecewiseField& f, std::span<const Rect> rectangles,
                         int quad_points_per_edge = 4) {
    double worst = 0.0;
    const double tol = 1e-11;
    for (const Rect& r : rectangles) {
        const Vec2 bl{r.x0, r.y0}, br{r.x1, r.y0}, tr{r.x1, r.y1}, tl{r.x0, r.y1};
        double flux = 0.0;
        flux += detail::edge_flux(f, bl, br, {0.0, -1.0}, quad_points_per_edge, tol);
        flux += detail::edge_flux(f, br, tr, {1.0, 0.0}, quad_points_per_edge, tol);
        flux += detail::edge_flux(f, tr, tl, {0.0, 1.0}, quad_points_per_edge, tol);
        flux += detail::edge_flux(f, tl, bl, {-1.0, 0.0}, quad_points_per_edge, tol);
        worst = std::fmax(worst, std::fabs(flux));
    }
    return worst;
}

// Seeded axis-aligned rectangles inside the field's domain, edges kept away
// from singular points and the axis-aligned jump segments.
inline std::vector<Rect> random_rectangles(const PiecewiseField& f, int count,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(f.bounds.x0, f.bounds.x1);
    std::uniform_real_distribution<double> uy(f.bounds.y0, f.bounds.y1);
    std::uniform_real_distribution<double> usize(0.02, 0.25);
    std::vector<Rect> out;
    const double diam = std::fmax(f.bounds.width(), f.bounds.height());
    while (static_cast<int>(out.size()) < count) {
        const Vec2 c{ux(rng), uy(rng)};
        const double hw = 0.5 * usize(rng) * diam;
        const double hh = 0.5 * usize(rng) * diam;
        Rect r{c.x - hw, c.y - hh, c.x + hw, c.y + hh};
        // horizontal edges must not graze the axis jump segments
        if (std::fabs(r.y0) < 1e-6 || std::fabs(r.y1) < 1e-6) continue;
        const Vec2 corners[4] = {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
        bool ok = true;
        for (const Vec2& p : corners)
            if (!f.in_domain(p)) { ok = false; break; }
        // convex domains: corners inside imply edges inside; keep edges clear
        // of vortices where the integrand is non-smooth at machine scale
        if (ok)
            for (const Vec2& s : f.singular_points) {
                const double d = std::fmin(
                    std::fmin(dist_segment(s, corners[0], corners[1]),
                              dist_segment(s, corners[1], corners[2])),
                    std::fmin(dist_segment(s, corners[2], corners[3]),
                              dist_segment(s, corners[3], corners[0])));
                if (d < 1e-4) { ok = false; break; }
            }
        if (ok) out.push_back(r);
    }
    return out;
}

struct L1Result {
    double value = 0.0;
    double upper_error = 0.0;  // bound on the contribution of masked cells
};

// Midpoint Riemann sum of |a-b|; masked cells contribute the integrand bound 2
// to the error bar instead of being silently absorbed.
inline L1Result l1_distance(const PiecewiseField& a, const PiecewiseField& b, Rect bounds,
                            int nx, int ny) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("l1_distance: nx, ny must be >= 2");
    const double cell = bounds.area() / (static_cast<double>(nx) * ny);
    L1Result res;
    RasterGrid g;
    g.bounds = bounds;
    g.nx = nx;
    g.ny = ny;
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const Vec2 x = g.cell_center(ix, iy);
            if (!a.in_domain(x) || !b.in_domain(x)) {
                res.upper_error += 2.0 * cell;
                continue;
            }
            try {
                res.value += dist(eval_field_unchecked(a, x), eval_field_unchecked(b, x)) * cell;
            } catch (const std::exception&) {
                res.upper_error += 2.0 * cell;
            }
        }
    }
    return res;
}

// Independent polygonal estimator of the line energy: uses only the curve
// parametrizations and near-curve field samples, no closed-form line elements
// or jump sizes.
inline EnergyBreakdown numeric_line_energy(const PiecewiseField& f, const JumpCost& cost,
                                           int n_segments, double side_offset = 1e-6) {
    if (n_segments < 8) throw std::invalid_argument("numeric_line_energy: n_segments >= 8");
    if (!(side_offset > 0.0))
        throw std::invalid_argument("numeric_line_energy: side_offset must be positive");
    EnergyBreakdown out;
    for (const JumpCurve& c : f.curves) {
        // keep clear of curve endpoints where offset points can cross into a
        // neighboring curve's wedge
        const double margin = 2.0 * side_offset;
        double a = c.s_begin + margin / c.line_element(c.s_begin);
        double b = c.s_end - margin / c.line_element(c.s_end);
        CurveEnergy ce{c.id, 0.0, 0.0};
        if (a >= b) {
            out.add(ce);
            continue;
        }
        const double ds = (b - a) / n_segments;
        for (int k = 0; k < n_segments; ++k) {
            const Vec2 p0 = c.point(a + k * ds);
            const Vec2 p1 = c.point(a + (k + 1) * ds);
            const Vec2 mid = 0.5 * (p0 + p1);
            const double seg_len = dist(p0, p1);
            if (seg_len == 0.0) continue;
            const Vec2 n = (p1 - p0).perp().normalized();
            // shrink the offset so both samples stay in the regions adjacent
            // to this curve; the traces are locally constant in the normal
            // direction, so any positive offset measures the same jump
            double off = side_offset;
            for (const JumpCurve& o : f.curves)
                if (o.id != c.id) off = std::fmin(off, 0.25 * o.proximity(mid));
            for (const Vec2& s : f.singular_points) off = std::fmin(off, 0.25 * dist(mid, s));
            if (off <= 10.0 * kCurveBand) {
                ++out.unreliable_segments;
                continue;
            }
            try {
                const Vec2 mp = eval_field(f, mid + off * n);
                const Vec2 mm = eval_field(f, mid - off * n);
                ce.energy += cost(std::fmin(2.0, dist(mp, mm))) * seg_len;
            } catch (const std::exception&) {
                ++out.unreliable_segments;
            }
        }
        out.add(ce);
    }
    return out;
}

}  // namespace elines
