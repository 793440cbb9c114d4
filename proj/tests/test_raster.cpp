#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "elines/raster.hpp"

using namespace elines;

TEST_CASE("sample_field on the 1D transition") {
    const double t0 = M_PI / 3;
    const PiecewiseField f = one_d_transition(t0);
    const int n = 64;
    const double h = 2.0 / n;
    const RasterGrid g = sample_field(f, f.bounds, n, n, h);
    const Vec2 up{-std::sin(t0), std::cos(t0)};
    const Vec2 down{std::sin(t0), std::cos(t0)};
    for (int iy = 0; iy < n; ++iy) {
        for (int ix = 0; ix < n; ++ix) {
            const std::size_t k = g.index(ix, iy);
            if (g.mask[k]) continue;
            const Vec2 v = g.values[k];
            CHECK((dist(v, up) <= 1e-14 || dist(v, down) <= 1e-14));
        }
    }
}

TEST_CASE("sample_field unit norms and mask shrinkage") {
    const PiecewiseField f = viscosity_field(M_PI / 3);
    const RasterGrid g = sample_field(f, f.bounds, 256, 256, 0.01);
    int unmasked = 0;
    for (std::size_t k = 0; k < g.values.size(); ++k) {
        if (g.mask[k]) continue;
        ++unmasked;
        CHECK_THAT(g.values[k].norm(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
    CHECK(unmasked > 0);

    auto mask_count = [&](double band) {
        const RasterGrid gg = sample_field(f, f.bounds, 128, 128, band);
        int c = 0;
        for (auto m : gg.mask) c += m;
        return c;
    };
    CHECK(mask_count(0.001) <= mask_count(0.01));
    CHECK(mask_count(0.01) <= mask_count(0.1));

    CHECK_THROWS_AS(sample_field(f, f.bounds, 1, 64, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sample_field(f, f.bounds, 64, 64, -1.0), std::invalid_argument);
}

TEST_CASE("flux through rectangles in constant and jump regions") {
    const double t0 = M_PI / 3;
    const PiecewiseField visc = viscosity_field(t0);
    // rectangle inside the constant upper wedge
    const Rect wedge{0.55, 0.05, 0.8, 0.12};
    CHECK(flux_check(visc, std::vector<Rect>{wedge}) <= 1e-12);
    // rectangle straddling the ridge [OB]
    const Rect straddle{0.3, -0.2, 0.9, 0.15};
    CHECK(flux_check(visc, std::vector<Rect>{straddle}) <= 1e-8);
    // rectangle around the vortex in the competitor field
    const PiecewiseField comp = competitor_field(t0);
    const Rect around_o{-0.31, -0.27, 0.33, 0.29};
    CHECK(flux_check(comp, std::vector<Rect>{around_o}) <= 1e-8);
}

TEST_CASE("edges along a jump curve request repositioning") {
    const PiecewiseField visc = viscosity_field(M_PI / 3);
    const Rect on_ridge{0.2, 0.0, 0.8, 0.3};  // bottom edge lies on [OB]
    CHECK_THROWS_AS(flux_check(visc, std::vector<Rect>{on_ridge}), RepositionError);
}

TEST_CASE("random rectangles are reproducible and admissible") {
    const PiecewiseField f = competitor_field(M_PI / 3);
    const auto a = random_rectangles(f, 50, 42);
    const auto b = random_rectangles(f, 50, 42);
    REQUIRE(a.size() == 50);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].x0 == b[k].x0);
        CHECK(a[k].y1 == b[k].y1);
        CHECK(std::fabs(a[k].y0) >= 1e-6);
        CHECK(std::fabs(a[k].y1) >= 1e-6);
        for (Vec2 corner : {Vec2{a[k].x0, a[k].y0}, Vec2{a[k].x1, a[k].y0},
                            Vec2{a[k].x1, a[k].y1}, Vec2{a[k].x0, a[k].y1}})
            CHECK(f.in_domain(corner));
    }
    const auto c = random_rectangles(f, 50, 43);
    CHECK(a[0].x0 != c[0].x0);
}

TEST_CASE("l1_distance basics") {
    const PiecewiseField a = one_d_transition(0.7);
    const PiecewiseField b = one_d_transition(0.7);
    const L1Result same = l1_distance(a, b, a.bounds, 128, 128);
    CHECK(same.value == 0.0);
    CHECK_THROWS_AS(l1_distance(a, b, a.bounds, 1, 128), std::invalid_argument);
}

TEST_CASE("l1 distance to the 1D transition scales like 1/n") {
    const double t0 = M_PI / 3;
    const PiecewiseField flat = one_d_transition(t0);
    double prev = 0.0;
    for (int n : {4, 8, 16}) {
        const PiecewiseField tiled = tiling_field(t0, n);
        const double band = 1.02 * std::sin(t0) * std::cos(t0) / n;
        const L1Result l1 = l1_distance(tiled, flat, {0.0, -band, 1.0, band}, 512, 512);
        // area bound: the fields differ only inside the n inclusions
        const double area = n * std::pow(std::cos(t0) / n, 2) * 4.0;
        CHECK(l1.value <= 2.0 * area + l1.upper_error + 0.05 / n);
        if (prev > 0.0) {
            const double ratio = prev / l1.value;
            CHECK(ratio > 1.9);
            CHECK(ratio < 2.1);
        }
        prev = l1.value;
    }
}

TEST_CASE("numeric line energy reproduces the closed forms") {
    const double t0 = M_PI / 3;
    const JumpCost f3 = JumpCost::power(3.0);
    const EnergyBreakdown visc = numeric_line_energy(viscosity_field(t0), f3, 10000);
    CHECK_THAT(visc.total, Catch::Matchers::WithinAbs(6.0 * std::sqrt(3.0), 1e-4));
    CHECK(visc.unreliable_segments == 0);

    const EnergyBreakdown comp = numeric_line_energy(competitor_field(t0), f3, 10000);
    const double ref = line_energy(competitor_field(t0), f3).total;
    CHECK_THAT(comp.total, Catch::Matchers::WithinRel(ref, 1e-3));
    for (const CurveEnergy& ce : comp.per_curve) {
        if (ce.id == "gamma")
            CHECK_THAT(ce.energy, Catch::Matchers::WithinRel(16.0 * t0, 2e-3));
    }
}

TEST_CASE("numeric line energy is exact on straight constant-jump segments") {
    const double t0 = 0.8;
    const JumpCost f1 = JumpCost::power(1.0);
    // the 1D wall: constant traces, straight segment, zero curvature error
    const PiecewiseField flat = one_d_transition(t0);
    const EnergyBreakdown e = numeric_line_energy(flat, f1, 100);
    const double clipped = 1.0 - 2.0 * 2e-6;  // endpoint margin
    CHECK_THAT(e.total,
               Catch::Matchers::WithinAbs(2.0 * std::sin(t0) * clipped, 1e-12));
}

TEST_CASE("numeric line energy converges with order at least one") {
    const double t0 = M_PI / 3;
    const JumpCost f1 = JumpCost::power(1.0);
    const PiecewiseField comp = competitor_field(t0);
    const double ref = line_energy(comp, f1).total;
    const double e1 = std::fabs(numeric_line_energy(comp, f1, 2500).total - ref);
    const double e4 = std::fabs(numeric_line_energy(comp, f1, 10000).total - ref);
    CHECK(e4 <= e1);

    CHECK_THROWS_AS(numeric_line_energy(comp, f1, 4), std::invalid_argument);
    CHECK_THROWS_AS(numeric_line_energy(comp, f1, 100, 0.0), std::invalid_argument);
}
