#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "elines/energy.hpp"

using namespace elines;

TEST_CASE("viscosity energy closed form and quadrature agree") {
    const double t0 = M_PI / 3;
    const JumpCost f3 = JumpCost::power(3.0);
    const double closed = energy_viscosity_closed(f3, t0);
    CHECK_THAT(closed, Catch::Matchers::WithinAbs(6.0 * std::sqrt(3.0), 1e-12));
    const EnergyBreakdown via_curves = line_energy(viscosity_field(t0), f3);
    CHECK_THAT(via_curves.total, Catch::Matchers::WithinAbs(closed, 1e-12));

    CHECK_THAT(energy_viscosity_closed(JumpCost::power(1.0), t0),
               Catch::Matchers::WithinAbs(2.0 * std::sqrt(3.0), 1e-12));
    CHECK_THAT(energy_viscosity_closed(f3, M_PI / 6),
               Catch::Matchers::WithinAbs(2.0 / std::sqrt(3.0), 1e-12));
    // small-angle behaviour ~ (2 theta0)^p
    const double small = 1e-4;
    CHECK_THAT(energy_viscosity_closed(JumpCost::power(2.0), small),
               Catch::Matchers::WithinRel(4.0 * small * small, 1e-6));
}

TEST_CASE("competitor closed-form components at theta0 = pi/3, f = t^3") {
    const double t0 = M_PI / 3;
    const EnergyBreakdown e = energy_competitor_closed(JumpCost::power(3.0), t0, 1e-12);
    REQUIRE(e.components.has_value());
    CHECK_THAT(e.components->at(0), Catch::Matchers::WithinAbs(16.0 * M_PI / 3, 1e-10));
    CHECK_THAT(e.components->at(1), Catch::Matchers::WithinAbs(16.0 * M_PI / 3, 1e-12));
    CHECK_THAT(e.components->at(2), Catch::Matchers::WithinAbs(2.0 * std::sqrt(3.0), 1e-12));
    CHECK_THAT(e.total,
               Catch::Matchers::WithinAbs(32.0 * M_PI / 3 + 2.0 * std::sqrt(3.0), 1e-10));

    // the declared-curve quadrature path gives the same numbers
    const EnergyBreakdown via_curves = line_energy(competitor_field(t0), JumpCost::power(3.0));
    REQUIRE(via_curves.components.has_value());
    for (int k = 0; k < 3; ++k)
        CHECK_THAT(via_curves.components->at(k),
                   Catch::Matchers::WithinAbs(e.components->at(k), 1e-9));
}

TEST_CASE("I1 identity for p = 3: integrand collapses to 8") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ut(0.01, M_PI / 2 - 0.01);
    const JumpCost f3 = JumpCost::power(3.0);
    for (int k = 0; k < 100; ++k) {
        const double t0 = ut(rng);
        const EnergyBreakdown e = energy_competitor_closed(f3, t0, 1e-12);
        CHECK_THAT(e.components->at(0), Catch::Matchers::WithinAbs(16.0 * t0, 1e-12));
    }
}

TEST_CASE("I1 closed form for p = 1: 8 tan(theta0/2)") {
    const JumpCost f1 = JumpCost::power(1.0);
    for (double t0 : {0.1, 0.5, M_PI / 4, M_PI / 3, 1.4}) {
        const EnergyBreakdown e = energy_competitor_closed(f1, t0, 1e-11);
        CHECK_THAT(e.components->at(0),
                   Catch::Matchers::WithinAbs(8.0 * std::tan(t0 / 2), 1e-10));
    }
}

TEST_CASE("gap formula equals the difference of totals") {
    for (double t0 : {0.1, 0.5, 1.0, 1.4}) {
        for (double p : {0.5, 1.0, 2.0, 3.0}) {
            const JumpCost f = JumpCost::power(p);
            const double gap = energy_gap(f, t0, 1e-11);
            const double diff =
                energy_competitor_closed(f, t0, 1e-11).total - energy_viscosity_closed(f, t0);
            CAPTURE(t0, p);
            CHECK_THAT(gap, Catch::Matchers::WithinAbs(diff, 1e-10));
        }
    }
}

TEST_CASE("gap values match hand-derived signs and magnitudes") {
    const double g3 = energy_gap(JumpCost::power(3.0), M_PI / 3, 1e-11);
    const double s = std::sin(M_PI / 3);
    const double ref = 32.0 * M_PI / 3 - 8.0 * s * s * s / std::pow(std::cos(M_PI / 6), 2);
    CHECK_THAT(g3, Catch::Matchers::WithinAbs(ref, 1e-10));
    CHECK(g3 > 26.0);
    CHECK(g3 < 27.0);

    CHECK(energy_gap(JumpCost::power(0.5), 0.01) < 0.0);   // competitor wins
    CHECK(energy_gap(JumpCost::power(0.5), 1.0) > 0.0);    // viscosity wins
}

TEST_CASE("zero cost gives zero energy") {
    const JumpCost zero = JumpCost::table({{0.0, 0.0}, {2.0, 0.0}});
    for (const PiecewiseField& f :
         {viscosity_field(0.8), competitor_field(0.8), one_d_transition(0.8)}) {
        CHECK(line_energy(f, zero).total == 0.0);
    }
}

TEST_CASE("energies are monotone in the cost") {
    // g = t^3, f = half of it sampled into a table: f <= g pointwise
    const JumpCost g = JumpCost::power(3.0);
    std::vector<std::pair<double, double>> knots;
    for (int k = 0; k <= 2000; ++k) {
        const double t = 2.0 * k / 2000;
        knots.emplace_back(t, 0.5 * g(t));
    }
    const JumpCost f = JumpCost::table(knots);
    const EnergyBreakdown ef = energy_competitor_closed(f, 1.0, 1e-10);
    const EnergyBreakdown eg = energy_competitor_closed(g, 1.0, 1e-10);
    for (int k = 0; k < 3; ++k) CHECK(ef.components->at(k) <= eg.components->at(k));
    CHECK(ef.total <= eg.total);
    CHECK(energy_viscosity_closed(f, 1.0) <= energy_viscosity_closed(g, 1.0));
}

TEST_CASE("all energies nonnegative and totals additive") {
    const EnergyBreakdown e = line_energy(competitor_field(1.2), JumpCost::power(0.5));
    double sum = 0.0;
    for (const CurveEnergy& ce : e.per_curve) {
        CHECK(ce.energy >= 0.0);
        sum += ce.energy;
    }
    CHECK_THAT(e.total, Catch::Matchers::WithinAbs(sum, 1e-13));
    CHECK(std::isfinite(e.total));
}

TEST_CASE("tiling energy equals cos(theta0) times the competitor energy") {
    const double t0 = M_PI / 3;
    const JumpCost f = JumpCost::power(0.5);
    const double comp = energy_competitor_closed(f, t0, 1e-11).total;
    for (int n : {1, 3, 8}) {
        const double tiled = line_energy(tiling_field(t0, n), f).total;
        CHECK_THAT(tiled, Catch::Matchers::WithinRel(std::cos(t0) * comp, 1e-9));
    }
}
