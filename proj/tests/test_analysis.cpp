#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "elines/analysis.hpp"

using namespace elines;

TEST_CASE("critical angle for p = 0.5 is regression-pinned") {
    const CriticalAngleResult r = critical_angle(0.5, 1e-10);
    // value fixed by the bisection oracle; small-angle estimate predicts ~1/16
    CHECK_THAT(r.theta_star, Catch::Matchers::WithinAbs(0.0625560798603918, 1e-9));
    CHECK(r.gap_at_lo < 0.0);
    CHECK(r.gap_at_hi > 0.0);
    CHECK(r.bracket_hi - r.bracket_lo <= 1e-10);
    CHECK(r.bracket_lo <= r.theta_star);
    CHECK(r.theta_star <= r.bracket_hi);
    CHECK(r.crossings_found >= 1);
    // the competitor wins strictly below the critical angle
    CHECK(energy_gap(JumpCost::power(0.5), r.theta_star / 2) < 0.0);
}

TEST_CASE("critical angle brackets nest as tol shrinks") {
    const CriticalAngleResult c6 = critical_angle(0.5, 1e-6);
    const CriticalAngleResult c8 = critical_angle(0.5, 1e-8);
    const CriticalAngleResult c10 = critical_angle(0.5, 1e-10);
    CHECK(c8.bracket_lo >= c6.bracket_lo);
    CHECK(c8.bracket_hi <= c6.bracket_hi);
    CHECK(c10.bracket_lo >= c8.bracket_lo);
    CHECK(c10.bracket_hi <= c8.bracket_hi);
}

TEST_CASE("critical angle exists across the subadditive range") {
    for (double p : {0.2, 0.7, 0.9}) {
        const CriticalAngleResult r = critical_angle(p, 1e-8);
        CHECK(r.theta_star > 0.0);
        CHECK(r.theta_star < M_PI / 2);
        CHECK(energy_gap(JumpCost::power(p), r.theta_star / 2) < 0.0);
    }
}

TEST_CASE("critical angle input validation") {
    CHECK_THROWS_AS(critical_angle(1.5, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(critical_angle(1.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(critical_angle(-0.5, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(critical_angle(0.5, 1e-13), std::invalid_argument);
}

TEST_CASE("sweep_gap rows are consistent and ordered") {
    const std::vector<double> grid{0.1, 0.3, 0.5, 0.7, 0.9, 1.1, 1.3, 1.5};
    const auto rows = sweep_gap(JumpCost::power(3.0), grid, 1e-10);
    REQUIRE(rows.size() == grid.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        CHECK(rows[k].theta0 == grid[k]);
        CHECK(rows[k].gap > 0.0);  // superadditive cost: viscosity always wins
        CHECK_THAT(rows[k].gap,
                   Catch::Matchers::WithinAbs(rows[k].e_competitor - rows[k].e_viscosity,
                                              1e-9));
    }
    CHECK(sweep_gap(JumpCost::power(1.0), std::vector<double>{}).empty());
}

TEST_CASE("gap changes sign exactly once on a fine grid for p = 0.5") {
    std::vector<double> grid;
    for (int k = 1; k <= 150; ++k) grid.push_back(0.01 * k);
    const auto rows = sweep_gap(JumpCost::power(0.5), grid, 1e-10);
    int changes = 0;
    for (std::size_t k = 1; k < rows.size(); ++k)
        if ((rows[k - 1].gap > 0.0) != (rows[k].gap > 0.0)) ++changes;
    CHECK(changes == 1);
}

TEST_CASE("no sign change for p >= 1 on the coarse grid") {
    std::vector<double> grid;
    for (int k = 1; k <= 30; ++k) grid.push_back(0.05 * k);
    for (double p : {1.0, 2.0, 3.0}) {
        const auto rows = sweep_gap(JumpCost::power(p), grid, 1e-10);
        for (const GapRow& r : rows) CHECK(r.gap > 0.0);
    }
}

TEST_CASE("lsc_report certifies the semicontinuity violation") {
    const double theta_star = 0.0625560798603918;
    const double t0 = theta_star / 2;
    const JumpCost f = JumpCost::power(0.5);
    const std::vector<int> ns{1, 2, 4};
    const LscReport rep = lsc_report(t0, f, ns, 256, 1e-10);
    REQUIRE(rep.rows.size() == 3);
    CHECK_THAT(rep.energy_of_1d,
               Catch::Matchers::WithinAbs(std::sqrt(2.0 * std::sin(t0)), 1e-13));
    for (const LscRow& row : rep.rows) {
        CHECK(std::isfinite(row.energy));
        CHECK(row.energy < rep.energy_of_1d);  // the l.s.c. violation
    }
    // energy is n-independent, the L1 distance strictly decreases
    for (std::size_t k = 1; k < rep.rows.size(); ++k) {
        CHECK_THAT(rep.rows[k].energy,
                   Catch::Matchers::WithinAbs(rep.rows[0].energy, 1e-9));
        CHECK(rep.rows[k].l1 < rep.rows[k - 1].l1);
    }
}

TEST_CASE("lsc_report L1 ratio is about 2 per doubling") {
    const std::vector<int> ns{4, 8};
    const LscReport rep = lsc_report(M_PI / 3, JumpCost::power(0.5), ns, 1024, 1e-10);
    const double ratio = rep.rows[0].l1 / rep.rows[1].l1;
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.1);
}

TEST_CASE("lsc_report single tile equals the rescaled competitor energy") {
    const double t0 = 0.9;
    const JumpCost f = JumpCost::power(0.5);
    const LscReport rep = lsc_report(t0, f, std::vector<int>{1}, 128, 1e-10);
    const double direct = line_energy(tiling_field(t0, 1), f).total;
    CHECK(rep.rows[0].energy == direct);
}

TEST_CASE("lsc_report input validation") {
    const JumpCost f = JumpCost::power(1.0);
    CHECK_THROWS_AS(lsc_report(0.5, f, std::vector<int>{}, 64), std::invalid_argument);
    CHECK_THROWS_AS(lsc_report(0.5, f, std::vector<int>{1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(lsc_report(0.5, f, std::vector<int>{0}, 64), std::invalid_argument);
    CHECK_THROWS_AS(lsc_report(2.0, f, std::vector<int>{1}, 64), std::domain_error);
}
