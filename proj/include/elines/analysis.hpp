#pragma once

#include <cmath>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "elines/costfn.hpp"
#include "elines/energy.hpp"
#include "elines/raster.hpp"

namespace elines {

class SearchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CriticalAngleResult {
    double p = 0.0;
    double theta_star = 0.0;
    double bracket_lo = 0.0, bracket_hi = 0.0;
    double gap_at_lo = 0.0, gap_at_hi = 0.0;
    int iterations = 0;
    int crossings_found = 0;  // sign changes seen on the scan mesh
};

// Locate the angle where the competitor stops beating the viscosity solution:
// geometric scan theta = (pi/4) 2^-k, then bisection on theta -> gap(theta).
// Returns the largest bracketed crossing.
inline CriticalAngleResult critical_angle(double p, double tol, double quad_tol = 1e-10) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("critical_angle: requires 0 < p < 1");
    if (!(tol >= 1e-12)) throw std::invalid_argument("critical_angle: tol must be >= 1e-12");
    const JumpCost f = JumpCost::power(p);
    constexpr int kScan = 40;
    std::vector<double> mesh(kScan + 1), gaps(kScan + 1);
    for (int k = 0; k <= kScan; ++k) {
        mesh[k] = (M_PI / 4) * std::pow(2.0, -k);
        gaps[k] = energy_gap(f, mesh[k], quad_tol);
    }
    CriticalAngleResult res;
    res.p = p;
    int pick = -1;
    for (int k = 0; k < kScan; ++k) {
        if ((gaps[k] > 0.0) != (gaps[k + 1] > 0.0)) {
            ++res.crossings_found;
            if (pick < 0) pick = k;  // mesh is decreasing: first hit = largest theta
        }
    }
    if (pick < 0) {
        std::ostringstream os;
        os << "critical_angle: no sign change on scan mesh for p=" << p << "; scanned";
        for (int k = 0; k <= kScan; ++k)
            os << " (" << mesh[k] << "," << gaps[k] << ")";
        throw SearchError(os.str());
    }
    double lo = mesh[pick + 1], hi = mesh[pick];
    double glo = gaps[pick + 1], ghi = gaps[pick];
    if (glo > ghi) {  // orient so that gap(lo) < 0 < gap(hi)
        std::swap(lo, hi);
        std::swap(glo, ghi);
    }
    while (std::fabs(hi - lo) > tol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = energy_gap(f, mid, quad_tol);
        ++res.iterations;
        if (gm < 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
        if (res.iterations > 200) break;
    }
    res.bracket_lo = std::fmin(lo, hi);
    res.bracket_hi = std::fmax(lo, hi);
    res.gap_at_lo = lo <= hi ? glo : ghi;
    res.gap_at_hi = lo <= hi ? ghi : glo;
    res.theta_star = 0.5 * (lo + hi);
    return res;
}

struct GapRow {
    double theta0 = 0.0;
    double gap = 0.0;
    double e_viscosity = 0.0;
    double e_competitor = 0.0;
};

inline std::vector<GapRow> sweep_gap(const JumpCost& f, std::span<const double> thetas,
                                     double tol = 1e-10) {
    std::vector<GapRow> rows;
    rows.reserve(thetas.size());
    for (double t : thetas) {
        GapRow r;
        r.theta0 = t;
        r.e_viscosity = energy_viscosity_closed(f, t);
        const EnergyBreakdown comp = energy_competitor_closed(f, t, tol);
        r.e_competitor = comp.total;
        r.gap = energy_gap(f, t, tol);
        rows.push_back(r);
    }
    return rows;
}

struct LscRow {
    int n = 0;
    double energy = 0.0;
    double l1 = 0.0;
    double l1_error = 0.0;
};

struct LscReport {
    double theta0 = 0.0;
    std::string cost;
    std::vector<LscRow> rows;
    double energy_of_1d = 0.0;  // f(2 sin theta0) * unit-length wall
};

// Per n: energy of the tiling (n-independent up to quadrature tolerance) and
// raster L1 distance to the 1D transition. The two fields agree outside the
// band |x2| <= sin(theta0)cos(theta0)/n, so the L1 grid only spans that band.
inline LscReport lsc_report(double theta0, const JumpCost& f, std::span<const int> ns,
                            int grid, double tol = 1e-10) {
    require_theta0(theta0);
    if (ns.empty()) throw std::invalid_argument("lsc_report: ns must be nonempty");
    if (grid < 2) throw std::invalid_argument("lsc_report: grid must be >= 2");
    LscReport rep;
    rep.theta0 = theta0;
    rep.cost = f.name();
    rep.energy_of_1d = f(2.0 * std::sin(theta0));
    const PiecewiseField flat = one_d_transition(theta0);
    for (int n : ns) {
        if (n < 1) throw std::invalid_argument("lsc_report: n must be >= 1");
        const PiecewiseField tiled = tiling_field(theta0, n);
        LscRow row;
        row.n = n;
        row.energy = line_energy(tiled, f, tol).total;
        const double band = 1.02 * std::sin(theta0) * std::cos(theta0) / n;
        const L1Result l1 = l1_distance(tiled, flat, {0.0, -band, 1.0, band}, grid, grid);
        row.l1 = l1.value;
        row.l1_error = l1.upper_error;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace elines
