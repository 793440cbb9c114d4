#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "elines/costfn.hpp"
#include "elines/fields.hpp"
#include "elines/geometry.hpp"
#include "elines/quadrature.hpp"

namespace elines {

struct CurveEnergy {
    std::string id;
    double energy = 0.0;
    double error = 0.0;
};

struct EnergyBreakdown {
    std::vector<CurveEnergy> per_curve;
    double total = 0.0;
    double quad_error = 0.0;
    // (I1, I2, I3) for the competitor: gamma / arc / [IB]
    std::optional<std::array<double, 3>> components;
    int unreliable_segments = 0;  // numeric estimator only

    void add(CurveEnergy ce) {
        total += ce.energy;
        quad_error += ce.error;
        per_curve.push_back(std::move(ce));
    }
};

namespace detail {

inline CurveEnergy curve_energy(const JumpCurve& c, const JumpCost& f, double tol) {
    CurveEnergy ce;
    ce.id = c.id;
    if (c.constant_jump) {
        // constant jump size and (for all fields here) constant line element
        const double s_mid = 0.5 * (c.s_begin + c.s_end);
        const double len = (c.s_end - c.s_begin) * c.line_element(s_mid);
        ce.energy = f(c.jump_size(s_mid)) * len;
        return ce;
    }
    bool hit_inf = false;
    auto integrand = [&](double s) {
        const double v = f(c.jump_size(s)) * c.line_element(s);
        if (std::isinf(v)) hit_inf = true;
        return v;
    };
    try {
        const QuadResult q = integrate(integrand, c.s_begin, c.s_end, tol);
        ce.energy = q.value;
        ce.error = q.error;
    } catch (const QuadEvalError&) {
        if (!hit_inf) throw;
        ce.energy = kInf;  // +inf cost on a positive-length curve
    }
    return ce;
}

}  // namespace detail

// I_f(m): per declared curve, quadrature of f(jump size) against the line
// element; constant-jump segments evaluated exactly.
inline EnergyBreakdown line_energy(const PiecewiseField& field, const JumpCost& f,
                                   double tol = 1e-10) {
    EnergyBreakdown out;
    for (const JumpCurve& c : field.curves)
        out.add(detail::curve_energy(c, f, tol));
    if (field.kind == FieldKind::competitor && out.per_curve.size() == 3) {
        std::array<double, 3> comp{};
        for (const CurveEnergy& ce : out.per_curve) {
            if (ce.id == "gamma") comp[0] = ce.energy;
            else if (ce.id == "arc") comp[1] = ce.energy;
            else if (ce.id == "IB") comp[2] = ce.energy;
        }
        out.components = comp;
    }
    return out;
}

// I_f(m0) = f(2 sin theta0) / cos theta0.
inline double energy_viscosity_closed(const JumpCost& f, double theta0) {
    require_theta0(theta0);
    return f(2.0 * std::sin(theta0)) / std::cos(theta0);
}

// Closed forms for the competitor: I1 by quadrature over [0, theta0] (the
// integrand is even in theta, exploited once here), I2 and I3 exact.
inline EnergyBreakdown energy_competitor_closed(const JumpCost& f, double theta0,
                                                double tol = 1e-10) {
    const DomainSpec dom = build_domain(theta0);
    EnergyBreakdown out;
    bool hit_inf = false;
    auto integrand = [&](double a) {
        const double ca = std::cos(a / 2);
        const double v = f(2.0 * ca) / (ca * ca * ca);
        if (std::isinf(v)) hit_inf = true;
        return v;
    };
    CurveEnergy i1{"gamma", 0.0, 0.0};
    try {
        const QuadResult q = integrate(integrand, 0.0, theta0, 0.5 * tol);
        i1.energy = 2.0 * q.value;
        i1.error = 2.0 * q.error;
    } catch (const QuadEvalError&) {
        if (!hit_inf) throw;
        i1.energy = kInf;
    }
    out.add(i1);
    out.add({"arc", 2.0 * theta0 * f(2.0), 0.0});
    out.add({"IB", f(2.0 * std::sin(theta0)) * dom.len_IB, 0.0});
    out.components = {{out.per_curve[0].energy, out.per_curve[1].energy, out.per_curve[2].energy}};
    return out;
}

// I_f(m) - I_f(m0) = I1 + 2 theta0 f(2) - f(2 sin theta0)/cos^2(theta0/2).
inline double energy_gap(const JumpCost& f, double theta0, double tol = 1e-10) {
    const DomainSpec dom = build_domain(theta0);
    const EnergyBreakdown comp = energy_competitor_closed(f, theta0, tol);
    return comp.components->at(0) + comp.components->at(1) -
           f(2.0 * std::sin(theta0)) * dom.len_OI;
}

}  // namespace elines
