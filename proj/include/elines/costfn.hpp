#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace elines {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Jump cost f : [0,2] -> [0,+inf]. Either an exact power t^p or a tabulated
// function with linear interpolation between strictly increasing knots.
class JumpCost {
public:
    enum class Kind { power, table };

    static JumpCost power(double p) {
        if (!(p > 0.0)) throw std::invalid_argument("JumpCost::power: exponent must be positive");
        JumpCost f;
        f.kind_ = Kind::power;
        f.p_ = p;
        return f;
    }

    static JumpCost table(std::vector<std::pair<double, double>> knots) {
        if (knots.size() < 2) throw std::invalid_argument("JumpCost::table: need at least 2 knots");
        for (std::size_t i = 0; i < knots.size(); ++i) {
            if (knots[i].second < 0.0)
                throw std::invalid_argument("JumpCost::table: negative cost value");
            if (i > 0 && !(knots[i].first > knots[i - 1].first))
                throw std::invalid_argument("JumpCost::table: knots must be strictly increasing");
        }
        if (std::fabs(knots.front().first) > 1e-12 || std::fabs(knots.back().first - 2.0) > 1e-12)
            throw std::invalid_argument("JumpCost::table: knots must cover [0,2]");
        knots.front().first = 0.0;
        knots.back().first = 2.0;
        JumpCost f;
        f.kind_ = Kind::table;
        f.knots_ = std::move(knots);
        return f;
    }

    // CSV with header "t,value".
    static JumpCost load_table_csv(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("JumpCost: cannot open table file: " + path);
        std::string line;
        std::getline(in, line);  // header
        std::vector<std::pair<double, double>> knots;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::runtime_error("JumpCost: malformed table row: " + line);
            knots.emplace_back(std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)));
        }
        return table(std::move(knots));
    }

    // Cost spec grammar: "power:<p>" or "table:<path>".
    static JumpCost parse(const std::string& spec) {
        if (spec.rfind("power:", 0) == 0) return power(std::stod(spec.substr(6)));
        if (spec.rfind("table:", 0) == 0) return load_table_csv(spec.substr(6));
        throw std::invalid_argument("JumpCost: bad cost spec '" + spec +
                                    "' (expected power:<p> or table:<path>)");
    }

    double operator()(double t) const {
        if (!(t >= 0.0 && t <= 2.0))
            throw std::domain_error("JumpCost: argument outside [0,2]");
        if (kind_ == Kind::power) return std::pow(t, p_);
        // linear interpolation; knots cover [0,2] so t is always bracketed
        auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                   [](double v, const auto& k) { return v < k.first; });
        if (it == knots_.begin()) return knots_.front().second;
        if (it == knots_.end()) return knots_.back().second;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double w = (t - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
    }

    Kind kind() const { return kind_; }
    bool is_power() const { return kind_ == Kind::power; }
    double exponent() const {
        if (kind_ != Kind::power) throw std::logic_error("JumpCost: not a power cost");
        return p_;
    }

    std::string name() const {
        if (kind_ == Kind::power) {
            std::ostringstream os;
            os << "power:" << p_;
            return os.str();
        }
        return "table";
    }

private:
    JumpCost() = default;
    Kind kind_ = Kind::power;
    double p_ = 1.0;
    std::vector<std::pair<double, double>> knots_;
};

inline double eval_cost(const JumpCost& f, double t) { return f(t); }

// Margin in the necessary condition limsup_{t->0} f(t)/t <= 2 limsup_{t->2} f(t).
struct CnfMargin {
    double lhs = 0.0;  // estimate of limsup_{t->0} f(t)/t, possibly +inf
    double rhs = 0.0;  // 2 * estimate of limsup_{t->2} f(t)
    bool holds = false;
    int samples_used = 0;
};

inline CnfMargin cnf_check(const JumpCost& f, int sample_count) {
    if (sample_count < 16) throw std::invalid_argument("cnf_check: sample_count must be >= 16");
    CnfMargin m;
    if (f.is_power()) {
        const double p = f.exponent();
        m.lhs = p > 1.0 ? 0.0 : (p == 1.0 ? 1.0 : kInf);
        m.rhs = 2.0 * std::pow(2.0, p);
        m.samples_used = 0;
        m.holds = m.lhs <= m.rhs;
        return m;
    }
    // Geometric meshes approaching both endpoints; maximum stands in for the
    // one-sided limsup without assuming monotonicity.
    const int kmax = static_cast<int>(std::log2(static_cast<double>(sample_count)));
    double lhs = 0.0, sup2 = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        const double t0 = 2.0 * std::pow(2.0, -k);
        const double t2 = 2.0 - std::pow(2.0, -k);
        lhs = std::fmax(lhs, f(t0) / t0);
        sup2 = std::fmax(sup2, f(t2));
        m.samples_used += 2;
    }
    sup2 = std::fmax(sup2, f(2.0));
    ++m.samples_used;
    m.lhs = lhs;
    m.rhs = 2.0 * sup2;
    m.holds = m.lhs <= m.rhs;
    return m;
}

}  // namespace elines
