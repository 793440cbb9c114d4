#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "elines/fields.hpp"

namespace elines {

// Key-value text descriptor for field round-trips:
//   kind=<viscosity|competitor|transition|tiling>
//   theta0=<radians>
//   n=<tiles>            (tiling only)
inline std::string to_descriptor(const PiecewiseField& f) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", f.theta0);
    std::string out = "kind=";
    out += field_kind_name(f.kind);
    out += "\ntheta0=";
    out += buf;
    out += "\n";
    if (f.kind == FieldKind::tiling) {
        out += "n=" + std::to_string(f.tiles) + "\n";
    }
    return out;
}

inline PiecewiseField from_descriptor(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("field descriptor: malformed line '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    if (!kv.count("kind") || !kv.count("theta0"))
        throw std::invalid_argument("field descriptor: missing kind or theta0");
    const std::string& kind = kv["kind"];
    const double theta0 = std::stod(kv["theta0"]);
    if (kind == "viscosity") return viscosity_field(theta0);
    if (kind == "competitor") return competitor_field(theta0);
    if (kind == "transition") return one_d_transition(theta0);
    if (kind == "tiling") {
        if (!kv.count("n")) throw std::invalid_argument("field descriptor: tiling needs n");
        return tiling_field(theta0, std::stoi(kv["n"]));
    }
    throw std::invalid_argument("field descriptor: unknown kind '" + kind + "'");
}

}  // namespace elines
