#pragma once
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ballmetric/boundary.hpp"
#include "ballmetric/chain.hpp"
#include "ballmetric/estimate.hpp"
#include "ballmetric/verification.hpp"

namespace ballmetric {

using ordered_json = nlohmann::ordered_json;

/// Family file schema: {"spheres": [{"center": [x,y,z], "radius": r,
/// "scale": s}, ...]}.
inline SphereFamily load_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open family file: " + path);
    ordered_json doc = ordered_json::parse(in);
    if (!doc.contains("spheres") || !doc["spheres"].is_array() || doc["spheres"].empty())
        throw std::runtime_error("family file needs a nonempty \"spheres\" array: " + path);
    std::vector<ScaledSphere> spheres;
    for (const auto& s : doc["spheres"]) {
        const auto& c = s.at("center");
        const SpherePose pose(Vec3{c.at(0).get<double>(), c.at(1).get<double>(),
                                   c.at(2).get<double>()},
                              s.at("radius").get<double>());
        spheres.emplace_back(pose, s.value("scale", 1.0));
    }
    return SphereFamily::explicit_finite(std::move(spheres));
}

/// Catalog parser extended with file-backed tables: "table:file=ft.json"
/// where the file is {"points": [[x,y,z], ...], "values": [v, ...]}.
inline BoundaryFunction parse_boundary_function_ex(const std::string& spec) {
    if (spec.rfind("table:file=", 0) == 0) {
        const std::string path = spec.substr(11);
        std::ifstream in(path);
        if (!in) throw InvalidFunctionError("cannot open table file: " + path);
        ordered_json doc = ordered_json::parse(in);
        std::vector<Vec3> pts;
        std::vector<double> vals;
        for (const auto& p : doc.at("points"))
            pts.push_back({p.at(0).get<double>(), p.at(1).get<double>(), p.at(2).get<double>()});
        for (const auto& v : doc.at("values")) vals.push_back(v.get<double>());
        return BoundaryFunction::table_lookup(std::move(pts), std::move(vals));
    }
    return parse_boundary_function(spec);
}

/// Parse the CLI family selector: a JSON file path, or
/// "segment-cover:t=0.25,s0=1", or "boundary:f=<function spec>".
inline SphereFamily parse_family_spec(const std::string& spec) {
    if (spec.rfind("segment-cover:", 0) == 0) {
        double t = 0.0, s0 = 0.0;
        if (std::sscanf(spec.c_str(), "segment-cover:t=%lf,s0=%lf", &t, &s0) != 2)
            throw std::invalid_argument("family spec wants segment-cover:t=..,s0=..");
        return SphereFamily::segment_cover(t, s0);
    }
    if (spec.rfind("boundary:f=", 0) == 0)
        return SphereFamily::boundary_shortcut(parse_boundary_function_ex(spec.substr(11)));
    return load_family_file(spec);
}

inline ordered_json to_json(const Vec3& v) { return ordered_json::array({v.x, v.y, v.z}); }

inline ordered_json to_json(const Chain& chain) {
    ordered_json hops = ordered_json::array();
    for (size_t i = 0; i < chain.spheres.size(); ++i) {
        hops.push_back({{"from", to_json(chain.points[i])},
                        {"to", to_json(chain.points[i + 1])},
                        {"center", to_json(chain.spheres[i].pose.center)},
                        {"radius", chain.spheres[i].pose.radius},
                        {"scale", chain.spheres[i].scale}});
    }
    return hops;
}

inline ordered_json to_json(const VerificationReport& r) {
    return {{"suite", r.suite},     {"cases", r.cases},        {"violations", r.violations},
            {"worst", r.worst},     {"worst_case", r.worst_case}, {"seed", r.seed},
            {"tolerance", r.tol},   {"pass", r.pass()}};
}

/// Shortest-roundtrip decimal for CSV cells (deterministic for a given
/// binary).
inline std::string csv_double(double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    for (int prec = 1; prec < 17; ++prec) {
        char cand[32];
        std::snprintf(cand, sizeof cand, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(cand, "%lf", &back);
        if (back == v) return cand;
    }
    return std::string(buf, static_cast<size_t>(n));
}

inline std::string witness_csv(const std::vector<WitnessRecord>& ws, int n) {
    std::ostringstream out;
    out << "x1,x2,x3,y1,y2,y3,f_x,f_y,dE,margin\n";
    for (const auto& w : ws) {
        out << csv_double(w.x.x) << ',' << csv_double(w.x.y) << ',' << csv_double(w.x.z) << ','
            << csv_double(w.y.x) << ',' << csv_double(w.y.y) << ',' << csv_double(w.y.z) << ','
            << csv_double(w.f_x) << ',' << csv_double(w.f_y) << ',' << csv_double(euclid(w.x, w.y))
            << ',' << csv_double(w.margin) << '\n';
    }
    (void)n;
    return out.str();
}

inline std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream out;
    out << "nodes_per_sphere,upper\n";
    for (const auto& r : rows) out << r.nodes_per_sphere << ',' << csv_double(r.upper) << '\n';
    return out.str();
}

} // namespace ballmetric
