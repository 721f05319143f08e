#pragma once
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ballmetric/errors.hpp"
#include "ballmetric/geometry.hpp"

namespace ballmetric {

namespace detail {
inline uint64_t bits_of(double v) {
    uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}
inline uint64_t point_key(const Vec3& p) {
    uint64_t h = 0x9E3779B97F4A7C15ull;
    for (double c : {p.x, p.y, p.z}) {
        h ^= bits_of(c) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    }
    return h;
}
} // namespace detail

/// A function f: S^2 -> [0, a] from the catalog. Evaluation is a pure
/// function of the point; catalog extensions must keep it that way (scans
/// may fan out over workers).
class BoundaryFunction {
public:
    enum class Kind { Constant, Spike, DistanceTo, DenseIndicatorPrefix, TableLookup };

    static BoundaryFunction constant(double c) {
        BoundaryFunction f(Kind::Constant, "constant");
        if (c < 0.0) throw InvalidFunctionError("constant: c must be >= 0");
        f.c_ = c;
        f.bound_ = (c > 0.0) ? c : 1.0; // declared range [0, a], a > 0
        return f;
    }

    /// height on the chordal cap of the given radius around x0, 0 elsewhere.
    static BoundaryFunction spike(const Vec3& x0, double height, double radius) {
        BoundaryFunction f(Kind::Spike, "spike");
        if (!(height > 0.0) || !(radius > 0.0))
            throw InvalidFunctionError("spike: height and radius must be > 0");
        f.x0_ = normalized(x0);
        f.c_ = height;
        f.radius_ = radius;
        f.bound_ = height;
        return f;
    }

    /// Chordal distance to a fixed point: 1-Lipschitz, range [0, 2].
    static BoundaryFunction distance_to(const Vec3& x0) {
        BoundaryFunction f(Kind::DistanceTo, "distance-to");
        f.x0_ = normalized(x0);
        f.bound_ = 2.0;
        return f;
    }

    /// Indicator of the first k points of a fixed diagonal enumeration of the
    /// rational-angle dense set C. Membership is exact on the stored prefix.
    static BoundaryFunction dense_indicator_prefix(int k) {
        BoundaryFunction f(Kind::DenseIndicatorPrefix, "dense-indicator");
        if (k < 1) throw InvalidFunctionError("dense-indicator: k must be >= 1");
        f.points_ = enumerate_rational_points(k);
        for (const Vec3& p : f.points_) f.keys_.insert(detail::point_key(p));
        f.bound_ = 1.0;
        return f;
    }

    /// Exact-point table: value at a listed point, 0 elsewhere.
    static BoundaryFunction table_lookup(std::vector<Vec3> points, std::vector<double> values) {
        BoundaryFunction f(Kind::TableLookup, "table");
        if (points.size() != values.size() || points.empty())
            throw InvalidFunctionError("table: need equally many points and values");
        double a = 0.0;
        for (double v : values) {
            if (v < 0.0) throw InvalidFunctionError("table: values must be >= 0");
            a = std::fmax(a, v);
        }
        f.points_ = std::move(points);
        f.values_ = std::move(values);
        for (size_t i = 0; i < f.points_.size(); ++i)
            f.table_.emplace(detail::point_key(f.points_[i]), f.values_[i]);
        f.bound_ = (a > 0.0) ? a : 1.0;
        return f;
    }

    double evaluate(const Vec3& x) const {
        double v = 0.0;
        switch (kind_) {
        case Kind::Constant: v = c_; break;
        case Kind::Spike: v = euclid(x, x0_) <= radius_ ? c_ : 0.0; break;
        case Kind::DistanceTo: v = euclid(x, x0_); break;
        case Kind::DenseIndicatorPrefix:
            v = keys_.count(detail::point_key(x)) ? 1.0 : 0.0;
            break;
        case Kind::TableLookup: {
            auto it = table_.find(detail::point_key(x));
            v = (it == table_.end()) ? 0.0 : it->second;
            break;
        }
        }
        return v / scale_div_;
    }

    double operator()(const Vec3& x) const { return evaluate(x); }

    /// Upper bound a of the declared range [0, a].
    double bound() const { return bound_; }
    const std::string& name() const { return name_; }
    Kind kind() const { return kind_; }

    /// Division applied by scaled_down (1 for raw catalog functions).
    double scale_divisor() const { return scale_div_; }

    /// Points the function singles out (spike center, table points, the dense
    /// prefix). Scans fold these into their sample sets so the interesting
    /// values are never missed by chance.
    std::vector<Vec3> distinguished_points() const {
        switch (kind_) {
        case Kind::Constant: return {};
        case Kind::Spike: return {x0_};
        case Kind::DistanceTo: return {x0_};
        case Kind::DenseIndicatorPrefix: return points_;
        case Kind::TableLookup: return points_;
        }
        return {};
    }

    /// Scaled copy f/n (reduces functions with a > 1 to the unit-bound case).
    BoundaryFunction scaled_down(int n) const {
        if (n < 1) throw InvalidFunctionError("scaled_down: n must be >= 1");
        BoundaryFunction f = *this;
        f.scale_div_ *= static_cast<double>(n);
        f.bound_ /= static_cast<double>(n);
        f.name_ = name_ + "/" + std::to_string(n);
        return f;
    }

private:
    BoundaryFunction(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}

    static std::vector<Vec3> enumerate_rational_points(int k) {
        // Diagonal enumeration of rational angle pairs (i/m, j/m) in lowest
        // common terms; theta = pi*i/m, phi = 2*pi*j/m. Poles appear once,
        // at m = 1.
        std::vector<Vec3> out;
        out.reserve(static_cast<size_t>(k));
        for (long m = 1; static_cast<int>(out.size()) < k; ++m) {
            for (long i = 0; i <= m && static_cast<int>(out.size()) < k; ++i) {
                const bool pole = (i == 0 || i == m);
                const long jmax = pole ? 0 : m - 1;
                for (long j = 0; j <= jmax && static_cast<int>(out.size()) < k; ++j) {
                    if (std::gcd(std::gcd(i, j), m) != 1) continue;
                    const double theta = kPi * static_cast<double>(i) / static_cast<double>(m);
                    const double phi = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(m);
                    out.push_back({std::sin(theta) * std::cos(phi),
                                   std::sin(theta) * std::sin(phi), std::cos(theta)});
                }
            }
        }
        return out;
    }

    Kind kind_;
    std::string name_;
    Vec3 x0_;
    double c_{0.0};
    double radius_{0.0};
    double bound_{1.0};
    double scale_div_{1.0};
    std::vector<Vec3> points_;
    std::vector<double> values_;
    std::unordered_set<uint64_t> keys_;
    std::unordered_map<uint64_t, double> table_;
};

/// Parse catalog strings like "constant:c=0.3", "spike:x0=0,0,1:h=1:r=0.05",
/// "distance-to:x0=1,0,0", "dense-indicator:k=1000".
inline BoundaryFunction parse_boundary_function(const std::string& spec) {
    const auto head_end = spec.find(':');
    const std::string head = spec.substr(0, head_end);
    std::unordered_map<std::string, std::string> kv;
    if (head_end != std::string::npos) {
        size_t pos = head_end + 1;
        while (pos < spec.size()) {
            const size_t next = spec.find(':', pos);
            const std::string part =
                spec.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            const size_t eq = part.find('=');
            if (eq == std::string::npos)
                throw InvalidFunctionError("bad function spec '" + spec + "': expected key=value");
            kv[part.substr(0, eq)] = part.substr(eq + 1);
            pos = (next == std::string::npos) ? spec.size() : next + 1;
        }
    }
    auto num = [&](const char* key) -> double {
        auto it = kv.find(key);
        if (it == kv.end())
            throw InvalidFunctionError("bad function spec '" + spec + "': missing " + key);
        return std::stod(it->second);
    };
    auto vec = [&](const char* key) -> Vec3 {
        auto it = kv.find(key);
        if (it == kv.end())
            throw InvalidFunctionError("bad function spec '" + spec + "': missing " + key);
        Vec3 v;
        if (std::sscanf(it->second.c_str(), "%lf,%lf,%lf", &v.x, &v.y, &v.z) != 3)
            throw InvalidFunctionError("bad function spec '" + spec + "': " + key + " wants x,y,z");
        return v;
    };
    if (head == "constant") return BoundaryFunction::constant(num("c"));
    if (head == "spike") return BoundaryFunction::spike(vec("x0"), num("h"), num("r"));
    if (head == "distance-to") return BoundaryFunction::distance_to(vec("x0"));
    if (head == "dense-indicator")
        return BoundaryFunction::dense_indicator_prefix(static_cast<int>(num("k")));
    throw InvalidFunctionError("bad function spec '" + spec + "': unknown function '" + head + "'");
}

} // namespace ballmetric
