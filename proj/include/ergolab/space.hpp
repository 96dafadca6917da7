#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace ergolab {

/// Error thrown when an operation is not defined for the given inputs
/// (e.g. inverting a non-invertible map).
struct UnsupportedOperation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error thrown when a spec or configuration value is out of range.
struct ConfigurationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Error thrown when an iterative solver exhausts its budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SpaceKind { interval, circle };

/// Reduce x modulo 1 into [0,1).
inline double wrap_unit(double x) {
    double y = x - std::floor(x);
    return (y >= 1.0) ? 0.0 : y;
}

/// Clamp x into [0,1); values >= 1 land on the largest double below 1.
inline double clamp_unit(double x) {
    if (x < 0.0) return 0.0;
    if (x >= 1.0) return std::nextafter(1.0, 0.0);
    return x;
}

/// A one-dimensional phase space realised on [0,1).  The kind selects the
/// metric (and how maps treat the boundary): plain |x-y| on the interval,
/// arc distance min(|x-y|, 1-|x-y|) on the circle.
struct PhaseSpace {
    SpaceKind kind = SpaceKind::circle;

    double distance(double x, double y) const {
        double d = std::abs(x - y);
        if (kind == SpaceKind::circle) return std::min(d, 1.0 - d);
        return d;
    }

    /// Signed displacement from x to y: shortest representative on the
    /// circle (in (-1/2, 1/2]), plain difference on the interval.
    double signed_delta(double x, double y) const {
        double d = y - x;
        if (kind == SpaceKind::circle) {
            d -= std::round(d);
        }
        return d;
    }

    double diameter() const { return kind == SpaceKind::circle ? 0.5 : 1.0; }

    bool operator==(const PhaseSpace& o) const { return kind == o.kind; }
    bool operator!=(const PhaseSpace& o) const { return kind != o.kind; }

    std::string name() const {
        return kind == SpaceKind::circle ? "circle" : "interval";
    }

    static PhaseSpace circle() { return PhaseSpace{SpaceKind::circle}; }
    static PhaseSpace interval() { return PhaseSpace{SpaceKind::interval}; }
};

inline void require_same_space(const PhaseSpace& a, const PhaseSpace& b,
                               const char* what) {
    if (a != b)
        throw ConfigurationError(std::string(what) +
                                 ": phase spaces do not match");
}

} // namespace ergolab
