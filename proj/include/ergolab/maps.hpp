#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ergolab/space.hpp"

namespace ergolab {

enum class MapFamily {
    identity,
    rotation,
    doubling,
    tent,
    logistic,
    piecewise_linear,
    perturbed,
};

/// A displacement added on top of a base map.  additive_constant shifts every
/// image by the amplitude; smooth_bump adds a compactly supported C-infinity
/// bump of the given center/width, scaled so its sup norm equals the
/// amplitude.  Displacements are applied mod 1 on the circle and clamped on
/// the interval.
struct PerturbationSpec {
    enum class Kind { additive_constant, smooth_bump };

    Kind kind = Kind::additive_constant;
    double amplitude = 0.0;
    double center = 0.0; // smooth_bump only
    double width = 0.0;  // smooth_bump only

    static PerturbationSpec additive(double amplitude) {
        return PerturbationSpec{Kind::additive_constant, amplitude, 0.0, 0.0};
    }
    static PerturbationSpec bump(double center, double width, double amplitude) {
        if (width <= 0.0)
            throw ConfigurationError("smooth_bump: width must be positive");
        return PerturbationSpec{Kind::smooth_bump, amplitude, center, width};
    }

    /// Displacement added at domain point x.
    double displacement(double x, const PhaseSpace& space) const;

    /// Sup norm of the displacement (attained at the bump center).
    double sup_displacement() const { return std::abs(amplitude); }

    std::string describe() const;
};

/// One linear branch of a piecewise-linear map: y(x) = y0 + slope*(x - x0)
/// on [x0, x1).  Image values are left unwrapped; consumers wrap or clamp.
struct LinearPiece {
    double x0, x1, y0, slope;
    double eval(double x) const { return y0 + slope * (x - x0); }
};

/// A concrete self-map of the phase space.  Built through the static
/// factories; `perturb` composes a base spec with a PerturbationSpec.
struct MapSpec {
    MapFamily family = MapFamily::identity;
    PhaseSpace space;
    double angle = 0.0;     // rotation
    double slope = 0.0;     // tent
    double param = 0.0;     // logistic
    std::vector<double> breakpoints; // piecewise_linear, increasing, 0..1
    std::vector<double> values;      // piecewise_linear, node values in [0,1]
    std::shared_ptr<const MapSpec> base; // perturbed
    PerturbationSpec pert;               // perturbed

    static MapSpec identity(PhaseSpace space = PhaseSpace::circle());
    static MapSpec rotation(double angle, PhaseSpace space = PhaseSpace::circle());
    static MapSpec doubling(PhaseSpace space = PhaseSpace::circle());
    static MapSpec tent(double slope, PhaseSpace space = PhaseSpace::interval());
    static MapSpec logistic(double r, PhaseSpace space = PhaseSpace::interval());
    static MapSpec piecewise_linear(std::vector<double> breakpoints,
                                    std::vector<double> values,
                                    PhaseSpace space = PhaseSpace::interval());

    bool inverse_available() const;

    /// True when the map evaluates through finitely many linear branches,
    /// so Ulam rows can be computed from interval images analytically.
    bool has_linear_pieces() const;

    /// The linear branches (unwrapped images).  Throws if not piecewise linear.
    std::vector<LinearPiece> linear_pieces() const;

    std::string describe() const;
};

double eval_map(const MapSpec& spec, double x);
double eval_inverse(const MapSpec& spec, double x);

MapSpec perturb(const MapSpec& spec, const PerturbationSpec& pert);

/// Sup distance between two maps sampled on a uniform grid of grid_n points.
double c0_distance_estimate(const MapSpec& a, const MapSpec& b, int grid_n);

struct C0DistancePair {
    double forward = 0.0;
    double inverse = 0.0;
    bool inverse_defined = false;
};

/// Grid sup-distance of the maps and, when both are invertible, of their
/// inverses.  Both bounds are needed when a perturbation must stay small
/// in the two-sided sense.
C0DistancePair c0_distance_pair(const MapSpec& a, const MapSpec& b, int grid_n);

enum class OrbitDirection { forward, two_sided };

struct OrbitSegment {
    std::vector<double> points;
    double base_point = 0.0;
    OrbitDirection direction = OrbitDirection::forward;
    std::string spec_id;

    std::size_t size() const { return points.size(); }
};

/// forward: [p, T(p), ..., T^{n-1}(p)] (length n).
/// two_sided: [T^{-n}(p), ..., p, ..., T^{n}(p)] (length 2n+1); requires an
/// invertible spec.
OrbitSegment orbit(const MapSpec& spec, double p, long n, OrbitDirection dir);

} // namespace ergolab
