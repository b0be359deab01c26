#pragma once

#include <vector>

#include "kuiper/distribution.hpp"

namespace kuiper {

/// Arc of the unit circle in angle coordinates: from `start` counterclockwise
/// by `extent`. start ∈ [−π, π), extent ∈ [0, 2π]. A zero extent is a single
/// point (both ends closed); extent 2π with one closed end is the whole
/// circle, with both ends open the circle minus one point.
struct Arc {
    double start = -3.141592653589793;
    double extent = 0.0;
    double end = -3.141592653589793;  ///< wrapped, kept exact for knot-aligned arcs
    bool start_closed = true;
    bool end_closed = true;

    static Arc make(double start, double extent, bool start_closed, bool end_closed);
    /// Arc from `start` counterclockwise to `end`; equal ends give a point,
    /// or the whole turn when `full` is set.
    static Arc between(double start, double end, bool start_closed, bool end_closed, bool full = false);
    static Arc point(double angle) { return make(angle, 0.0, true, true); }
    static Arc full();

    /// The arc rotated counterclockwise by theta.
    Arc rotated(double theta) const;
    /// 𝕋 minus this arc (also an arc). Not defined for the full circle.
    Arc complement() const;
};

/// Wraps an angle into [−π, π).
double wrap_angle(double theta);

/// A probability measure on the circle with a piecewise-linear distribution
/// function in the angle, measured from the base point at angle −π.
///
/// Knot i carries C(θᵢ−) and C(θᵢ), where C(θ) is the mass of the angles in
/// [−π, θ]. The first knot is at −π with C(−π−) = 0 and the last at π with
/// both values 1; C is linear between knots.
class CircleDistribution {
public:
    struct Knot {
        double angle;
        double below;
        double above;
    };

    /// Validates ordering, monotonicity and total mass 1 (within 1e-12).
    static CircleDistribution from_knots(std::vector<Knot> knots);
    /// Normalized arc length.
    static CircleDistribution uniform();
    /// Uniform on the arc [start, start + extent], extent ∈ (0, 2π].
    static CircleDistribution uniform_arc(double start, double extent);
    static CircleDistribution atom(double angle);

    const std::vector<Knot>& knots() const { return knots_; }

    /// C(θ) and C(θ−) for θ ∈ [−π, π].
    double cdf(double theta) const;
    double cdf_left(double theta) const;
    bool has_atoms() const;

private:
    CircleDistribution() = default;
    std::vector<Knot> knots_;
};

/// Mixture of circle distributions with weights summing to 1.
CircleDistribution mix(const std::vector<std::pair<double, CircleDistribution>>& parts);

double arc_mass(const CircleDistribution& c, const Arc& arc);

struct CircleWitness {
    double distance;
    Arc arc;  ///< c₁(arc) − c₂(arc) = ±distance
};

/// max |c₁(A) − c₂(A)| over all arcs A, including single points.
double circle_kuiper(const CircleDistribution& c1, const CircleDistribution& c2);
CircleWitness circle_kuiper_witness(const CircleDistribution& c1, const CircleDistribution& c2);

/// The image measure under rotation by theta: arc_mass(rotate(c, θ), A) = arc_mass(c, A rotated by −θ).
CircleDistribution rotate(const CircleDistribution& c, double theta);

/// Open arcs of zero mass that are maximal: the components of the complement
/// of the closed support. Empty when the support is the whole circle.
std::vector<Arc> support_complement(const CircleDistribution& c);

/// Image of atom-free μ on the circle under t ↦ 2·arctan t, as a
/// piecewise-linear circle distribution within circle distance eps of the
/// exact image.
CircleDistribution tau_transport(const Distribution& mu, double eps);

/// Inverse of tau_transport for atom-free circle distributions: a
/// piecewise-linear distribution on the line within Kuiper distance eps of
/// the exact preimage.
Distribution tau_inverse_transport(const CircleDistribution& c, double eps);

}  // namespace kuiper
