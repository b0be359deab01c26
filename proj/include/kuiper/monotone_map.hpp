#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kuiper/interval.hpp"
#include "kuiper/moebius.hpp"
#include "kuiper/rational.hpp"

namespace kuiper {

enum class Orientation { increasing, decreasing };

const char* to_string(Orientation o);

struct MapPiece {
    Interval domain;  ///< open segment between consecutive knots
    Moebius f;
};

/// A bijection of the projective line ℝ ∪ {∞} that is fractional-linear
/// between finitely many knots and preserves or reverses orientation.
///
/// Restricted to ℝ it is a bijection from ℝ minus at most one domain point
/// (sent to ∞) onto ℝ minus at most one range point (the image of ∞). Both
/// are absent exactly when the map is a homeomorphism of ℝ.
class MonotoneMap {
public:
    /// Piece i acts on the open segment (knot_{i−1}, knot_i), with
    /// knot_{−1} = −∞ and knot_n = +∞. Validates non-degeneracy, a common
    /// orientation, continuity at every knot and at ∞, and that the image
    /// wraps the projective line exactly once.
    static MonotoneMap from_pieces(std::vector<Rational> knots, std::vector<Moebius> pieces);

    const std::vector<Rational>& knots() const { return knots_; }
    const std::vector<Moebius>& pieces() const { return pieces_; }
    std::vector<MapPiece> piece_list() const;
    Orientation orientation() const { return orientation_; }

    /// Index of the piece used at t (the right-hand piece at a knot).
    std::size_t piece_index(const Rational& t) const;

    ProjPoint operator()(const ProjPoint& t) const;
    /// Throws std::domain_error at the domain exceptional point.
    Rational operator()(const Rational& t) const;
    double eval(double t) const;

    /// The finite point sent to ∞, if any.
    std::optional<Rational> domain_exceptional() const;
    /// The finite image of ∞, if any.
    std::optional<Rational> range_exceptional() const;
    /// True when the map restricts to a homeomorphism of ℝ.
    bool is_whole_line() const { return !range_exceptional().has_value(); }

    friend bool operator==(const MonotoneMap& x, const MonotoneMap& y);

private:
    MonotoneMap() = default;
    std::vector<Rational> knots_;
    std::vector<Moebius> pieces_;
    Orientation orientation_ = Orientation::increasing;
};

MonotoneMap identity_map();
/// t ↦ slope·t + offset, slope ≠ 0.
MonotoneMap affine_map(const Rational& slope, const Rational& offset);
/// r_x(t) = 1/(t − x) for finite x; the identity for x = ∞.
MonotoneMap r_map(const ExtReal& x);
/// Piecewise-linear homeomorphism through the given (t, g(t)) points with
/// the given slopes on the two unbounded pieces.
MonotoneMap pwl_map(const std::vector<std::pair<Rational, Rational>>& points, const Rational& left_slope,
                    const Rational& right_slope);

/// g ∘ h.
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& h);
MonotoneMap invert(const MonotoneMap& g);

}  // namespace kuiper
