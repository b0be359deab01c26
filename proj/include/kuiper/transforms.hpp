#pragma once

#include <functional>
#include <optional>

#include "kuiper/distribution.hpp"
#include "kuiper/monotone_map.hpp"

namespace kuiper {

/// The transported set function misses mass at an exceptional point.
class MassDeficiencyError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// μ∘g, the measure B ↦ μ(g(B)).
///
/// This is the image of μ under g⁻¹. For an increasing homeomorphism g the
/// CDF is f_μ∘g; for a decreasing one it is 1 − f_μ(g(t)⁻). When g has
/// exceptional points, μ must not charge the range-side one.
Distribution pullback(const Distribution& mu, const MonotoneMap& g);

/// μ ↦ μ∘(g∘r_x) on atom-free measures, for a homeomorphism g of ℝ and
/// x ∈ ℝ ∪ {∞}.
class ContinuousIsometry {
public:
    ContinuousIsometry(MonotoneMap g, ExtReal x);

    Distribution operator()(const Distribution& mu) const;
    const MonotoneMap& map() const { return composite_; }
    const ExtReal& pole() const { return x_; }

private:
    MonotoneMap g_;
    ExtReal x_;
    MonotoneMap composite_;
};

/// μ ↦ μ∘g on every probability measure, for a homeomorphism g of ℝ.
class GeneralIsometry {
public:
    explicit GeneralIsometry(MonotoneMap g);

    Distribution operator()(const Distribution& mu) const { return pullback(mu, g_); }
    const MonotoneMap& map() const { return g_; }

private:
    MonotoneMap g_;
};

/// A strictly monotone map given only by evaluation, possibly undefined at
/// one domain point whose image is ∞ (and then omitting one range point).
struct MapOracle {
    std::function<double(double)> forward;
    std::function<double(double)> inverse;
    Orientation orientation = Orientation::increasing;
    std::optional<Rational> domain_exceptional;
    std::optional<Rational> range_exceptional;
};

MapOracle oracle_from_map(const MonotoneMap& g);

/// Piecewise-linear ν with d_Ku(μ∘o, ν) ≤ eps, for atom-free μ.
///
/// Samples the transported CDF exactly at the oracle's images until every
/// increment between neighbouring nodes is at most eps/2, then connects the
/// samples linearly. Rejects eps ≤ 0 and oracles whose inverse disagrees
/// with the forward map.
Distribution certified_pushforward(const Distribution& mu, const MapOracle& o, double eps);

}  // namespace kuiper
