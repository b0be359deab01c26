#pragma once

#include <vector>

#include "kuiper/distribution.hpp"
#include "kuiper/interval.hpp"

namespace kuiper {

/// A required property of the arguments does not hold; distinct from a
/// malformed input.
class PreconditionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Where a measure at Kuiper distance 1 from a non-Dirac μ may live.
struct UnitDistanceRegions {
    std::vector<Interval> outer;                 ///< ℝ ∖ conv(C_μ), at most two intervals
    std::vector<Interval> gaps;                  ///< bounded components of N_μ
    std::vector<Rational> dirac_excluded_points; ///< atoms of μ
};

/// Throws PreconditionError for a Dirac measure; use the atom test instead.
UnitDistanceRegions unit_distance_regions(const Distribution& mu);

/// d_Ku(μ, ν) = 1, decided from supports and atoms without computing the
/// metric.
///
/// With δ_x on either side the answer is "the other measure has no atom at
/// x". Otherwise ν must put all its mass on the outer region of μ or on a
/// single gap.
bool is_unit_distant(const Distribution& mu, const Distribution& nu);

/// The members of `universe` at distance 1 from every member of `set`.
std::vector<Distribution> polar(const std::vector<Distribution>& set, const std::vector<Distribution>& universe);

/// For ν ≪ μ: every probe θ with d(μ, θ) = 1 also has d(θ, ν) = 1.
/// Returns false on the first violating probe. Throws PreconditionError when
/// ν is not absolutely continuous with respect to μ.
bool absolute_continuity_polar_check(const Distribution& mu, const Distribution& nu,
                                     const std::vector<Distribution>& probes);

/// Probe measures at distance 1 from μ: per region a uniform and a two-point
/// measure, and one measure split across both outer half-lines. For δ_x,
/// measures avoiding x.
std::vector<Distribution> unit_distance_probes(const Distribution& mu);

}  // namespace kuiper
