#pragma once

#include <cstddef>
#include <cstdint>

#include "kuiper/distribution.hpp"
#include "kuiper/monotone_map.hpp"

namespace kuiper {

/// SplitMix64. `split()` derives an independent stream, so a trial's
/// generator depends only on the seed and the trial index.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    long range(long lo, long hi);
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
    /// Uniform in [0, 1).
    double unit();
    SplitMix64 split() { return SplitMix64(next() ^ 0xd1b54a32d192ed03ULL); }

private:
    std::uint64_t state_;
};

/// A rational in [lo, hi] on the grid of step 1/den.
Rational random_rational(SplitMix64& rng, long lo, long hi, long den);

struct DistributionShape {
    std::size_t max_components = 4;  ///< atoms and uniform blocks
    bool atoms = true;
    bool densities = true;
    bool moebius_tails = true;       ///< unbounded fractional-linear tails
};

enum class Complexity { small, medium, large };
DistributionShape shape_for(Complexity c);

/// A mixture of atoms, uniform blocks separated by random gaps (possibly
/// touching), and optional fractional-linear tails beyond them.
Distribution random_distribution(SplitMix64& rng, const DistributionShape& shape);

/// Piecewise-linear homeomorphism of ℝ with up to `max_knots` knots.
MonotoneMap random_pwl_map(SplitMix64& rng, std::size_t max_knots, Orientation o);

/// Piecewise fractional-linear homeomorphism of ℝ with up to `max_pieces`
/// pieces and affine tails.
MonotoneMap random_moebius_map(SplitMix64& rng, std::size_t max_pieces, Orientation o);

/// Either kind of homeomorphism, random orientation, composed with an
/// inversion about a random pole half of the time.
MonotoneMap random_map(SplitMix64& rng, std::size_t max_pieces);

}  // namespace kuiper
