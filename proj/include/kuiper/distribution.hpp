#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kuiper/interval.hpp"
#include "kuiper/moebius.hpp"
#include "kuiper/rational.hpp"

namespace kuiper {

/// A Borel probability measure on ℝ whose distribution function is
/// piecewise fractional-linear with finitely many jumps.
///
/// The CDF is stored as breakpoints t₀ < … < t_{n−1} and n + 1 pieces;
/// piece i is the CDF on the open segment (t_{i−1}, t_i), with t_{−1} = −∞
/// and t_n = +∞. Values at a breakpoint are the limits of the adjacent
/// pieces, so the atom at t_i is piece_{i+1}(t_i) − piece_i(t_i).
///
/// Instances are always validated and canonical: no breakpoint without an
/// atom separates two identical pieces, and all pieces are normalized.
class Distribution {
public:
    /// Validates monotonicity, pole placement, the limits 0 and 1 at ∓∞,
    /// non-negative jumps, then canonicalizes.
    static Distribution from_pieces(std::vector<Rational> nodes, std::vector<Moebius> pieces);

    const std::vector<Rational>& nodes() const { return nodes_; }
    const std::vector<Moebius>& pieces() const { return pieces_; }

    /// f(t) = μ((−∞, t]).
    Rational cdf(const Rational& t) const;
    /// f(t−) = μ((−∞, t)).
    Rational cdf_left(const Rational& t) const;
    Rational atom(const Rational& t) const { return cdf(t) - cdf_left(t); }

    /// Index of the piece whose closed segment is used to evaluate f at t.
    std::size_t piece_index(const Rational& t) const;
    /// Limit of piece i at the left (resp. right) end of its segment.
    Rational piece_left_limit(std::size_t i) const;
    Rational piece_right_limit(std::size_t i) const;
    /// True when piece i is strictly increasing (positive density).
    bool piece_has_density(std::size_t i) const { return pieces_[i].det().sign() > 0; }

    /// (location, mass) of every atom, ascending.
    std::vector<std::pair<Rational, Rational>> atoms() const;
    bool is_continuous() const;
    bool is_dirac() const;
    bool is_purely_atomic() const;
    /// No fractional-linear piece with c ≠ 0.
    bool is_piecewise_linear() const;

    friend bool operator==(const Distribution& a, const Distribution& b);

private:
    Distribution() = default;
    std::vector<Rational> nodes_;
    std::vector<Moebius> pieces_;
};

Distribution make_uniform(const Rational& lo, const Rational& hi);
Distribution make_dirac(const Rational& x);

/// Convex combination. Throws ValidationError if weights are not positive,
/// do not sum to 1, or the mixture leaves the fractional-linear class.
Distribution mix(const std::vector<std::pair<Rational, Distribution>>& parts);

Rational interval_mass(const Distribution& mu, const Interval& interval);

/// ν(A) = μ(A ∩ I) / μ(I). Throws ValidationError when μ(I) = 0.
Distribution condition_on_interval(const Distribution& mu, const Interval& interval);

/// Smallest y with f(y) ≥ level, for 0 < level ≤ 1.
Rational quantile(const Distribution& mu, const Rational& level);

/// n equal atoms at the lower quantiles of μ (ties merged).
Distribution quantize(const Distribution& mu, std::size_t n);

struct CoIntervalSupport {
    std::vector<Interval> components;     ///< connected components of C_μ, ascending
    Interval hull;                        ///< conv(C_μ)
    std::vector<Interval> bounded_gaps;   ///< bounded components of N_μ, ascending
};

/// Components of the closed support S_μ, ascending.
std::vector<Interval> closed_support(const Distribution& mu);
/// C_μ = ℝ minus the union of every non-degenerate μ-null interval.
CoIntervalSupport co_interval_support(const Distribution& mu);

/// ν ≪ μ: atoms of ν sit on atoms of μ and ν has density only where μ does.
bool is_absolutely_continuous_wrt(const Distribution& nu, const Distribution& mu);

}  // namespace kuiper
