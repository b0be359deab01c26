#pragma once

#include "kuiper/distribution.hpp"
#include "kuiper/interval.hpp"
#include "kuiper/rational.hpp"

namespace kuiper {

/// An interval I attaining the Kuiper maximum, with μ(I) − ν(I).
struct Witness {
    Interval interval;
    Rational signed_value;
    bool exact = true;
};

struct WitnessResult {
    Witness witness;
    Scalar distance;
};

/// sup_t |f_μ(t) − f_ν(t)|.
Scalar ks_distance(const Distribution& mu, const Distribution& nu);

/// sup(f_μ − f_ν) + sup(f_ν − f_μ), each one-sided supremum clamped at 0
/// (its value in the limit t → ±∞).
Scalar kuiper_distance(const Distribution& mu, const Distribution& nu);

/// Kuiper distance together with an interval (possibly a singleton) on
/// which |μ(I) − ν(I)| attains it.
///
/// Among maximizers the interval with more closed endpoints wins, then the
/// lexicographically smallest (lo, hi). A zero distance is witnessed by a
/// singleton carrying no mass under either measure.
WitnessResult kuiper_witness(const Distribution& mu, const Distribution& nu);

/// sup_B |μ(B) − ν(B)|: the mass of the positive part of μ − ν.
Scalar tv_distance(const Distribution& mu, const Distribution& nu);

struct OracleResult {
    Rational value;
    bool approximate = false;  ///< fractional-linear pieces forced sampling
};

/// max |μ(I) − ν(I)| over every interval whose endpoints are breakpoints of
/// either measure (or ±∞), in all four openness combinations, plus all
/// singletons. Exact on piecewise-linear input; otherwise each segment is
/// additionally sampled at 64 interior points and the result is flagged.
OracleResult brute_force_interval_sup(const Distribution& mu, const Distribution& nu);

/// d_Ku(μ, δ_x) = 1 − μ({x}).
Rational dirac_distance(const Distribution& mu, const Rational& x);

}  // namespace kuiper
