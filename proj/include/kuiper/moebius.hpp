#pragma once

#include <optional>
#include <string>

#include "kuiper/rational.hpp"

namespace kuiper {

/// A point of the projective line ℝ ∪ {∞} (a single point at infinity).
struct ProjPoint {
    std::optional<Rational> finite;

    static ProjPoint infinity() { return {}; }
    bool is_infinity() const { return !finite.has_value(); }
    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// The fractional-linear function t ↦ (a·t + b) / (c·t + d).
///
/// Used both as a CDF piece (det ≥ 0) and as a piece of a monotone map
/// (det ≠ 0). `normalized()` gives a canonical representative: the
/// coefficients are scaled so that the first non-zero of (c, d) is 1, and
/// every constant function becomes (0·t + k) / (0·t + 1).
struct Moebius {
    Rational a{0}, b{0}, c{0}, d{1};

    static Moebius identity() { return {1, 0, 0, 1}; }
    static Moebius constant(const Rational& k) { return {0, k, 0, 1}; }
    /// t ↦ slope·t + offset.
    static Moebius affine(const Rational& slope, const Rational& offset) { return {slope, offset, 0, 1}; }
    /// The unique Möbius map sending x1, x2, x3 to y1, y2, y3 (distinct finite points).
    static Moebius through(const Rational& x1, const Rational& x2, const Rational& x3,
                           const Rational& y1, const Rational& y2, const Rational& y3);

    Rational det() const { return a * d - b * c; }
    bool is_constant() const { return det().is_zero(); }
    bool is_affine() const { return c.is_zero(); }
    /// −d/c for c ≠ 0.
    std::optional<Rational> pole() const;

    /// Value at a finite point; the denominator must not vanish.
    Rational operator()(const Rational& t) const;
    double eval(double t) const;
    ProjPoint operator()(const ProjPoint& t) const;
    /// lim_{t→±∞}; nullopt when the limit is infinite.
    std::optional<Rational> limit_at_infinity() const;

    Moebius normalized() const;
    Moebius inverse() const { return {d, -b, -c, a}; }
    /// Adds a constant to the function value.
    Moebius plus(const Rational& k) const { return {a + k * c, b + k * d, c, d}; }
    /// Multiplies the function value by a constant.
    Moebius scaled(const Rational& k) const { return {a * k, b * k, c, d}; }
    Moebius negated() const { return scaled(Rational(-1)); }

    /// Same function (projectively equal coefficients).
    bool same_function(const Moebius& other) const;
    std::string to_string() const;
};

/// outer ∘ inner, i.e. t ↦ outer(inner(t)).
Moebius compose(const Moebius& outer, const Moebius& inner);

/// Pointwise sum when it stays fractional-linear: one summand constant, or
/// both sharing a denominator. nullopt otherwise.
std::optional<Moebius> sum_in_class(const Moebius& p, const Moebius& q);

}  // namespace kuiper
