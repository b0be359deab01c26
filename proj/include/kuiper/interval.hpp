#pragma once

#include <string>

#include "kuiper/rational.hpp"

namespace kuiper {

/// A non-empty, possibly degenerate interval of ℝ.
///
/// Infinite endpoints are always open, and a degenerate interval is the
/// closed singleton {lo}. Construction enforces both.
class Interval {
public:
    Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed);

    static Interval closed(const Rational& lo, const Rational& hi) { return {lo, hi, true, true}; }
    static Interval open(ExtReal lo, ExtReal hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval point(const Rational& x) { return {x, x, true, true}; }
    static Interval whole_line() { return {ExtReal::minus_infinity(), ExtReal::plus_infinity(), false, false}; }

    const ExtReal& lo() const { return lo_; }
    const ExtReal& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool is_degenerate() const { return lo_ == hi_; }
    bool is_bounded() const { return lo_.is_finite() && hi_.is_finite(); }
    bool contains(const Rational& t) const;
    /// True when `other` is a subset of this interval.
    bool contains(const Interval& other) const;

    /// Interval notation: "[1,2]", "(-inf,0]", "{3}".
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    ExtReal lo_;
    ExtReal hi_;
    bool lo_closed_ = false;
    bool hi_closed_ = false;
};

}  // namespace kuiper
