#include "kuiper/interval.hpp"

namespace kuiper {

Interval::Interval(ExtReal lo, ExtReal hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (!lo_.is_finite()) lo_closed_ = false;
    if (!hi_.is_finite()) hi_closed_ = false;
    if (lo_.is_plus_infinity() || hi_.is_minus_infinity() || hi_ < lo_) {
        throw ValidationError("interval endpoints out of order: " + lo_.to_string() + ", " + hi_.to_string());
    }
    if (lo_ == hi_ && !(lo_closed_ && hi_closed_)) {
        throw ValidationError("empty interval at " + lo_.to_string());
    }
}

bool Interval::contains(const Rational& t) const {
    const ExtReal x(t);
    const bool above = lo_closed_ ? lo_ <= x : lo_ < x;
    const bool below = hi_closed_ ? x <= hi_ : x < hi_;
    return above && below;
}

bool Interval::contains(const Interval& o) const {
    const bool lo_ok = lo_ < o.lo_ || (lo_ == o.lo_ && (lo_closed_ || !o.lo_closed_));
    const bool hi_ok = o.hi_ < hi_ || (hi_ == o.hi_ && (hi_closed_ || !o.hi_closed_));
    return lo_ok && hi_ok;
}

std::string Interval::to_string() const {
    if (is_degenerate()) return "{" + lo_.to_string() + "}";
    return std::string(lo_closed_ ? "[" : "(") + lo_.to_string() + "," + hi_.to_string() + (hi_closed_ ? "]" : ")");
}

}  // namespace kuiper
