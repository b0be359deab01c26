#include "kuiper/monotone_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "detail.hpp"

namespace kuiper {

namespace {

double angle(const ProjPoint& p) { return p.is_infinity() ? std::numbers::pi : 2.0 * std::atan(p.finite->to_double()); }

ProjPoint knot_point(const std::vector<Rational>& knots, std::size_t i) { return {knots[i]}; }

// A point strictly inside segment `seg`; valid with no knots at all.
Rational sample(const std::vector<Rational>& knots, std::size_t seg) {
    return knots.empty() ? Rational(0) : detail::segment_sample(knots, seg);
}

std::size_t segment_of(const std::vector<Rational>& knots, const Rational& t) {
    return static_cast<std::size_t>(std::upper_bound(knots.begin(), knots.end(), t) - knots.begin());
}

}  // namespace

const char* to_string(Orientation o) { return o == Orientation::increasing ? "inc" : "dec"; }

MonotoneMap MonotoneMap::from_pieces(std::vector<Rational> knots, std::vector<Moebius> pieces) {
    if (pieces.size() != knots.size() + 1) throw ValidationError("monotone map needs one piece per segment");
    for (std::size_t i = 1; i < knots.size(); ++i) {
        if (!(knots[i - 1] < knots[i])) throw ValidationError("map knots must be strictly increasing");
    }
    for (auto& p : pieces) {
        p = p.normalized();
        if (p.is_constant()) throw ValidationError("map piece " + p.to_string() + " is constant");
    }
    const int sign = pieces.front().det().sign();
    for (const auto& p : pieces) {
        if (p.det().sign() != sign) throw ValidationError("map pieces mix increasing and decreasing branches");
    }
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (pieces[i](knot_point(knots, i)) != pieces[i + 1](knot_point(knots, i))) {
            throw ValidationError("map is discontinuous at " + knots[i].to_string());
        }
    }
    if (pieces.front()(ProjPoint::infinity()) != pieces.back()(ProjPoint::infinity())) {
        throw ValidationError("map limits at -inf and +inf differ");
    }

    // Total turning of the image around the projective line; a bijection
    // turns exactly once.
    double turning = 0.0;
    if (knots.empty()) {
        turning = 2.0 * std::numbers::pi;
    } else {
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const ProjPoint from = i == 0 ? ProjPoint::infinity() : knot_point(knots, i - 1);
            const ProjPoint to = i == knots.size() ? ProjPoint::infinity() : knot_point(knots, i);
            double arc = angle(pieces[i](to)) - angle(pieces[i](from));
            if (sign < 0) arc = -arc;
            arc = std::fmod(arc, 2.0 * std::numbers::pi);
            if (arc <= 0.0) arc += 2.0 * std::numbers::pi;
            turning += arc;
        }
    }
    if (std::lround(turning / (2.0 * std::numbers::pi)) != 1) {
        throw ValidationError("map is not injective: image wraps the line more than once");
    }

    MonotoneMap out;
    out.orientation_ = sign > 0 ? Orientation::increasing : Orientation::decreasing;
    out.pieces_.push_back(pieces.front());
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (pieces[i + 1].same_function(out.pieces_.back())) continue;
        out.knots_.push_back(std::move(knots[i]));
        out.pieces_.push_back(pieces[i + 1]);
    }
    return out;
}

std::vector<MapPiece> MonotoneMap::piece_list() const {
    std::vector<MapPiece> out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const ExtReal lo = i == 0 ? ExtReal::minus_infinity() : ExtReal(knots_[i - 1]);
        const ExtReal hi = i == knots_.size() ? ExtReal::plus_infinity() : ExtReal(knots_[i]);
        out.push_back({Interval::open(lo, hi), pieces_[i]});
    }
    return out;
}

std::size_t MonotoneMap::piece_index(const Rational& t) const { return segment_of(knots_, t); }

ProjPoint MonotoneMap::operator()(const ProjPoint& t) const {
    if (t.is_infinity()) return pieces_.front()(t);
    return pieces_[piece_index(*t.finite)](t);
}

Rational MonotoneMap::operator()(const Rational& t) const {
    const ProjPoint y = (*this)(ProjPoint{t});
    if (y.is_infinity()) throw std::domain_error("map evaluated at its exceptional point " + t.to_string());
    return *y.finite;
}

double MonotoneMap::eval(double t) const {
    const auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                     [](double x, const Rational& k) { return x < k.to_double(); });
    return pieces_[static_cast<std::size_t>(it - knots_.begin())].eval(t);
}

std::optional<Rational> MonotoneMap::domain_exceptional() const {
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (pieces_[i](knot_point(knots_, i)).is_infinity()) return knots_[i];
    }
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto pole = pieces_[i].pole();
        if (pole && piece_index(*pole) == i && (i == 0 || *pole != knots_[i - 1])) return pole;
    }
    return std::nullopt;
}

std::optional<Rational> MonotoneMap::range_exceptional() const { return (*this)(ProjPoint::infinity()).finite; }

bool operator==(const MonotoneMap& x, const MonotoneMap& y) {
    if (x.knots_ != y.knots_ || x.pieces_.size() != y.pieces_.size()) return false;
    for (std::size_t i = 0; i < x.pieces_.size(); ++i) {
        if (!x.pieces_[i].same_function(y.pieces_[i])) return false;
    }
    return true;
}

MonotoneMap identity_map() { return MonotoneMap::from_pieces({}, {Moebius::identity()}); }

MonotoneMap affine_map(const Rational& slope, const Rational& offset) {
    if (slope.is_zero()) throw ValidationError("affine map needs a nonzero slope");
    return MonotoneMap::from_pieces({}, {Moebius::affine(slope, offset)});
}

MonotoneMap r_map(const ExtReal& x) {
    if (!x.is_finite()) return identity_map();
    return MonotoneMap::from_pieces({}, {Moebius{0, 1, 1, -x.value()}});
}

MonotoneMap pwl_map(const std::vector<std::pair<Rational, Rational>>& points, const Rational& left_slope,
                    const Rational& right_slope) {
    if (points.empty()) throw ValidationError("piecewise-linear map needs at least one point");
    const int sign = left_slope.sign();
    if (sign == 0 || right_slope.sign() != sign) throw ValidationError("tail slopes must be nonzero and of equal sign");
    std::vector<Rational> knots;
    std::vector<Moebius> pieces;
    const auto& [t0, y0] = points.front();
    pieces.push_back(Moebius::affine(left_slope, y0 - left_slope * t0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& [t, y] = points[i];
        knots.push_back(t);
        if (i + 1 == points.size()) break;
        const auto& [t1, y1] = points[i + 1];
        if (!(t < t1) || (y1 - y).sign() != sign) {
            throw ValidationError("map points must be strictly monotone in both coordinates, consistently with the slopes");
        }
        const Rational slope = (y1 - y) / (t1 - t);
        pieces.push_back(Moebius::affine(slope, y - slope * t));
    }
    const auto& [tn, yn] = points.back();
    pieces.push_back(Moebius::affine(right_slope, yn - right_slope * tn));
    return MonotoneMap::from_pieces(std::move(knots), std::move(pieces));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& h) {
    const MonotoneMap h_inv = invert(h);
    std::vector<Rational> knots = h.knots();
    for (const auto& k : g.knots()) {
        if (auto s = h_inv(ProjPoint{k}).finite) knots.push_back(*s);
    }
    if (auto s = h.domain_exceptional()) knots.push_back(*s);
    detail::sort_unique(knots);

    std::vector<Moebius> pieces;
    for (std::size_t seg = 0; seg <= knots.size(); ++seg) {
        const Rational s = sample(knots, seg);
        const Rational y = h(s);
        pieces.push_back(compose(g.pieces()[g.piece_index(y)], h.pieces()[h.piece_index(s)]));
    }
    return MonotoneMap::from_pieces(std::move(knots), std::move(pieces));
}

MonotoneMap invert(const MonotoneMap& g) {
    std::vector<Rational> knots;
    for (const auto& k : g.knots()) {
        if (auto y = g(ProjPoint{k}).finite) knots.push_back(*y);
    }
    if (auto p = g.range_exceptional()) knots.push_back(*p);
    detail::sort_unique(knots);

    std::vector<Moebius> pieces;
    for (std::size_t seg = 0; seg <= knots.size(); ++seg) {
        const Rational y = sample(knots, seg);
        std::optional<Moebius> found;
        for (std::size_t i = 0; i < g.pieces().size() && !found; ++i) {
            const Moebius inv = g.pieces()[i].inverse();
            const auto t = inv(ProjPoint{y}).finite;
            if (t && g.piece_index(*t) == i && (i == 0 || *t != g.knots()[i - 1])) found = inv;
        }
        if (!found) throw std::logic_error("inverse branch not found for a validated map");
        pieces.push_back(*found);
    }
    return MonotoneMap::from_pieces(std::move(knots), std::move(pieces));
}

}  // namespace kuiper
