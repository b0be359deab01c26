#include "kuiper/distribution.hpp"

#include <algorithm>

#include "detail.hpp"

namespace kuiper {

namespace {

bool pole_inside_closed_segment(const Moebius& m, const ExtReal& lo, const ExtReal& hi) {
    const auto p = m.pole();
    if (!p) return false;
    const ExtReal x(*p);
    return lo <= x && x <= hi;
}

}  // namespace

Distribution Distribution::from_pieces(std::vector<Rational> nodes, std::vector<Moebius> pieces) {
    if (nodes.empty()) throw ValidationError("distribution needs at least one breakpoint");
    if (pieces.size() != nodes.size() + 1) throw ValidationError("distribution needs one piece per segment");
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        if (!(nodes[i - 1] < nodes[i])) throw ValidationError("breakpoints must be strictly increasing");
    }
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        pieces[i] = pieces[i].normalized();
        const Moebius& p = pieces[i];
        if (p.det().sign() < 0) throw ValidationError("CDF piece " + std::to_string(i) + " is decreasing");
        const ExtReal lo = i == 0 ? ExtReal::minus_infinity() : ExtReal(nodes[i - 1]);
        const ExtReal hi = i == nodes.size() ? ExtReal::plus_infinity() : ExtReal(nodes[i]);
        if (pole_inside_closed_segment(p, lo, hi)) {
            throw ValidationError("CDF piece " + std::to_string(i) + " has a pole on its segment");
        }
    }
    const auto left_tail = pieces.front().limit_at_infinity();
    if (!left_tail || !left_tail->is_zero()) throw ValidationError("CDF must tend to 0 at -inf");
    const auto right_tail = pieces.back().limit_at_infinity();
    if (!right_tail || *right_tail != Rational(1)) throw ValidationError("total mass must be 1 (CDF must tend to 1 at +inf)");

    Distribution out;
    out.nodes_.reserve(nodes.size());
    out.pieces_.reserve(pieces.size());
    out.pieces_.push_back(pieces.front());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        // out.pieces_.back() is always the same function as pieces[i].
        const int jump = cmp(pieces[i + 1](nodes[i]).raw(), out.pieces_.back()(nodes[i]).raw());
        if (jump < 0) throw ValidationError("negative jump at " + nodes[i].to_string());
        if (jump == 0 && pieces[i + 1].same_function(out.pieces_.back())) continue;
        out.nodes_.push_back(std::move(nodes[i]));
        out.pieces_.push_back(std::move(pieces[i + 1]));
    }
    out.nodes_.shrink_to_fit();
    out.pieces_.shrink_to_fit();
    return out;
}

std::size_t Distribution::piece_index(const Rational& t) const {
    return static_cast<std::size_t>(std::upper_bound(nodes_.begin(), nodes_.end(), t) - nodes_.begin());
}

Rational Distribution::cdf(const Rational& t) const { return pieces_[piece_index(t)](t); }

Rational Distribution::cdf_left(const Rational& t) const {
    const auto i = static_cast<std::size_t>(std::lower_bound(nodes_.begin(), nodes_.end(), t) - nodes_.begin());
    return pieces_[i](t);
}

Rational Distribution::piece_left_limit(std::size_t i) const {
    return i == 0 ? Rational(0) : pieces_[i](nodes_[i - 1]);
}

Rational Distribution::piece_right_limit(std::size_t i) const {
    return i == nodes_.size() ? Rational(1) : pieces_[i](nodes_[i]);
}

std::vector<std::pair<Rational, Rational>> Distribution::atoms() const {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        Rational jump = pieces_[i + 1](nodes_[i]) - pieces_[i](nodes_[i]);
        if (!jump.is_zero()) out.emplace_back(nodes_[i], std::move(jump));
    }
    return out;
}

bool Distribution::is_continuous() const { return atoms().empty(); }

bool Distribution::is_dirac() const {
    return nodes_.size() == 1 && pieces_[0].is_constant() && pieces_[1].is_constant();
}

bool Distribution::is_purely_atomic() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Moebius& m) { return m.is_constant(); });
}

bool Distribution::is_piecewise_linear() const {
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Moebius& m) { return m.is_affine(); });
}

bool operator==(const Distribution& x, const Distribution& y) {
    if (x.nodes_ != y.nodes_ || x.pieces_.size() != y.pieces_.size()) return false;
    for (std::size_t i = 0; i < x.pieces_.size(); ++i) {
        if (!x.pieces_[i].same_function(y.pieces_[i])) return false;
    }
    return true;
}

Distribution make_uniform(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw ValidationError("uniform distribution needs lo < hi");
    const Rational width = hi - lo;
    return Distribution::from_pieces({lo, hi}, {Moebius::constant(0), Moebius::affine(Rational(1) / width, -lo / width),
                                                Moebius::constant(1)});
}

Distribution make_dirac(const Rational& x) {
    return Distribution::from_pieces({x}, {Moebius::constant(0), Moebius::constant(1)});
}

Distribution mix(const std::vector<std::pair<Rational, Distribution>>& parts) {
    if (parts.empty()) throw ValidationError("mixture of no distributions");
    Rational total(0);
    for (const auto& [w, _] : parts) {
        if (w.sign() <= 0) throw ValidationError("mixture weights must be positive");
        total += w;
    }
    if (total != Rational(1)) throw ValidationError("mixture weights sum to " + total.to_string() + ", not 1");

    std::vector<Rational> nodes;
    for (const auto& [_, d] : parts) nodes.insert(nodes.end(), d.nodes().begin(), d.nodes().end());
    detail::sort_unique(nodes);

    std::vector<Moebius> pieces;
    for (std::size_t seg = 0; seg <= nodes.size(); ++seg) {
        const Rational s = detail::segment_sample(nodes, seg);
        std::optional<Moebius> acc = Moebius::constant(0);
        for (const auto& [w, d] : parts) {
            acc = sum_in_class(*acc, d.pieces()[d.piece_index(s)].scaled(w));
            if (!acc) throw ValidationError("mixture leaves the fractional-linear CDF class near " + s.to_string());
        }
        pieces.push_back(*acc);
    }
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

Rational interval_mass(const Distribution& mu, const Interval& interval) {
    const Rational upper = interval.hi().is_plus_infinity() ? Rational(1)
                         : interval.hi_closed()              ? mu.cdf(interval.hi().value())
                                                             : mu.cdf_left(interval.hi().value());
    const Rational lower = interval.lo().is_minus_infinity() ? Rational(0)
                         : interval.lo_closed()               ? mu.cdf_left(interval.lo().value())
                                                              : mu.cdf(interval.lo().value());
    return upper - lower;
}

Distribution condition_on_interval(const Distribution& mu, const Interval& interval) {
    const Rational mass = interval_mass(mu, interval);
    if (mass.is_zero()) throw ValidationError("conditioning on null interval " + interval.to_string());
    const Rational base = interval.lo().is_minus_infinity() ? Rational(0)
                        : interval.lo_closed()               ? mu.cdf_left(interval.lo().value())
                                                             : mu.cdf(interval.lo().value());
    std::vector<Rational> nodes;
    for (const auto& t : mu.nodes()) {
        if (ExtReal(t) > interval.lo() && ExtReal(t) < interval.hi()) nodes.push_back(t);
    }
    if (interval.lo().is_finite()) nodes.push_back(interval.lo().value());
    if (interval.hi().is_finite()) nodes.push_back(interval.hi().value());
    detail::sort_unique(nodes);

    std::vector<Moebius> pieces;
    for (std::size_t seg = 0; seg <= nodes.size(); ++seg) {
        const Rational s = detail::segment_sample(nodes, seg);
        if (ExtReal(s) < interval.lo()) {
            pieces.push_back(Moebius::constant(0));
        } else if (ExtReal(s) > interval.hi()) {
            pieces.push_back(Moebius::constant(1));
        } else {
            pieces.push_back(mu.pieces()[mu.piece_index(s)].plus(-base).scaled(Rational(1) / mass));
        }
    }
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

Rational quantile(const Distribution& mu, const Rational& level) {
    if (level.sign() <= 0 || level > Rational(1)) throw ValidationError("quantile level must lie in (0,1]");
    const auto& nodes = mu.nodes();
    for (std::size_t i = 0; i < mu.pieces().size(); ++i) {
        const Rational lo = mu.piece_left_limit(i);
        const Rational hi = mu.piece_right_limit(i);
        if (lo < level && level < hi) {
            const Moebius& p = mu.pieces()[i];
            return (level * p.d - p.b) / (p.a - level * p.c);
        }
        if (i < nodes.size() && mu.cdf(nodes[i]) >= level) return nodes[i];
    }
    throw ValidationError("quantile at level " + level.to_string() + " is +inf");
}

Distribution quantize(const Distribution& mu, std::size_t n) {
    if (n == 0) throw ValidationError("quantize needs n >= 1");
    const Rational step(1L, static_cast<long>(n));
    std::vector<Rational> points;
    points.reserve(n);
    // The lowest atom sits at the left end of the support; an unbounded
    // left tail has none, so it shares the first interior quantile (the
    // median for n = 1, whose level-1 quantile may be infinite).
    const Rational first_level = n == 1 ? Rational(1, 2) : step;
    points.push_back(mu.pieces().front().is_constant() ? mu.nodes().front() : quantile(mu, first_level));
    for (std::size_t i = 1; i < n; ++i) points.push_back(quantile(mu, step * Rational(static_cast<long>(i))));

    std::vector<Rational> nodes;
    std::vector<Moebius> pieces{Moebius::constant(0)};
    Rational level(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        level += step;
        if (i + 1 < points.size() && points[i + 1] == points[i]) continue;
        nodes.push_back(points[i]);
        pieces.push_back(Moebius::constant(level));
    }
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

}  // namespace kuiper
