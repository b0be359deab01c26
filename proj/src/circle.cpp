#include "kuiper/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace kuiper {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMassTolerance = 1e-12;

}  // namespace

double wrap_angle(double theta) {
    if (!std::isfinite(theta)) throw ValidationError("angle must be finite");
    double r = std::fmod(theta + kPi, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    const double out = r - kPi;
    return out >= kPi ? -kPi : out;
}

namespace {

void check_arc(double extent, bool start_closed, bool end_closed) {
    if (!std::isfinite(extent) || extent < 0.0 || extent > kTwoPi) throw ValidationError("arc extent must lie in [0, 2pi]");
    if (extent == 0.0 && !(start_closed && end_closed)) throw ValidationError("degenerate arc must be closed");
    if (extent == kTwoPi && start_closed && end_closed) throw ValidationError("arc of extent 2pi cannot be closed at both ends");
}

}  // namespace

Arc Arc::make(double start, double extent, bool start_closed, bool end_closed) {
    check_arc(extent, start_closed, end_closed);
    const double s = wrap_angle(start);
    const double e = extent == 0.0 || extent == kTwoPi ? s : wrap_angle(s + extent);
    return {s, extent, e, start_closed, end_closed};
}

Arc Arc::between(double start, double end, bool start_closed, bool end_closed, bool full) {
    const double s = wrap_angle(start);
    const double e = wrap_angle(end);
    double extent = e - s;
    if (extent < 0.0) extent += kTwoPi;
    if (extent == 0.0 && full) extent = kTwoPi;
    extent = std::min(extent, kTwoPi);
    check_arc(extent, start_closed, end_closed);
    return {s, extent, e, start_closed, end_closed};
}

Arc Arc::full() { return make(-kPi, kTwoPi, true, false); }

Arc Arc::rotated(double theta) const {
    return between(start + theta, end + theta, start_closed, end_closed, extent == kTwoPi);
}

Arc Arc::complement() const {
    if (extent == kTwoPi && (start_closed || end_closed)) throw ValidationError("complement of the full circle is empty");
    return between(end, start, !end_closed, !start_closed, extent == 0.0);
}

CircleDistribution CircleDistribution::from_knots(std::vector<Knot> knots) {
    if (knots.size() < 2) throw ValidationError("circle distribution needs knots at -pi and pi");
    if (knots.front().angle != -kPi || knots.back().angle != kPi) {
        throw ValidationError("circle distribution knots must start at -pi and end at pi");
    }
    std::vector<Knot> merged;
    for (const auto& k : knots) {
        if (!std::isfinite(k.below) || !std::isfinite(k.above)) throw ValidationError("circle CDF values must be finite");
        if (!merged.empty() && k.angle < merged.back().angle) throw ValidationError("circle knots must be ascending");
        if (!merged.empty() && k.angle == merged.back().angle) {
            merged.back().above = k.above;
            continue;
        }
        merged.push_back(k);
    }
    if (std::abs(merged.front().below) > kMassTolerance) throw ValidationError("circle CDF must start at 0");
    if (std::abs(merged.back().below - 1.0) > kMassTolerance || std::abs(merged.back().above - 1.0) > kMassTolerance) {
        throw ValidationError("circle distribution total mass must be 1");
    }
    merged.front().below = 0.0;
    merged.back().below = merged.back().above = 1.0;
    double level = 0.0;
    for (auto& k : merged) {
        for (double* v : {&k.below, &k.above}) {
            if (*v < level - kMassTolerance || *v > 1.0 + kMassTolerance) {
                throw ValidationError("circle CDF must be nondecreasing with values in [0,1]");
            }
            *v = std::clamp(*v, level, 1.0);
            level = *v;
        }
    }
    CircleDistribution out;
    out.knots_ = std::move(merged);
    return out;
}

CircleDistribution CircleDistribution::uniform() { return from_knots({{-kPi, 0.0, 0.0}, {kPi, 1.0, 1.0}}); }

CircleDistribution CircleDistribution::uniform_arc(double start, double extent) {
    if (!(extent > 0.0) || extent > kTwoPi) throw ValidationError("uniform arc extent must lie in (0, 2pi]");
    const double s = wrap_angle(start);
    const double e = s + extent;
    if (e <= kPi) return from_knots({{-kPi, 0.0, 0.0}, {s, 0.0, 0.0}, {e, 1.0, 1.0}, {kPi, 1.0, 1.0}});
    const double w = e - kTwoPi;
    const double r = std::clamp((w + kPi) / extent, 0.0, 1.0);
    return from_knots({{-kPi, 0.0, 0.0}, {w, r, r}, {std::max(s, w), r, r}, {kPi, 1.0, 1.0}});
}

CircleDistribution CircleDistribution::atom(double angle) {
    const double a = wrap_angle(angle);
    if (a == -kPi) return from_knots({{-kPi, 0.0, 1.0}, {kPi, 1.0, 1.0}});
    return from_knots({{-kPi, 0.0, 0.0}, {a, 0.0, 1.0}, {kPi, 1.0, 1.0}});
}

double CircleDistribution::cdf(double theta) const {
    if (theta >= kPi) return 1.0;
    if (theta < -kPi) return 0.0;
    const auto it = std::lower_bound(knots_.begin(), knots_.end(), theta,
                                     [](const Knot& k, double x) { return k.angle < x; });
    if (it->angle == theta) return it->above;
    const Knot& a = *(it - 1);
    return a.above + (it->below - a.above) * (theta - a.angle) / (it->angle - a.angle);
}

double CircleDistribution::cdf_left(double theta) const {
    if (theta <= -kPi) return 0.0;
    if (theta > kPi) return 1.0;
    const auto it = std::lower_bound(knots_.begin(), knots_.end(), theta,
                                     [](const Knot& k, double x) { return k.angle < x; });
    if (it->angle == theta) return it->below;
    const Knot& a = *(it - 1);
    return a.above + (it->below - a.above) * (theta - a.angle) / (it->angle - a.angle);
}

bool CircleDistribution::has_atoms() const {
    return std::any_of(knots_.begin(), knots_.end(), [](const Knot& k) { return k.above - k.below > kMassTolerance; });
}

CircleDistribution mix(const std::vector<std::pair<double, CircleDistribution>>& parts) {
    double total = 0.0;
    std::vector<double> angles;
    for (const auto& [w, c] : parts) {
        if (!(w > 0.0)) throw ValidationError("mixture weights must be positive");
        total += w;
        for (const auto& k : c.knots()) angles.push_back(k.angle);
    }
    if (std::abs(total - 1.0) > kMassTolerance) throw ValidationError("mixture weights must sum to 1");
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    std::vector<CircleDistribution::Knot> knots;
    for (double a : angles) {
        double below = 0.0;
        double above = 0.0;
        for (const auto& [w, c] : parts) {
            below += w * c.cdf_left(a);
            above += w * c.cdf(a);
        }
        knots.push_back({a, below, above});
    }
    knots.back().below = knots.back().above = 1.0;
    return CircleDistribution::from_knots(std::move(knots));
}

namespace {

struct CircleCut {
    double angle;
    bool closed;  // [−π, angle] rather than [−π, angle)
    double h;
};

}  // namespace

double arc_mass(const CircleDistribution& c, const Arc& arc) {
    const double upper = arc.end_closed ? c.cdf(arc.end) : c.cdf_left(arc.end);
    const double lower = arc.start_closed ? c.cdf_left(arc.start) : c.cdf(arc.start);
    const bool wraps = arc.end < arc.start || (arc.end == arc.start && arc.extent > kPi);
    return wraps ? 1.0 - lower + upper : upper - lower;
}

CircleWitness circle_kuiper_witness(const CircleDistribution& c1, const CircleDistribution& c2) {
    // Every arc mass difference is H(end cut) − H(start cut) with
    // H = C₁ − C₂, also for arcs through the base point since both total
    // masses are 1. H is linear between knots.
    std::vector<double> angles;
    for (const auto* c : {&c1, &c2}) {
        for (const auto& k : c->knots()) {
            if (k.angle < kPi) angles.push_back(k.angle);
        }
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    CircleCut hi{-kPi, false, 0.0};
    CircleCut lo = hi;
    for (double a : angles) {
        for (bool closed : {false, true}) {
            const double h = closed ? c1.cdf(a) - c2.cdf(a) : c1.cdf_left(a) - c2.cdf_left(a);
            if (h > hi.h) hi = {a, closed, h};
            if (h < lo.h) lo = {a, closed, h};
        }
    }
    const double distance = hi.h - lo.h;
    if (distance <= 0.0) return {0.0, Arc::point(-kPi)};

    const bool full = hi.angle == lo.angle && !hi.closed;
    return {distance, Arc::between(lo.angle, hi.angle, !lo.closed, hi.closed, full)};
}

double circle_kuiper(const CircleDistribution& c1, const CircleDistribution& c2) {
    return circle_kuiper_witness(c1, c2).distance;
}

CircleDistribution rotate(const CircleDistribution& c, double theta) {
    // Old point `base` becomes the new −π; every old knot keeps its values,
    // shifted by the old mass before `base` (modulo 1). Reading the values
    // off the knots rather than re-evaluating at rotated angles keeps atoms
    // intact under rounding.
    const double base = wrap_angle(-kPi - theta);
    const double before_base = c.cdf_left(base);
    std::vector<CircleDistribution::Knot> knots{{-kPi, 0.0, c.cdf(base) - before_base}};
    for (const auto& k : c.knots()) {
        if (k.angle >= kPi || k.angle == base) continue;
        const double shift = k.angle > base ? -before_base : 1.0 - before_base;
        knots.push_back({wrap_angle(k.angle + theta), k.below + shift, k.above + shift});
    }
    knots.push_back({kPi, 1.0, 1.0});
    std::sort(knots.begin(), knots.end(), [](const auto& x, const auto& y) { return x.angle < y.angle; });
    return CircleDistribution::from_knots(std::move(knots));
}

std::vector<Arc> support_complement(const CircleDistribution& c) {
    const auto& k = c.knots();
    const std::size_t segments = k.size() - 1;
    auto null_segment = [&](std::size_t j) { return k[j + 1].below - k[j].above <= kMassTolerance; };
    // Atom at the knot following segment j; the last segment ends at π ≡ −π.
    auto atom_after = [&](std::size_t j) {
        return j + 1 == segments ? k[0].above : k[j + 1].above - k[j + 1].below;
    };
    std::size_t breaker = segments;
    for (std::size_t j = 0; j < segments && breaker == segments; ++j) {
        if (!null_segment(j) || atom_after(j) > kMassTolerance) breaker = j;
    }
    if (breaker == segments) throw std::logic_error("circle distribution carries no mass");

    std::vector<Arc> out;
    bool open_run = false;
    double run_start = 0.0;
    double run_end = 0.0;
    for (std::size_t step = 1; step <= segments; ++step) {
        const std::size_t j = (breaker + step) % segments;
        if (null_segment(j)) {
            if (!open_run) {
                open_run = true;
                run_start = k[j].angle;
            }
            run_end = k[j + 1].angle;
        }
        const bool run_ends = !null_segment(j) || atom_after(j) > kMassTolerance || step == segments;
        if (open_run && run_ends) {
            out.push_back(Arc::between(run_start, run_end, false, false, wrap_angle(run_end) == wrap_angle(run_start)));
            open_run = false;
        }
    }
    std::sort(out.begin(), out.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
    return out;
}

namespace {

// Derivative in θ of f_μ(tan(θ/2)) on a piece (a t + b)/(c t + d).
double tau_density(const Moebius& p, double theta) {
    const double k = p.det().to_double();
    if (k == 0.0) return 0.0;
    const double c = p.c.to_double();
    const double d = p.d.to_double();
    if (std::abs(theta) >= kPi) return k / (2.0 * c * c);
    const double t = std::tan(theta / 2.0);
    const double den = c * t + d;
    return k * (1.0 + t * t) / (2.0 * den * den);
}

// Bisects [lo, hi] until the chord of a function with monotone derivative
// deviates from it by at most `tol`: (β − α)/4 · |g'(β) − g'(α)|.
template <typename Deriv>
void refine(double lo, double hi, double tol, Deriv&& deriv, std::vector<double>& out) {
    struct Seg {
        double a, b, da, db;
    };
    std::vector<Seg> stack{{lo, hi, deriv(lo), deriv(hi)}};
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        const double m = s.a + (s.b - s.a) / 2.0;
        const bool tight = (s.b - s.a) / 4.0 * std::abs(s.db - s.da) <= tol;
        if (tight || !(m > s.a && m < s.b)) {
            out.push_back(s.b);
            continue;
        }
        const double dm = deriv(m);
        stack.push_back({m, s.b, dm, s.db});
        stack.push_back({s.a, m, s.da, dm});
    }
}

}  // namespace

CircleDistribution tau_transport(const Distribution& mu, double eps) {
    if (!(eps > 0.0)) throw ValidationError("tau transport needs eps > 0");
    if (!mu.is_continuous()) throw ValidationError("tau transport needs an atom-free measure");
    const auto& nodes = mu.nodes();
    std::vector<double> angles{-kPi};
    for (std::size_t j = 0; j < mu.pieces().size(); ++j) {
        const Moebius& p = mu.pieces()[j];
        const double lo = j == 0 ? -kPi : 2.0 * std::atan(nodes[j - 1].to_double());
        const double hi = j == nodes.size() ? kPi : 2.0 * std::atan(nodes[j].to_double());
        if (!(hi > lo)) continue;
        std::vector<double> cuts{lo};
        if (!p.d.is_zero() && !p.is_constant()) {
            const double inflection = 2.0 * std::atan((p.c / p.d).to_double());
            if (inflection > lo && inflection < hi) cuts.push_back(inflection);
        }
        cuts.push_back(hi);
        for (std::size_t i = 1; i < cuts.size(); ++i) {
            refine(cuts[i - 1], cuts[i], eps / 4.0, [&p](double th) { return tau_density(p, th); }, angles);
        }
    }

    std::vector<CircleDistribution::Knot> knots;
    double level = 0.0;
    for (double a : angles) {
        double v;
        if (a <= -kPi) {
            v = 0.0;
        } else if (a >= kPi) {
            v = 1.0;
        } else {
            v = mu.cdf(Rational::from_double(std::tan(a / 2.0))).to_double();
        }
        level = std::clamp(v, level, 1.0);
        knots.push_back({a, level, level});
    }
    return CircleDistribution::from_knots(std::move(knots));
}

Distribution tau_inverse_transport(const CircleDistribution& c, double eps) {
    if (!(eps > 0.0)) throw ValidationError("tau inverse transport needs eps > 0");
    if (c.has_atoms()) throw ValidationError("tau inverse transport needs an atom-free circle measure");
    const auto& k = c.knots();

    // Left and right tails are cut where the remaining mass is below eps/4.
    auto slope = [&k](std::size_t j) { return (k[j + 1].below - k[j].above) / (k[j + 1].angle - k[j].angle); };
    const double tail = eps / 4.0;
    const double first_hi = std::tan(k[1].angle / 2.0);
    const double beta0 = slope(0);
    double t_lo = beta0 > 0.0 ? std::tan((tail / beta0 - kPi) / 2.0) : first_hi;
    if (!(t_lo < first_hi)) t_lo = first_hi;
    const std::size_t last = k.size() - 2;
    const double last_lo = std::tan(k[last].angle / 2.0);
    const double beta1 = slope(last);
    double t_hi = beta1 > 0.0 ? std::tan((kPi - tail / beta1) / 2.0) : last_lo;
    if (!(t_hi > last_lo)) t_hi = last_lo;
    if (k.size() == 2) {
        t_lo = std::min(t_lo, -1.0);
        t_hi = std::max(t_hi, 1.0);
    }

    std::vector<double> ts{t_lo};
    for (std::size_t j = 0; j + 1 < k.size(); ++j) {
        const double lo = j == 0 ? t_lo : std::tan(k[j].angle / 2.0);
        const double hi = j == last ? t_hi : std::tan(k[j + 1].angle / 2.0);
        if (!(hi > lo)) continue;
        const double beta = slope(j);
        std::vector<double> cuts{lo};
        if (lo < 0.0 && 0.0 < hi) cuts.push_back(0.0);
        cuts.push_back(hi);
        for (std::size_t i = 1; i < cuts.size(); ++i) {
            refine(cuts[i - 1], cuts[i], eps / 8.0, [beta](double t) { return 2.0 * beta / (1.0 + t * t); }, ts);
        }
    }

    std::vector<Rational> nodes;
    std::vector<Moebius> pieces{Moebius::constant(0)};
    Rational prev_t;
    Rational prev_v(0);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        Rational t = Rational::from_double(ts[i]);
        if (!nodes.empty() && !(nodes.back() < t)) continue;
        Rational v;
        if (i == 0) {
            v = Rational(0);
        } else if (i + 1 == ts.size()) {
            v = Rational(1);
        } else {
            v = max(prev_v, min(Rational(1), Rational::from_double(c.cdf(2.0 * std::atan(ts[i])))));
        }
        if (!nodes.empty()) {
            const Rational s = (v - prev_v) / (t - prev_t);
            pieces.push_back(Moebius::affine(s, prev_v - s * prev_t));
        }
        nodes.push_back(t);
        prev_t = t;
        prev_v = v;
    }
    pieces.push_back(Moebius::constant(1));
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

}  // namespace kuiper
