#include "kuiper/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "detail.hpp"

namespace kuiper {

namespace {

// μ(g((−∞, t])) = sign·F + offset, where F is f_μ(y) for increasing g and
// f_μ(y⁻) for decreasing g, y = g(t), and p_mass = f_μ(p) at the range
// exceptional point p (if any).
struct Transport {
    int sign;
    Rational offset;
};

Transport transport(Orientation o, const std::optional<Rational>& p, const std::optional<Rational>& p_mass,
                    const Rational& y) {
    if (o == Orientation::increasing) {
        if (!p) return {+1, Rational(0)};
        return y > *p ? Transport{+1, -*p_mass} : Transport{+1, Rational(1) - *p_mass};
    }
    if (!p) return {-1, Rational(1)};
    return y < *p ? Transport{-1, *p_mass} : Transport{-1, Rational(1) + *p_mass};
}

void require_no_mass_at(const Distribution& mu, const std::optional<Rational>& p) {
    if (p && !mu.atom(*p).is_zero()) {
        const std::string ps = p->to_string();
        throw MassDeficiencyError("not a probability measure: mass μ(ℝ∖{" + ps + "}) = " +
                                  (Rational(1) - mu.atom(*p)).to_string() + " < 1 (atom at exceptional point " + ps +
                                  ")");
    }
}

}  // namespace

Distribution pullback(const Distribution& mu, const MonotoneMap& g) {
    const auto p = g.range_exceptional();
    require_no_mass_at(mu, p);
    const std::optional<Rational> p_mass = p ? std::optional<Rational>(mu.cdf(*p)) : std::nullopt;

    const MonotoneMap g_inv = invert(g);
    std::vector<Rational> nodes = g.knots();
    if (auto x = g.domain_exceptional()) nodes.push_back(*x);
    for (const auto& y : mu.nodes()) {
        if (auto t = g_inv(ProjPoint{y}).finite) nodes.push_back(*t);
    }
    detail::sort_unique(nodes);

    std::vector<Moebius> pieces;
    for (std::size_t seg = 0; seg <= nodes.size(); ++seg) {
        const Rational s = detail::segment_sample(nodes, seg);
        const Rational y = g(s);
        const Moebius composite = compose(mu.pieces()[mu.piece_index(y)], g.pieces()[g.piece_index(s)]);
        const Transport tr = transport(g.orientation(), p, p_mass, y);
        pieces.push_back(composite.scaled(Rational(tr.sign)).plus(tr.offset));
    }
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

ContinuousIsometry::ContinuousIsometry(MonotoneMap g, ExtReal x)
    : g_(std::move(g)), x_(std::move(x)), composite_(compose(g_, r_map(x_))) {
    if (!g_.is_whole_line()) throw ValidationError("isometry map must be a homeomorphism of the real line");
}

Distribution ContinuousIsometry::operator()(const Distribution& mu) const {
    if (!mu.is_continuous()) throw ValidationError("continuous isometry is defined on atom-free measures only");
    return pullback(mu, composite_);
}

GeneralIsometry::GeneralIsometry(MonotoneMap g) : g_(std::move(g)) {
    if (!g_.is_whole_line()) throw ValidationError("isometry map must be a homeomorphism of the real line");
}

MapOracle oracle_from_map(const MonotoneMap& g) {
    const MonotoneMap inv = invert(g);
    return {[g](double t) { return g.eval(t); }, [inv](double y) { return inv.eval(y); }, g.orientation(),
            g.domain_exceptional(), g.range_exceptional()};
}

namespace {

class TransportedCdf {
public:
    TransportedCdf(const Distribution& mu, const MapOracle& o) : mu_(mu), o_(o) {
        if (o.range_exceptional) p_mass_ = mu.cdf(*o.range_exceptional);
    }

    /// Value at the domain exceptional point, where the CDF is continuous.
    Rational at_exceptional() const {
        return o_.orientation == Orientation::increasing ? Rational(1) - *p_mass_ : *p_mass_;
    }

    Rational operator()(double t) const {
        const double y = o_.forward(t);
        if (!std::isfinite(y)) throw ValidationError("map oracle returned a non-finite value at " + std::to_string(t));
        const Rational yr = Rational::from_double(y);
        const Transport tr = transport(o_.orientation, o_.range_exceptional, p_mass_, yr);
        Rational v = mu_.cdf(yr) * Rational(tr.sign) + tr.offset;
        return std::clamp(v, Rational(0), Rational(1));
    }

private:
    const Distribution& mu_;
    const MapOracle& o_;
    std::optional<Rational> p_mass_;
};

void check_oracle(const Distribution& mu, const MapOracle& o) {
    std::vector<double> probes{-1e6, -100.0, -7.5, -1.0, -0.25, 0.5, 1.0, 3.0, 100.0, 1e6};
    for (const auto& y : mu.nodes()) probes.push_back(o.inverse(y.to_double()));
    const double xd = o.domain_exceptional ? o.domain_exceptional->to_double() : NAN;
    for (double t : probes) {
        if (!std::isfinite(t) || t == xd) continue;
        const double y = o.forward(t);
        if (!std::isfinite(y)) continue;
        const double back = o.inverse(y);
        if (!(std::abs(back - t) <= 1e-12 * std::max(1.0, std::abs(t)))) {
            throw ValidationError("map oracle is inconsistent: inverse(forward(" + std::to_string(t) + ")) = " +
                                  std::to_string(back));
        }
    }
}

// Output values are doubles; rounding each one costs at most one ulp of a
// number below 1, so increments are held this far under eps/2.
constexpr double kRoundingMargin = 1e-15;

}  // namespace

Distribution certified_pushforward(const Distribution& mu, const MapOracle& o, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("certified pushforward needs eps > 0");
    if (!mu.is_continuous()) throw ValidationError("certified pushforward needs an atom-free measure");
    if (o.domain_exceptional.has_value() != o.range_exceptional.has_value()) {
        throw ValidationError("map oracle must declare both exceptional points or neither");
    }
    if (eps / 2.0 <= 4.0 * kRoundingMargin) throw ValidationError("certified pushforward eps is below double resolution");
    check_oracle(mu, o);

    const TransportedCdf G(mu, o);
    const double half = eps / 2.0 - kRoundingMargin;
    auto value = [&G](double t) { return G(t).to_double(); };

    double lo = -1.0;
    double hi = 1.0;
    for (const auto& y : {mu.nodes().front(), mu.nodes().back()}) {
        const double t = o.inverse(y.to_double());
        if (std::isfinite(t)) {
            lo = std::min(lo, t - 1.0);
            hi = std::max(hi, t + 1.0);
        }
    }
    if (o.domain_exceptional) {
        const double xd = o.domain_exceptional->to_double();
        lo = std::min(lo, xd - 1.0);
        hi = std::max(hi, xd + 1.0);
    }
    for (int i = 0; value(lo) > half; ++i) {
        lo = 2.0 * lo - 1.0;
        if (i > 2000 || !std::isfinite(lo)) throw ValidationError("certified pushforward could not bracket the left tail");
    }
    for (int i = 0; value(hi) < 1.0 - half; ++i) {
        hi = 2.0 * hi + 1.0;
        if (i > 2000 || !std::isfinite(hi)) throw ValidationError("certified pushforward could not bracket the right tail");
    }

    // The walk must land exactly on the exceptional point, where the oracle
    // is undefined, and on the right end, clamped to 1.
    struct Target {
        double t;
        double w;
    };
    std::vector<Target> targets;
    if (o.domain_exceptional) targets.push_back({o.domain_exceptional->to_double(), G.at_exceptional().to_double()});
    targets.push_back({hi, 1.0});

    std::vector<double> ts{lo};
    std::vector<double> ws{0.0};
    std::size_t exceptional_index = 0;
    double step = (hi - lo) / 1024.0;
    for (const auto& target : targets) {
        while (ts.back() < target.t) {
            const double a = ts.back();
            const double wa = ws.back();
            const bool at_target = a + step >= target.t;
            const double b = at_target ? target.t : a + step;
            if (!(b > a)) {
                throw ValidationError("transported CDF jumps near " + std::to_string(a) + "; map oracle is not continuous");
            }
            const double wb = at_target ? target.w : std::clamp(value(b), wa, target.w);
            const double inc = wb - wa;
            if (inc > half) {
                step = (b - a) * std::max(0.05, 0.9 * half / inc);
                continue;
            }
            ts.push_back(b);
            ws.push_back(wb);
            step = inc > 0.0 ? (b - a) * std::min(2.0, 0.95 * half / inc) : 2.0 * (b - a);
        }
        if (targets.size() == 2 && exceptional_index == 0) exceptional_index = ts.size() - 1;
    }

    std::vector<Rational> nodes;
    std::vector<Moebius> pieces{Moebius::constant(0)};
    nodes.reserve(ts.size());
    pieces.reserve(ts.size() + 1);
    std::size_t last = 0;
    auto node_at = [&](std::size_t i) {
        return i == exceptional_index && o.domain_exceptional ? *o.domain_exceptional : Rational::from_double(ts[i]);
    };
    auto emit = [&](std::size_t i) {
        Rational t = node_at(i);
        if (!nodes.empty()) {
            const Rational w0 = Rational::from_double(ws[last]);
            const Rational slope = (Rational::from_double(ws[i]) - w0) / (t - nodes.back());
            pieces.push_back(Moebius::affine(slope, w0 - slope * nodes.back()));
        }
        nodes.push_back(std::move(t));
        last = i;
    };
    emit(0);
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
        // Keep a node only when skipping it would exceed the increment bound.
        const bool pinned = o.domain_exceptional && i == exceptional_index;
        if (pinned || ws[i + 1] - ws[last] > half) emit(i);
    }
    emit(ts.size() - 1);
    pieces.push_back(Moebius::constant(1));
    return Distribution::from_pieces(std::move(nodes), std::move(pieces));
}

}  // namespace kuiper
