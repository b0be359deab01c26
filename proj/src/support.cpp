#include <algorithm>

#include "detail.hpp"
#include "kuiper/distribution.hpp"

namespace kuiper {

namespace {

// Pieces of C_μ in left-to-right order, before merging: open segments that
// carry density, and breakpoints that are atoms or sit between two such
// segments. Any other point lies in a non-degenerate null interval.
std::vector<Interval> co_interval_pieces(const Distribution& mu) {
    const auto& nodes = mu.nodes();
    std::vector<Interval> out;
    for (std::size_t i = 0; i <= nodes.size(); ++i) {
        if (mu.piece_has_density(i)) {
            const ExtReal lo = i == 0 ? ExtReal::minus_infinity() : ExtReal(nodes[i - 1]);
            const ExtReal hi = i == nodes.size() ? ExtReal::plus_infinity() : ExtReal(nodes[i]);
            out.push_back(Interval::open(lo, hi));
        }
        if (i < nodes.size()) {
            const bool atom = !mu.atom(nodes[i]).is_zero();
            if (atom || (mu.piece_has_density(i) && mu.piece_has_density(i + 1))) out.push_back(Interval::point(nodes[i]));
        }
    }
    return out;
}

std::vector<Interval> merge_touching(const std::vector<Interval>& parts) {
    std::vector<Interval> out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            const Interval& last = out.back();
            const bool touching = last.hi() > p.lo() || (last.hi() == p.lo() && (last.hi_closed() || p.lo_closed()));
            if (touching) {
                const bool hi_after = p.hi() > last.hi() || (p.hi() == last.hi() && p.hi_closed());
                out.back() = hi_after ? Interval(last.lo(), p.hi(), last.lo_closed(), p.hi_closed()) : last;
                continue;
            }
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace

CoIntervalSupport co_interval_support(const Distribution& mu) {
    std::vector<Interval> components = merge_touching(co_interval_pieces(mu));
    const Interval& first = components.front();
    const Interval& last = components.back();
    Interval hull(first.lo(), last.hi(), first.lo_closed(), last.hi_closed());
    std::vector<Interval> gaps;
    for (std::size_t i = 1; i < components.size(); ++i) {
        const Interval& a = components[i - 1];
        const Interval& b = components[i];
        gaps.emplace_back(a.hi(), b.lo(), !a.hi_closed(), !b.lo_closed());
    }
    return {std::move(components), std::move(hull), std::move(gaps)};
}

std::vector<Interval> closed_support(const Distribution& mu) {
    std::vector<Interval> closures;
    for (const auto& c : co_interval_support(mu).components) {
        closures.emplace_back(c.lo(), c.hi(), true, true);
    }
    return merge_touching(closures);
}

bool is_absolutely_continuous_wrt(const Distribution& nu, const Distribution& mu) {
    for (const auto& [x, _] : nu.atoms()) {
        if (mu.atom(x).is_zero()) return false;
    }
    std::vector<Rational> nodes = nu.nodes();
    nodes.insert(nodes.end(), mu.nodes().begin(), mu.nodes().end());
    detail::sort_unique(nodes);
    for (std::size_t seg = 0; seg <= nodes.size(); ++seg) {
        const Rational s = detail::segment_sample(nodes, seg);
        if (nu.piece_has_density(nu.piece_index(s)) && !mu.piece_has_density(mu.piece_index(s))) return false;
    }
    return true;
}

}  // namespace kuiper
