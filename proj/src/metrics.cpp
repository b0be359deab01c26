#include "kuiper/metrics.hpp"

#include <algorithm>


namespace kuiper {

namespace {

// The half-line (−∞, t] when closed, (−∞, t) otherwise. t = −∞ stands for
// the empty set and t = +∞ for ℝ.
struct Cut {
    ExtReal t;
    bool closed = false;

    friend bool operator==(const Cut&, const Cut&) = default;
    friend bool operator<(const Cut& x, const Cut& y) {
        if (x.t != y.t) return x.t < y.t;
        return !x.closed && y.closed;
    }
};

// Common refinement of the breakpoints of μ and ν. Segment k is the open
// interval before nodes[k] (segment n is the right ray); mu_piece[k] and
// nu_piece[k] index the pieces active there. At nodes[k] the left limits
// come from segment k and the values from segment k + 1.
struct Overlay {
    std::vector<Rational> nodes;
    std::vector<std::size_t> mu_piece;
    std::vector<std::size_t> nu_piece;

    Overlay(const Distribution& mu, const Distribution& nu) {
        const auto& a = mu.nodes();
        const auto& b = nu.nodes();
        nodes.reserve(a.size() + b.size());
        mu_piece.reserve(a.size() + b.size() + 1);
        nu_piece.reserve(a.size() + b.size() + 1);
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
            mu_piece.push_back(i);
            nu_piece.push_back(j);
            const int order = i == a.size() ? 1 : j == b.size() ? -1 : cmp(a[i].raw(), b[j].raw());
            nodes.push_back(order <= 0 ? a[i] : b[j]);
            if (order <= 0) ++i;
            if (order >= 0) ++j;
        }
        mu_piece.push_back(i);
        nu_piece.push_back(j);
    }

    ExtReal lo(std::size_t seg) const { return seg == 0 ? ExtReal::minus_infinity() : ExtReal(nodes[seg - 1]); }
    ExtReal hi(std::size_t seg) const { return seg == nodes.size() ? ExtReal::plus_infinity() : ExtReal(nodes[seg]); }
};

Rational value_at(const Moebius& p, const ExtReal& t) {
    if (t.is_finite()) return p(t.value());
    return *p.limit_at_infinity();
}

// Zeros of the density difference of two fractional-linear CDF pieces
// inside the open segment (lo, hi). They are the interior critical points
// of the CDF difference.
std::vector<QuadraticRoot> density_crossings(const Moebius& p, const Moebius& q, const ExtReal& lo, const ExtReal& hi) {
    const Rational k1 = p.det();
    const Rational k2 = q.det();
    if (k1.sign() <= 0 || k2.sign() <= 0 || (p.is_affine() && q.is_affine())) return {};
    // k1 / (c1 t + d1)² = k2 / (c2 t + d2)²
    const Rational qa = k1 * q.c * q.c - k2 * p.c * p.c;
    const Rational qb = Rational(2) * (k1 * q.c * q.d - k2 * p.c * p.d);
    const Rational qc = k1 * q.d * q.d - k2 * p.d * p.d;
    QuadraticSolution sol = solve_quadratic(qa, qb, qc);
    std::vector<QuadraticRoot> out;
    for (auto& r : sol.roots) {
        const ExtReal x(r.value);
        if (lo < x && x < hi) out.push_back(std::move(r));
    }
    return out;
}

template <typename Fn>
void for_each_segment(const Distribution& mu, const Distribution& nu, const Overlay& ov, Fn&& fn) {
    for (std::size_t seg = 0; seg <= ov.nodes.size(); ++seg) {
        fn(ov.lo(seg), ov.hi(seg), mu.pieces()[ov.mu_piece[seg]], nu.pieces()[ov.nu_piece[seg]]);
    }
}

struct OneSided {
    Rational value{0};
    bool exact = true;
    std::vector<Cut> maximizers;

    void offer(const Cut& cut, const Rational& v, bool v_exact) {
        if (maximizers.empty() || v > value) {
            value = v;
            exact = v_exact;
            maximizers.assign(1, cut);
        } else if (v == value) {
            exact = exact || v_exact;
            maximizers.push_back(cut);
        }
    }
};

struct Sups {
    OneSided plus;   // sup (f_μ − f_ν)
    OneSided minus;  // sup (f_ν − f_μ)
};

// Both one-sided suprema of f_μ − f_ν over every half-line cut where one
// can be attained: ∅ and ℝ, both cuts at each breakpoint, and both cuts at
// interior critical points.
Sups difference_sups(const Distribution& mu, const Distribution& nu, const Overlay& ov) {
    Sups s;
    auto offer = [&s](const Cut& cut, const Rational& v, bool exact) {
        s.plus.offer(cut, v, exact);
        s.minus.offer(cut, -v, exact);
    };
    offer({ExtReal::minus_infinity(), false}, Rational(0), true);
    offer({ExtReal::plus_infinity(), false}, Rational(0), true);
    const auto& P = mu.pieces();
    const auto& Q = nu.pieces();
    for (std::size_t k = 0; k < ov.nodes.size(); ++k) {
        const Rational& t = ov.nodes[k];
        offer({t, true}, P[ov.mu_piece[k + 1]](t) - Q[ov.nu_piece[k + 1]](t), true);
        offer({t, false}, P[ov.mu_piece[k]](t) - Q[ov.nu_piece[k]](t), true);
    }
    for_each_segment(mu, nu, ov, [&](const ExtReal& lo, const ExtReal& hi, const Moebius& p, const Moebius& q) {
        for (const auto& r : density_crossings(p, q, lo, hi)) {
            const Rational v = p(r.value) - q(r.value);
            offer({r.value, true}, v, r.exact);
            offer({r.value, false}, v, r.exact);
        }
    });
    return s;
}

Interval interval_between(const Cut& inner, const Cut& outer) {
    return Interval(inner.t, outer.t, !inner.closed, outer.closed);
}

int closed_endpoints(const Interval& i) { return (i.lo_closed() ? 1 : 0) + (i.hi_closed() ? 1 : 0); }

bool preferred(const Interval& x, const Interval& y) {
    const int cx = closed_endpoints(x);
    const int cy = closed_endpoints(y);
    if (cx != cy) return cx > cy;
    if (x.lo() != y.lo()) return x.lo() < y.lo();
    if (x.hi() != y.hi()) return x.hi() < y.hi();
    return x.lo_closed() && !y.lo_closed();
}

}  // namespace

Scalar ks_distance(const Distribution& mu, const Distribution& nu) {
    const auto [plus, minus] = difference_sups(mu, nu, Overlay(mu, nu));
    return plus.value >= minus.value ? Scalar{plus.value, plus.exact} : Scalar{minus.value, minus.exact};
}

Scalar kuiper_distance(const Distribution& mu, const Distribution& nu) {
    const auto [plus, minus] = difference_sups(mu, nu, Overlay(mu, nu));
    return {plus.value + minus.value, plus.exact && minus.exact};
}

WitnessResult kuiper_witness(const Distribution& mu, const Distribution& nu) {
    const Overlay ov(mu, nu);
    const auto [plus, minus] = difference_sups(mu, nu, ov);
    const Scalar distance{plus.value + minus.value, plus.exact && minus.exact};

    if (distance.value.is_zero()) {
        // No breakpoint of either measure lies below the first merged node.
        const Rational x = ov.nodes.front() - Rational(1);
        return {{Interval::point(x), Rational(0), true}, distance};
    }

    std::optional<Interval> best;
    for (const auto& p : plus.maximizers) {
        for (const auto& m : minus.maximizers) {
            if (p == m) continue;
            const Interval candidate = m < p ? interval_between(m, p) : interval_between(p, m);
            if (!best || preferred(candidate, *best)) best = candidate;
        }
    }
    const Rational signed_value = interval_mass(mu, *best) - interval_mass(nu, *best);
    return {{*best, signed_value, distance.exact}, distance};
}

Scalar tv_distance(const Distribution& mu, const Distribution& nu) {
    const Overlay ov(mu, nu);
    Rational total(0);
    bool exact = true;
    for (const auto& t : ov.nodes) {
        const Rational diff = mu.atom(t) - nu.atom(t);
        if (diff.sign() > 0) total += diff;
    }
    for_each_segment(mu, nu, ov, [&](const ExtReal& lo, const ExtReal& hi, const Moebius& p, const Moebius& q) {
        std::vector<ExtReal> cuts{lo};
        for (const auto& r : density_crossings(p, q, lo, hi)) {
            cuts.emplace_back(r.value);
            exact = exact && r.exact;
        }
        cuts.push_back(hi);
        for (std::size_t i = 1; i < cuts.size(); ++i) {
            const Rational gain = (value_at(p, cuts[i]) - value_at(p, cuts[i - 1])) -
                                  (value_at(q, cuts[i]) - value_at(q, cuts[i - 1]));
            if (gain.sign() > 0) total += gain;
        }
    });
    return {total, exact};
}

OracleResult brute_force_interval_sup(const Distribution& mu, const Distribution& nu) {
    const Overlay ov(mu, nu);
    const auto& nodes = ov.nodes;
    const bool approximate = !(mu.is_piecewise_linear() && nu.is_piecewise_linear());
    std::vector<ExtReal> ends{ExtReal::minus_infinity()};
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (approximate) {
            for (long k = 1; k <= 64; ++k) {
                if (i == 0) {
                    ends.emplace_back(nodes[0] - Rational(65 - k));
                } else {
                    ends.emplace_back(nodes[i - 1] + (nodes[i] - nodes[i - 1]) * Rational(k, 65));
                }
            }
        }
        ends.emplace_back(nodes[i]);
    }
    if (approximate) {
        for (long k = 1; k <= 64; ++k) ends.emplace_back(nodes.back() + Rational(k));
    }
    ends.push_back(ExtReal::plus_infinity());

    // μ(I) − ν(I) for I with ends (a, b) is upper(b) − lower(a), where the
    // terms are f_μ − f_ν or its left limit depending on the endpoint's
    // openness; tabulate those once per endpoint.
    struct Terms {
        Rational value;  // (f_μ − f_ν)(e)
        Rational left;   // (f_μ − f_ν)(e−)
    };
    std::vector<Terms> terms;
    terms.reserve(ends.size());
    for (const auto& e : ends) {
        if (!e.is_finite()) {
            terms.push_back({Rational(0), Rational(0)});  // both CDFs agree at ±∞
        } else {
            terms.push_back({mu.cdf(e.value()) - nu.cdf(e.value()), mu.cdf_left(e.value()) - nu.cdf_left(e.value())});
        }
    }

    Rational best(0);
    for (std::size_t i = 0; i < ends.size(); ++i) {
        if (ends[i].is_finite()) best = max(best, abs(terms[i].value - terms[i].left));  // singleton {e}
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
            for (int flags = 0; flags < 4; ++flags) {
                const bool lc = (flags & 1) != 0;
                const bool hc = (flags & 2) != 0;
                if ((lc && !ends[i].is_finite()) || (hc && !ends[j].is_finite())) continue;
                const Rational& upper = hc ? terms[j].value : terms[j].left;
                const Rational& lower = lc ? terms[i].left : terms[i].value;
                best = max(best, abs(upper - lower));
            }
        }
    }
    return {best, approximate};
}

Rational dirac_distance(const Distribution& mu, const Rational& x) { return Rational(1) - mu.atom(x); }

}  // namespace kuiper
