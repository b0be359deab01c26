#include "kuiper/characterize.hpp"

#include <algorithm>

namespace kuiper {

namespace {

Rational dirac_location(const Distribution& d) { return d.atoms().front().first; }

// Two points of a non-degenerate interval, using closed endpoints when present.
std::pair<Rational, Rational> inner_pair(const Interval& r) {
    if (r.is_bounded()) {
        const Rational& a = r.lo().value();
        const Rational& b = r.hi().value();
        const Rational third = (b - a) / Rational(3);
        return {r.lo_closed() ? a : a + third, r.hi_closed() ? b : b - third};
    }
    if (r.hi().is_finite()) {
        const Rational& b = r.hi().value();
        return {b - Rational(2), r.hi_closed() ? b : b - Rational(1)};
    }
    if (r.lo().is_finite()) {
        const Rational& a = r.lo().value();
        return {r.lo_closed() ? a : a + Rational(1), a + Rational(2)};
    }
    return {Rational(-1), Rational(1)};
}

Distribution two_point(const Rational& p, const Rational& q) {
    return mix({{Rational(1, 2), make_dirac(p)}, {Rational(1, 2), make_dirac(q)}});
}

}  // namespace

UnitDistanceRegions unit_distance_regions(const Distribution& mu) {
    if (mu.is_dirac()) {
        throw PreconditionError("unit-distance regions are undefined for a Dirac measure; d(δ_x, ν) = 1 iff ν({x}) = 0");
    }
    CoIntervalSupport s = co_interval_support(mu);
    UnitDistanceRegions out;
    const Interval& h = s.hull;
    if (h.lo().is_finite()) out.outer.emplace_back(ExtReal::minus_infinity(), h.lo(), false, !h.lo_closed());
    if (h.hi().is_finite()) out.outer.emplace_back(h.hi(), ExtReal::plus_infinity(), !h.hi_closed(), false);
    out.gaps = std::move(s.bounded_gaps);
    for (auto& [x, _] : mu.atoms()) out.dirac_excluded_points.push_back(x);
    return out;
}

bool is_unit_distant(const Distribution& mu, const Distribution& nu) {
    if (mu.is_dirac()) return nu.atom(dirac_location(mu)).is_zero();
    if (nu.is_dirac()) return mu.atom(dirac_location(nu)).is_zero();
    const UnitDistanceRegions r = unit_distance_regions(mu);
    Rational outer_mass(0);
    for (const auto& o : r.outer) outer_mass += interval_mass(nu, o);
    if (outer_mass == Rational(1)) return true;
    return std::any_of(r.gaps.begin(), r.gaps.end(),
                       [&nu](const Interval& g) { return interval_mass(nu, g) == Rational(1); });
}

std::vector<Distribution> polar(const std::vector<Distribution>& set, const std::vector<Distribution>& universe) {
    std::vector<Distribution> out;
    for (const auto& nu : universe) {
        if (std::all_of(set.begin(), set.end(), [&nu](const Distribution& mu) { return is_unit_distant(mu, nu); })) {
            out.push_back(nu);
        }
    }
    return out;
}

bool absolute_continuity_polar_check(const Distribution& mu, const Distribution& nu,
                                     const std::vector<Distribution>& probes) {
    if (!is_absolutely_continuous_wrt(nu, mu)) {
        throw PreconditionError("ν is not absolutely continuous with respect to μ");
    }
    for (const auto& theta : probes) {
        if (is_unit_distant(mu, theta) && !is_unit_distant(theta, nu)) return false;
    }
    return true;
}

std::vector<Distribution> unit_distance_probes(const Distribution& mu) {
    std::vector<Distribution> out;
    if (mu.is_dirac()) {
        const Rational x = dirac_location(mu);
        out.push_back(make_dirac(x - Rational(1)));
        out.push_back(make_uniform(x + Rational(1), x + Rational(2)));
        out.push_back(two_point(x - Rational(1), x + Rational(1)));
        out.push_back(make_uniform(x - Rational(1), x + Rational(1)));
        return out;
    }
    const UnitDistanceRegions r = unit_distance_regions(mu);
    std::vector<Interval> regions = r.outer;
    regions.insert(regions.end(), r.gaps.begin(), r.gaps.end());
    for (const auto& region : regions) {
        const auto [p, q] = inner_pair(region);
        out.push_back(make_uniform(p, q));
        out.push_back(two_point(p, q));
    }
    if (r.outer.size() == 2) {
        out.push_back(two_point(inner_pair(r.outer[0]).first, inner_pair(r.outer[1]).second));
    }
    return out;
}

}  // namespace kuiper
