#include "kuiper/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace kuiper {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    // Rejection keeps the draw unbiased.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

long SplitMix64::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rational random_rational(SplitMix64& rng, long lo, long hi, long den) {
    return Rational(rng.range(lo * den, hi * den), den);
}

DistributionShape shape_for(Complexity c) {
    switch (c) {
        case Complexity::small: return {3, true, true, true};
        case Complexity::medium: return {6, true, true, true};
        case Complexity::large: return {12, true, true, true};
    }
    return {};
}

namespace {

Rational positive_step(SplitMix64& rng) { return Rational(rng.range(1, 12), rng.range(1, 4)); }

}  // namespace

Distribution random_distribution(SplitMix64& rng, const DistributionShape& shape) {
    if (!shape.atoms && !shape.densities) throw std::invalid_argument("distribution shape allows no components");
    std::vector<std::pair<Rational, Distribution>> parts;
    Rational cursor = random_rational(rng, -3, 3, 2);
    const Rational first = cursor;
    const std::size_t n = 1 + rng.below(std::max<std::size_t>(shape.max_components, 1));
    for (std::size_t i = 0; i < n; ++i) {
        const bool atom = shape.atoms && (!shape.densities || rng.chance(1, 3));
        if (atom) {
            parts.emplace_back(Rational(rng.range(1, 9)), make_dirac(cursor));
            cursor += positive_step(rng) / Rational(2);
        } else {
            const Rational hi = cursor + positive_step(rng) / Rational(2);
            parts.emplace_back(Rational(rng.range(1, 9)), make_uniform(cursor, hi));
            cursor = hi;
            // Touching blocks exercise merged supports; separated ones leave gaps.
            if (rng.chance(2, 3)) cursor += positive_step(rng) / Rational(3);
        }
    }
    if (shape.moebius_tails && shape.densities) {
        const Rational s = positive_step(rng);
        if (rng.chance(1, 3)) {
            // s / (x1 + s − t) on (−∞, x1]
            const Rational x1 = first - Rational(rng.range(0, 2));
            const Moebius left{0, s, -1, x1 + s};
            parts.emplace_back(Rational(rng.range(1, 9)),
                               Distribution::from_pieces({x1}, {left, Moebius::constant(1)}));
        }
        if (rng.chance(1, 3)) {
            // (t − x0) / (t − x0 + s) on [x0, ∞)
            const Rational x0 = cursor + Rational(rng.range(0, 2));
            const Moebius right{1, -x0, 1, s - x0};
            parts.emplace_back(Rational(rng.range(1, 9)),
                               Distribution::from_pieces({x0}, {Moebius::constant(0), right}));
        }
    }
    Rational total(0);
    for (const auto& [w, _] : parts) total += w;
    for (auto& [w, _] : parts) w /= total;
    if (parts.size() == 1) return parts.front().second;
    return mix(parts);
}

namespace {

// Knots t₀ < … and images y₀ < …, both on random grids.
std::pair<std::vector<Rational>, std::vector<Rational>> random_knots(SplitMix64& rng, std::size_t count) {
    std::vector<Rational> ts{random_rational(rng, -4, 4, 2)};
    std::vector<Rational> ys{random_rational(rng, -4, 4, 3)};
    for (std::size_t i = 1; i < count; ++i) {
        ts.push_back(ts.back() + positive_step(rng) / Rational(2));
        ys.push_back(ys.back() + positive_step(rng) / Rational(2));
    }
    return {std::move(ts), std::move(ys)};
}

MonotoneMap orient(MonotoneMap g, Orientation o) {
    return o == Orientation::increasing ? g : compose(affine_map(Rational(-1), Rational(0)), g);
}

}  // namespace

MonotoneMap random_pwl_map(SplitMix64& rng, std::size_t max_knots, Orientation o) {
    auto [ts, ys] = random_knots(rng, 1 + rng.below(std::max<std::size_t>(max_knots, 1)));
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t i = 0; i < ts.size(); ++i) points.emplace_back(ts[i], ys[i]);
    return orient(pwl_map(points, positive_step(rng) / Rational(2), positive_step(rng) / Rational(2)), o);
}

MonotoneMap random_moebius_map(SplitMix64& rng, std::size_t max_pieces, Orientation o) {
    const std::size_t pieces = 1 + rng.below(std::max<std::size_t>(max_pieces, 1));
    if (pieces == 1) {
        return orient(affine_map(positive_step(rng) / Rational(2), random_rational(rng, -3, 3, 2)), o);
    }
    auto [ts, ys] = random_knots(rng, pieces - 1);
    std::vector<Moebius> fs;
    const Rational left = positive_step(rng) / Rational(2);
    fs.push_back(Moebius::affine(left, ys.front() - left * ts.front()));
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        // Through an interior point with a random image: a fractional-linear
        // branch mapping [tᵢ, tᵢ₊₁] increasingly onto [yᵢ, yᵢ₊₁].
        const Rational mid = (ts[i] + ts[i + 1]) / Rational(2);
        const Rational frac(rng.range(1, 7), 8);
        const Rational ymid = ys[i] + frac * (ys[i + 1] - ys[i]);
        fs.push_back(Moebius::through(ts[i], mid, ts[i + 1], ys[i], ymid, ys[i + 1]));
    }
    const Rational right = positive_step(rng) / Rational(2);
    fs.push_back(Moebius::affine(right, ys.back() - right * ts.back()));
    return orient(MonotoneMap::from_pieces(std::move(ts), std::move(fs)), o);
}

MonotoneMap random_map(SplitMix64& rng, std::size_t max_pieces) {
    const Orientation o = rng.chance(1, 2) ? Orientation::increasing : Orientation::decreasing;
    MonotoneMap g = rng.chance(1, 2) ? random_pwl_map(rng, max_pieces > 0 ? max_pieces - 1 : 0, o)
                                      : random_moebius_map(rng, max_pieces, o);
    if (rng.chance(1, 2)) g = compose(g, r_map(ExtReal(random_rational(rng, -3, 3, 2))));
    return g;
}

}  // namespace kuiper
