#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kuiper/circle.hpp"
#include "kuiper/metrics.hpp"
#include "kuiper/random.hpp"

using namespace kuiper;

namespace {

constexpr double pi = std::numbers::pi;

// Arc enumeration over the merged knot angles, straight from the knot CDF
// values: every ordered pair of endpoints, every choice of closed ends, both
// directions around, plus single points and the circle minus a point.
double enumerated_distance(const CircleDistribution& c1, const CircleDistribution& c2) {
    std::vector<double> angles;
    for (const auto* c : {&c1, &c2}) {
        for (const auto& k : c->knots()) {
            if (k.angle < pi) angles.push_back(k.angle);
        }
    }
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());

    auto upper = [](const CircleDistribution& c, double t) { return c.cdf(t); };
    auto lower = [](const CircleDistribution& c, double t) { return t == -pi ? 0.0 : c.cdf_left(t); };
    auto mass = [&](const CircleDistribution& c, double a, double b, bool ac, bool bc) {
        const double from = ac ? lower(c, a) : upper(c, a);
        const double to = bc ? upper(c, b) : lower(c, b);
        return a < b ? to - from : 1.0 - from + to;
    };

    double best = 0.0;
    for (double a : angles) {
        const double atom = (upper(c1, a) - lower(c1, a)) - (upper(c2, a) - lower(c2, a));
        best = std::max(best, std::abs(atom));
        for (double b : angles) {
            if (a == b) continue;
            for (int flags = 0; flags < 4; ++flags) {
                const bool ac = flags & 1;
                const bool bc = flags & 2;
                best = std::max(best, std::abs(mass(c1, a, b, ac, bc) - mass(c2, a, b, ac, bc)));
            }
        }
    }
    return best;
}

CircleDistribution random_circle(SplitMix64& rng, bool atoms) {
    std::vector<std::pair<double, CircleDistribution>> parts;
    const int n = 1 + static_cast<int>(rng.below(4));
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w = 1.0 + static_cast<double>(rng.below(5));
        total += w;
        const double start = -pi + 2.0 * pi * rng.unit();
        if (atoms && rng.chance(1, 3)) {
            parts.emplace_back(w, CircleDistribution::atom(start));
        } else {
            parts.emplace_back(w, CircleDistribution::uniform_arc(start, 0.05 + 3.0 * rng.unit()));
        }
    }
    for (auto& [w, c] : parts) w /= total;
    return mix(parts);
}

double tau_cdf_of_centered_uniform(double theta) {
    // U[−1,1] sent through θ = 2·arctan t.
    return std::clamp((std::tan(theta / 2.0) + 1.0) / 2.0, 0.0, 1.0);
}

}  // namespace

TEST(Arc, Construction) {
    EXPECT_THROW(Arc::make(0.0, 0.0, true, false), ValidationError);
    EXPECT_THROW(Arc::make(0.0, 7.0, true, true), ValidationError);
    EXPECT_THROW(Arc::make(0.0, 2.0 * pi, true, true), ValidationError);
    EXPECT_THROW(Arc::full().complement(), ValidationError);
    EXPECT_DOUBLE_EQ(Arc::make(3.0 * pi, 1.0, true, true).start, -pi);
    const Arc a = Arc::make(0.5, 1.0, true, false);
    const Arc c = a.complement();
    EXPECT_NEAR(c.start, 1.5, 1e-15);
    EXPECT_NEAR(c.extent, 2.0 * pi - 1.0, 1e-15);
    EXPECT_TRUE(c.start_closed);
    EXPECT_FALSE(c.end_closed);
}

TEST(ArcMass, Examples) {
    const CircleDistribution lambda = CircleDistribution::uniform();
    EXPECT_NEAR(arc_mass(lambda, Arc::make(0.0, pi, true, true)), 0.5, 1e-12);
    EXPECT_NEAR(arc_mass(lambda, Arc::full()), 1.0, 1e-12);
    EXPECT_NEAR(arc_mass(CircleDistribution::atom(0.0), Arc::point(0.0)), 1.0, 1e-12);
    // Wrapping arc through the base point.
    EXPECT_NEAR(arc_mass(lambda, Arc::make(pi - 0.5, 1.0, true, true)), 1.0 / (2.0 * pi), 1e-12);
    const CircleDistribution at_base = CircleDistribution::atom(-pi);
    EXPECT_NEAR(arc_mass(at_base, Arc::make(pi - 0.5, 1.0, false, false)), 1.0, 1e-12);
    EXPECT_NEAR(arc_mass(at_base, Arc::make(-pi, 1.0, false, true)), 0.0, 1e-12);
    EXPECT_NEAR(arc_mass(CircleDistribution::atom(pi), Arc::point(-pi)), 1.0, 1e-12);
}

TEST(CircleDistribution, RejectsInvalidKnots) {
    EXPECT_THROW(CircleDistribution::from_knots({{-pi, 0.0, 0.0}}), ValidationError);
    EXPECT_THROW(CircleDistribution::from_knots({{-pi, 0.0, 0.0}, {pi, 0.5, 0.5}}), ValidationError);
    EXPECT_THROW(CircleDistribution::from_knots({{-pi, 0.0, 0.6}, {0.0, 0.4, 0.4}, {pi, 1.0, 1.0}}), ValidationError);
    EXPECT_THROW(CircleDistribution::uniform_arc(0.0, 0.0), ValidationError);
}

TEST(CircleKuiper, Examples) {
    const CircleDistribution lambda = CircleDistribution::uniform();
    EXPECT_NEAR(circle_kuiper(lambda, rotate(lambda, 1.234)), 0.0, 1e-12);
    const CircleDistribution half = CircleDistribution::uniform_arc(0.0, pi);
    EXPECT_NEAR(circle_kuiper(lambda, half), 0.5, 1e-12);
    EXPECT_NEAR(enumerated_distance(lambda, half), 0.5, 1e-12);
    const CircleWitness w = circle_kuiper_witness(lambda, half);
    EXPECT_NEAR(std::abs(arc_mass(lambda, w.arc) - arc_mass(half, w.arc)), 0.5, 1e-12);
    EXPECT_NEAR(circle_kuiper(CircleDistribution::atom(1.0), CircleDistribution::atom(2.0)), 1.0, 1e-12);
    EXPECT_NEAR(circle_kuiper(CircleDistribution::atom(1.0), CircleDistribution::atom(1.0)), 0.0, 1e-12);
}

TEST(CircleKuiper, MatchesArcEnumeration) {
    SplitMix64 rng(101);
    for (int i = 0; i < 300; ++i) {
        const CircleDistribution c1 = random_circle(rng, i % 2 == 1);
        const CircleDistribution c2 = random_circle(rng, i % 2 == 1);
        const double expected = enumerated_distance(c1, c2);
        EXPECT_NEAR(circle_kuiper(c1, c2), expected, 1e-12);
        const CircleWitness w = circle_kuiper_witness(c1, c2);
        EXPECT_NEAR(std::abs(arc_mass(c1, w.arc) - arc_mass(c2, w.arc)), expected, 1e-12);
        EXPECT_NEAR(circle_kuiper(c2, c1), expected, 1e-12);
    }
}

TEST(CircleKuiper, ComplementArcsGiveTheSameDifference) {
    SplitMix64 rng(102);
    for (int i = 0; i < 300; ++i) {
        const CircleDistribution c1 = random_circle(rng, true);
        const CircleDistribution c2 = random_circle(rng, true);
        const double extent = rng.chance(1, 5) ? 0.0 : 2.0 * pi * rng.unit();
        const bool sc = extent == 0.0 || rng.chance(1, 2);
        const bool ec = extent == 0.0 || rng.chance(1, 2);
        const Arc a = Arc::make(-pi + 2.0 * pi * rng.unit(), extent, sc, ec);
        const Arc b = a.complement();
        EXPECT_NEAR(std::abs(arc_mass(c1, a) - arc_mass(c2, a)), std::abs(arc_mass(c1, b) - arc_mass(c2, b)), 1e-12);
    }
}

TEST(Rotate, Properties) {
    SplitMix64 rng(103);
    for (int i = 0; i < 200; ++i) {
        const CircleDistribution c1 = random_circle(rng, true);
        const CircleDistribution c2 = random_circle(rng, true);
        const double theta = -4.0 + 8.0 * rng.unit();
        EXPECT_NEAR(circle_kuiper(rotate(c1, 0.0), c1), 0.0, 1e-12);
        if (c1.has_atoms()) {
            // Atoms may move by an ulp, so compare the distribution functions
            // just off every knot instead of by distance.
            const CircleDistribution twice = rotate(rotate(c1, pi), pi);
            for (const auto& k : c1.knots()) {
                for (double t : {k.angle - 1e-9, k.angle + 1e-9}) {
                    if (t > -pi && t < pi) EXPECT_NEAR(twice.cdf(t), c1.cdf(t), 1e-7);
                }
            }
        } else {
            EXPECT_NEAR(circle_kuiper(rotate(rotate(c1, pi), pi), c1), 0.0, 1e-12);
        }
        EXPECT_NEAR(circle_kuiper(rotate(c1, theta), rotate(c2, theta)), circle_kuiper(c1, c2), 1e-12);
        const Arc a = Arc::make(-pi + 2.0 * pi * rng.unit(), 2.0 * pi * rng.unit(), true, rng.chance(1, 2));
        EXPECT_NEAR(arc_mass(rotate(c1, theta), a), arc_mass(c1, a.rotated(-theta)), 1e-12);
    }
}

TEST(SupportComplement, TwoArcs) {
    const CircleDistribution c =
        mix({{0.5, CircleDistribution::uniform_arc(0.0, 1.0)}, {0.5, CircleDistribution::uniform_arc(2.0, 1.0)}});
    const std::vector<Arc> gaps = support_complement(c);
    ASSERT_EQ(gaps.size(), 2u);
    for (const auto& g : gaps) {
        EXPECT_FALSE(g.start_closed);
        EXPECT_FALSE(g.end_closed);
        EXPECT_NEAR(arc_mass(c, g), 0.0, 1e-12);
    }
    EXPECT_TRUE(support_complement(CircleDistribution::uniform()).empty());
}

TEST(CircleKuiper, UnitDistanceExactlyOnSingleComponents) {
    // Support [0,1] ∪ [2,3]; the complement has components (1,2) and (3, 2π).
    const CircleDistribution c =
        mix({{0.5, CircleDistribution::uniform_arc(0.0, 1.0)}, {0.5, CircleDistribution::uniform_arc(2.0, 1.0)}});
    EXPECT_NEAR(circle_kuiper(c, CircleDistribution::uniform_arc(1.2, 0.6)), 1.0, 1e-12);
    EXPECT_NEAR(circle_kuiper(c, CircleDistribution::uniform_arc(3.5, 2.0)), 1.0, 1e-12);
    EXPECT_NEAR(circle_kuiper(c, CircleDistribution::atom(-1.0)), 1.0, 1e-12);
    const CircleDistribution split =
        mix({{0.5, CircleDistribution::uniform_arc(1.2, 0.6)}, {0.5, CircleDistribution::uniform_arc(4.0, 1.0)}});
    EXPECT_NEAR(circle_kuiper(c, split), 0.5, 1e-12);
    // Touching the support drops below 1.
    EXPECT_LT(circle_kuiper(c, CircleDistribution::uniform_arc(0.5, 1.0)), 1.0 - 1e-3);
}

TEST(TauTransport, CenteredUniform) {
    const double eps = 1e-6;
    const CircleDistribution c = tau_transport(make_uniform(-1, 1), eps);
    EXPECT_NEAR(c.cdf(0.0), 0.5, eps);
    EXPECT_NEAR(arc_mass(c, Arc::make(-pi / 2.0, pi, false, false)), 1.0, 1e-12);
    double worst = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double theta = -pi + 2.0 * pi * i / 2000.0;
        worst = std::max(worst, std::abs(c.cdf(theta) - tau_cdf_of_centered_uniform(theta)));
    }
    EXPECT_LE(worst, eps / 2.0);
    EXPECT_THROW(tau_transport(make_dirac(0), eps), ValidationError);
    EXPECT_THROW(tau_transport(make_uniform(0, 1), 0.0), ValidationError);
    EXPECT_THROW(tau_inverse_transport(CircleDistribution::atom(0.0), eps), ValidationError);
}

TEST(TauTransport, RoundTripAndCorrespondence) {
    SplitMix64 rng(104);
    const DistributionShape shape{3, false, true, true};
    const double eps = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const Distribution mu = random_distribution(rng, shape);
        const Distribution nu = random_distribution(rng, shape);
        const CircleDistribution cm = tau_transport(mu, eps);
        const CircleDistribution cn = tau_transport(nu, eps);
        const double line = kuiper_distance(mu, nu).to_double();
        EXPECT_NEAR(circle_kuiper(cm, cn), line, 2.0 * eps + 1e-9);
        const Distribution back = tau_inverse_transport(cm, eps);
        EXPECT_LE(kuiper_distance(mu, back).to_double(), 2.0 * eps);
    }
}
