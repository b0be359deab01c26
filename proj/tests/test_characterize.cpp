#include <gtest/gtest.h>

#include "kuiper/characterize.hpp"
#include "kuiper/io.hpp"
#include "kuiper/metrics.hpp"
#include "oracle.hpp"

using namespace kuiper;

namespace {

Distribution two_blocks() {
    return mix({{Rational(1, 2), make_uniform(0, 1)}, {Rational(1, 2), make_uniform(2, 3)}});
}

Interval iv(ExtReal lo, ExtReal hi, bool lc, bool hc) { return Interval(std::move(lo), std::move(hi), lc, hc); }

// Coarse integer layouts, so that disjoint supports (distance 1) come up
// often enough to exercise both answers.
oracle::Mixture sparse_mixture(oracle::Rng& rng) {
    oracle::Mixture m;
    const long n = rng.range(1, 2);
    Rational total(0);
    for (long i = 0; i < n; ++i) {
        const Rational w(rng.range(1, 3));
        total += w;
        const Rational lo(rng.range(-4, 4));
        m.parts.push_back({w, lo, rng.range(0, 2) == 0 ? lo : lo + Rational(rng.range(1, 2))});
    }
    for (auto& c : m.parts) c.weight /= total;
    return m;
}

}  // namespace

TEST(UnitDistanceRegions, Examples) {
    const UnitDistanceRegions r = unit_distance_regions(two_blocks());
    ASSERT_EQ(r.outer.size(), 2u);
    EXPECT_EQ(r.outer[0], iv(ExtReal::minus_infinity(), Rational(0), false, true));
    EXPECT_EQ(r.outer[1], iv(Rational(3), ExtReal::plus_infinity(), true, false));
    ASSERT_EQ(r.gaps.size(), 1u);
    EXPECT_EQ(r.gaps[0], Interval::closed(Rational(1), Rational(2)));
    EXPECT_TRUE(r.dirac_excluded_points.empty());

    const UnitDistanceRegions u = unit_distance_regions(make_uniform(0, 1));
    ASSERT_EQ(u.outer.size(), 2u);
    EXPECT_EQ(u.outer[0], iv(ExtReal::minus_infinity(), Rational(0), false, true));
    EXPECT_EQ(u.outer[1], iv(Rational(1), ExtReal::plus_infinity(), true, false));
    EXPECT_TRUE(u.gaps.empty());

    EXPECT_THROW(unit_distance_regions(make_dirac(0)), PreconditionError);
}

TEST(UnitDistanceRegions, AtomsCloseTheHullAndSplitGaps) {
    // δ₀/3 + U[1,2]/3 + δ₄/3: hull [0,4], gaps (0,1] and [2,4).
    const Distribution mu = mix({{Rational(1, 3), make_dirac(0)},
                                 {Rational(1, 3), make_uniform(1, 2)},
                                 {Rational(1, 3), make_dirac(4)}});
    const UnitDistanceRegions r = unit_distance_regions(mu);
    ASSERT_EQ(r.outer.size(), 2u);
    EXPECT_EQ(r.outer[0], iv(ExtReal::minus_infinity(), Rational(0), false, false));
    EXPECT_EQ(r.outer[1], iv(Rational(4), ExtReal::plus_infinity(), false, false));
    ASSERT_EQ(r.gaps.size(), 2u);
    EXPECT_EQ(r.gaps[0], iv(Rational(0), Rational(1), false, true));
    EXPECT_EQ(r.gaps[1], iv(Rational(2), Rational(4), true, false));
    EXPECT_EQ(r.dirac_excluded_points, (std::vector<Rational>{Rational(0), Rational(4)}));
    for (const auto& g : r.gaps) EXPECT_TRUE(interval_mass(mu, g).is_zero());
    for (const auto& o : r.outer) EXPECT_TRUE(interval_mass(mu, o).is_zero());
}

TEST(UnitDistanceRegions, UnboundedSupportHasNoOuterPart) {
    // Density 1/(1+t)² tail on (0, ∞) after an atom at 0.
    const Distribution tail = Distribution::from_pieces({Rational(0)}, {Moebius::constant(0), Moebius{1, 0, 1, 1}});
    const UnitDistanceRegions r = unit_distance_regions(mix({{Rational(1, 2), tail}, {Rational(1, 2), make_uniform(-2, -1)}}));
    ASSERT_EQ(r.outer.size(), 1u);
    EXPECT_EQ(r.outer[0], iv(ExtReal::minus_infinity(), Rational(-2), false, true));
    ASSERT_EQ(r.gaps.size(), 1u);
    EXPECT_EQ(r.gaps[0], iv(Rational(-1), Rational(0), true, true));
}

TEST(IsUnitDistant, Examples) {
    EXPECT_TRUE(is_unit_distant(two_blocks(), make_uniform(Rational(6, 5), Rational(9, 5))));
    EXPECT_EQ(kuiper_distance(two_blocks(), make_uniform(Rational(6, 5), Rational(9, 5))).value, Rational(1));
    EXPECT_FALSE(is_unit_distant(make_uniform(0, 1), make_uniform(Rational(1, 2), Rational(3, 2))));
    EXPECT_TRUE(is_unit_distant(make_dirac(0), make_uniform(0, 1)));
    EXPECT_FALSE(is_unit_distant(make_dirac(0), make_dirac(0)));
    EXPECT_TRUE(is_unit_distant(make_dirac(0), make_dirac(1)));
    // Mass on both outer half-lines still counts as one region.
    const Distribution split = mix({{Rational(1, 2), make_dirac(-1)}, {Rational(1, 2), make_dirac(4)}});
    EXPECT_TRUE(is_unit_distant(two_blocks(), split));
    // Mass spread over a gap and the outside does not.
    const Distribution spread = mix({{Rational(1, 2), make_dirac(Rational(3, 2))}, {Rational(1, 2), make_dirac(4)}});
    EXPECT_FALSE(is_unit_distant(two_blocks(), spread));
    EXPECT_EQ(kuiper_distance(two_blocks(), spread).value, Rational(1, 2));
}

TEST(IsUnitDistant, AgreesWithDirectDistance) {
    oracle::Rng rng(77);
    int unit = 0;
    for (int i = 0; i < 1500; ++i) {
        const oracle::Mixture a = i % 3 == 0 ? oracle::random_mixture(rng) : sparse_mixture(rng);
        const oracle::Mixture b = sparse_mixture(rng);
        const Distribution mu = a.build();
        const Distribution nu = b.build();
        const bool expected = oracle::kuiper(a, b) == Rational(1);
        unit += expected;
        EXPECT_EQ(is_unit_distant(mu, nu), expected) << serialize(mu) << " vs " << serialize(nu);
        EXPECT_EQ(is_unit_distant(nu, mu), expected);
    }
    EXPECT_GT(unit, 200);
    EXPECT_LT(unit, 1300);
}

TEST(Polar, Examples) {
    const std::vector<Distribution> universe{make_dirac(1), make_uniform(0, 1), make_uniform(2, 3), make_dirac(0)};
    const std::vector<Distribution> p = polar({make_dirac(0)}, universe);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p[0], make_dirac(1));
    EXPECT_EQ(p[1], make_uniform(0, 1));
    EXPECT_EQ(p[2], make_uniform(2, 3));
    EXPECT_EQ(polar({}, universe).size(), universe.size());
    EXPECT_TRUE(polar({make_uniform(0, 1)}, {make_uniform(0, 1)}).empty());
}

TEST(Polar, DiracPolarIsTheAtomFreeFilter) {
    oracle::Rng rng(78);
    for (int round = 0; round < 50; ++round) {
        std::vector<Distribution> universe;
        for (int i = 0; i < 12; ++i) universe.push_back(sparse_mixture(rng).build());
        const Rational x(rng.range(-4, 4));
        std::vector<Distribution> expected;
        for (const auto& nu : universe) {
            if (nu.atom(x).is_zero()) expected.push_back(nu);
        }
        EXPECT_EQ(polar({make_dirac(x)}, universe), expected);
    }
}

TEST(Polar, MatchesDirectDistanceFilter) {
    oracle::Rng rng(79);
    for (int round = 0; round < 30; ++round) {
        std::vector<Distribution> set;
        std::vector<Distribution> universe;
        for (int i = 0; i < 2; ++i) set.push_back(sparse_mixture(rng).build());
        for (int i = 0; i < 10; ++i) universe.push_back(sparse_mixture(rng).build());
        std::vector<Distribution> expected;
        for (const auto& nu : universe) {
            bool all = true;
            for (const auto& mu : set) all = all && kuiper_distance(mu, nu).value == Rational(1);
            if (all) expected.push_back(nu);
        }
        EXPECT_EQ(polar(set, universe), expected);
    }
}

TEST(AbsoluteContinuityPolarCheck, Examples) {
    const Distribution u02 = make_uniform(0, 2);
    EXPECT_TRUE(absolute_continuity_polar_check(u02, make_uniform(0, 1), unit_distance_probes(u02)));
    EXPECT_THROW(absolute_continuity_polar_check(make_uniform(0, 1), make_dirac(5), {}), PreconditionError);
    const Distribution u01 = make_uniform(0, 1);
    EXPECT_TRUE(absolute_continuity_polar_check(u01, u01, unit_distance_probes(u01)));
    EXPECT_TRUE(absolute_continuity_polar_check(u01, u01, {make_dirac(0), u02, make_dirac(7)}));
}

TEST(AbsoluteContinuityPolarCheck, HoldsForRandomDominatedPairs) {
    oracle::Rng rng(80);
    for (int i = 0; i < 200; ++i) {
        const oracle::Mixture a = oracle::random_mixture(rng);
        // ν: reweight μ's own components.
        oracle::Mixture b = a;
        Rational total(0);
        for (auto& c : b.parts) {
            c.weight *= Rational(rng.range(0, 3));
            total += c.weight;
        }
        if (total.is_zero()) continue;
        std::erase_if(b.parts, [](const oracle::Component& c) { return c.weight.is_zero(); });
        for (auto& c : b.parts) c.weight /= total;
        const Distribution mu = a.build();
        const Distribution nu = b.build();
        if (mu.is_dirac()) continue;
        EXPECT_TRUE(absolute_continuity_polar_check(mu, nu, unit_distance_probes(mu))) << serialize(mu);
    }
}

TEST(UnitDistanceProbes, AllAtDistanceOne) {
    oracle::Rng rng(81);
    for (int i = 0; i < 300; ++i) {
        const Distribution mu = (i % 4 == 0 ? sparse_mixture(rng) : oracle::random_mixture(rng)).build();
        const auto probes = unit_distance_probes(mu);
        if (mu.is_dirac()) EXPECT_EQ(probes.size(), 4u);
        for (const auto& p : probes) {
            EXPECT_EQ(kuiper_distance(mu, p).value, Rational(1)) << serialize(mu) << " / " << serialize(p);
            EXPECT_TRUE(is_unit_distant(mu, p));
        }
    }
}
