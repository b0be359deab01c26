#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "kuiper/metrics.hpp"
#include "kuiper/random.hpp"
#include "oracle.hpp"

using namespace kuiper;

namespace {

const Distribution U03 = make_uniform(0, 3);
const Distribution U12 = make_uniform(1, 2);

// Sampled extremes of f_μ − f_ν: a lower bound for both one-sided sups.
std::pair<double, double> sampled_extremes(const Distribution& mu, const Distribution& nu) {
    std::vector<Rational> nodes = mu.nodes();
    nodes.insert(nodes.end(), nu.nodes().begin(), nu.nodes().end());
    std::sort(nodes.begin(), nodes.end());
    const Rational lo = nodes.front() - Rational(50);
    const long steps = ((nodes.back() - lo + Rational(50)) * Rational(32)).to_double();
    double mx = 0.0;
    double mn = 0.0;
    auto probe = [&](const Rational& t) {
        const double d = (mu.cdf(t) - nu.cdf(t)).to_double();
        const double dl = (mu.cdf_left(t) - nu.cdf_left(t)).to_double();
        mx = std::max({mx, d, dl});
        mn = std::min({mn, d, dl});
    };
    for (const auto& t : nodes) probe(t);
    for (long i = 0; i <= steps; ++i) probe(lo + Rational(i, 32));
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        for (int i = 1; i < 100; ++i) probe(nodes[k] + (nodes[k + 1] - nodes[k]) * Rational(i, 100));
    }
    return {mx, mn};
}

}  // namespace

TEST(Fixtures, ExactValues) {
    EXPECT_EQ(kuiper_distance(U03, U12).value, Rational(2, 3));
    EXPECT_EQ(ks_distance(U03, U12).value, Rational(1, 3));
    EXPECT_EQ(tv_distance(make_uniform(0, 2), make_uniform(1, 3)).value, Rational(1, 2));
    EXPECT_EQ(kuiper_distance(make_uniform(0, 1), make_uniform(0, 2)).value, Rational(1, 2));
    EXPECT_TRUE(kuiper_distance(U03, U12).exact);
}

TEST(Fixtures, FixturesAgreeWithMixtureOracle) {
    const oracle::Mixture a{{{Rational(1), Rational(0), Rational(3)}}};
    const oracle::Mixture b{{{Rational(1), Rational(1), Rational(2)}}};
    EXPECT_EQ(oracle::kuiper(a, b), Rational(2, 3));
    EXPECT_EQ(oracle::ks(a, b), Rational(1, 3));
    const oracle::Mixture c{{{Rational(1), Rational(0), Rational(2)}}};
    const oracle::Mixture d{{{Rational(1), Rational(1), Rational(3)}}};
    EXPECT_EQ(oracle::tv(c, d), Rational(1, 2));
}

TEST(Ks, Examples) {
    EXPECT_EQ(ks_distance(U03, U03).value, Rational(0));
    EXPECT_EQ(ks_distance(make_dirac(0), make_dirac(1)).value, Rational(1));
}

TEST(Tv, Examples) {
    EXPECT_EQ(tv_distance(make_uniform(0, 1), make_uniform(1, 2)).value, Rational(1));
    EXPECT_EQ(tv_distance(make_dirac(0), make_uniform(0, 1)).value, Rational(1));
    EXPECT_EQ(tv_distance(U03, U12).value, Rational(2, 3));
}

TEST(Witness, Examples) {
    const WitnessResult w = kuiper_witness(U03, U12);
    EXPECT_EQ(w.distance.value, Rational(2, 3));
    EXPECT_EQ(w.witness.interval, Interval::closed(1, 2));
    EXPECT_EQ(w.witness.signed_value, Rational(-2, 3));

    const WitnessResult d = kuiper_witness(make_dirac(0), make_uniform(0, 1));
    EXPECT_EQ(d.distance.value, Rational(1));
    EXPECT_EQ(d.witness.interval, Interval::point(0));
    EXPECT_EQ(d.witness.signed_value, Rational(1));

    const WitnessResult z = kuiper_witness(U03, U03);
    EXPECT_EQ(z.distance.value, Rational(0));
    EXPECT_TRUE(z.witness.interval.is_degenerate());
    EXPECT_EQ(interval_mass(U03, z.witness.interval), Rational(0));
}

TEST(BruteForce, Examples) {
    EXPECT_EQ(brute_force_interval_sup(U03, U12).value, Rational(2, 3));
    EXPECT_EQ(brute_force_interval_sup(make_dirac(0), make_dirac(1)).value, Rational(1));
    EXPECT_EQ(brute_force_interval_sup(U03, U03).value, Rational(0));
    EXPECT_FALSE(brute_force_interval_sup(U03, U12).approximate);
}

TEST(DiracDistance, Examples) {
    const Distribution m = mix({{Rational(1, 2), make_dirac(0)}, {Rational(1, 2), make_uniform(0, 1)}});
    EXPECT_EQ(dirac_distance(m, 0), Rational(1, 2));
    EXPECT_EQ(dirac_distance(make_dirac(3), 3), Rational(0));
    EXPECT_EQ(dirac_distance(make_uniform(0, 1), Rational(1, 2)), Rational(1));
}

TEST(Metrics, AgreeWithMixtureOracleOnRandomPairs) {
    oracle::Rng rng(2024);
    for (int i = 0; i < 400; ++i) {
        const oracle::Mixture a = oracle::random_mixture(rng);
        const oracle::Mixture b = oracle::random_mixture(rng);
        const Distribution mu = a.build();
        const Distribution nu = b.build();
        const Scalar ku = kuiper_distance(mu, nu);
        EXPECT_TRUE(ku.exact);
        EXPECT_EQ(ku.value, oracle::kuiper(a, b));
        EXPECT_EQ(ks_distance(mu, nu).value, oracle::ks(a, b));
        EXPECT_EQ(tv_distance(mu, nu).value, oracle::tv(a, b));
        EXPECT_EQ(brute_force_interval_sup(mu, nu).value, ku.value);
    }
}

TEST(Metrics, WitnessAttainsDistance) {
    oracle::Rng rng(77);
    for (int i = 0; i < 300; ++i) {
        const Distribution mu = oracle::random_mixture(rng).build();
        const Distribution nu = oracle::random_mixture(rng).build();
        const WitnessResult w = kuiper_witness(mu, nu);
        const Rational attained = interval_mass(mu, w.witness.interval) - interval_mass(nu, w.witness.interval);
        EXPECT_EQ(attained, w.witness.signed_value);
        EXPECT_EQ(abs(attained), kuiper_distance(mu, nu).value);
    }
}

TEST(Metrics, ZeroDistanceIffEqual) {
    SplitMix64 rng(4);
    for (int i = 0; i < 200; ++i) {
        const Distribution mu = random_distribution(rng, DistributionShape{});
        const Distribution nu = random_distribution(rng, DistributionShape{});
        EXPECT_EQ(kuiper_distance(mu, nu).value.is_zero(), mu == nu);
        EXPECT_TRUE(kuiper_distance(mu, mu).value.is_zero());
    }
}

TEST(Metrics, MoebiusPiecesMatchDenseSampling) {
    SplitMix64 rng(606);
    int nonlinear = 0;
    for (int i = 0; i < 25; ++i) {
        const Distribution mu = random_distribution(rng, DistributionShape{3, true, true, true});
        const Distribution nu = random_distribution(rng, DistributionShape{3, true, true, true});
        if (mu.is_piecewise_linear() && nu.is_piecewise_linear()) continue;
        ++nonlinear;
        const auto [mx, mn] = sampled_extremes(mu, nu);
        const Scalar ku = kuiper_distance(mu, nu);
        const Scalar ks = ks_distance(mu, nu);
        // Never below a realized value; close to the sampled supremum.
        EXPECT_GE(ku.to_double(), mx - mn - 1e-12);
        EXPECT_NEAR(ku.to_double(), mx - mn, 1e-5);
        EXPECT_GE(ks.to_double(), std::max(mx, -mn) - 1e-12);
        EXPECT_NEAR(ks.to_double(), std::max(mx, -mn), 1e-5);
        const OracleResult o = brute_force_interval_sup(mu, nu);
        EXPECT_TRUE(o.approximate);
        EXPECT_LE(o.value.to_double(), ku.to_double() + 1e-12);
    }
    EXPECT_GT(nonlinear, 8);
}

TEST(Metrics, TvOfMoebiusTailsAgainstClosedForm) {
    // μ: CDF 1 − 1/t on [1, ∞); ν: δ₁. The whole of μ is continuous, so TV = 1.
    const Distribution tail = Distribution::from_pieces({Rational(1)}, {Moebius::constant(0), Moebius{1, -1, 1, 0}});
    EXPECT_EQ(tv_distance(tail, make_dirac(1)).value, Rational(1));
    // ν = U[1,2]: on (1,2) the density 1/t² is below 1, so μ − ν is
    // positive only past 2 and (μ − ν)⁺ = μ((2, ∞)) = 1/2.
    EXPECT_EQ(tv_distance(tail, make_uniform(1, 2)).value, Rational(1, 2));
}

TEST(Metrics, BoundedIntervalsSuffice) {
    // The maximum of |μ(I) − ν(I)| over bounded intervals with endpoints at
    // breakpoints already equals the half-line form.
    oracle::Rng rng(303);
    for (int i = 0; i < 300; ++i) {
        const oracle::Mixture a = oracle::random_mixture(rng);
        const oracle::Mixture b = oracle::random_mixture(rng);
        const std::vector<Rational> pts = oracle::merged_breakpoints(a, b);
        auto diff = [&](const Rational& t, bool inclusive) { return a.cdf(t, inclusive) - b.cdf(t, inclusive); };
        Rational best(0);
        for (std::size_t x = 0; x < pts.size(); ++x) {
            for (std::size_t y = x; y < pts.size(); ++y) {
                for (bool lc : {false, true}) {
                    for (bool hc : {false, true}) {
                        if (x == y && !(lc && hc)) continue;
                        const Rational v = diff(pts[y], hc) - diff(pts[x], !lc);
                        best = std::max(best, abs(v));
                    }
                }
            }
        }
        EXPECT_EQ(best, oracle::kuiper(a, b));
        EXPECT_EQ(best, kuiper_distance(a.build(), b.build()).value);
    }
}
