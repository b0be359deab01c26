#include <gtest/gtest.h>

#include <cmath>

#include "kuiper/interval.hpp"
#include "kuiper/moebius.hpp"
#include "kuiper/rational.hpp"
#include "oracle.hpp"

using namespace kuiper;

TEST(Rational, ParsesFractionsAndDecimals) {
    EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
    EXPECT_EQ(Rational::parse("1e-3"), Rational(1, 1000));
    EXPECT_EQ(Rational::parse(" 7 "), Rational(7));
    EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
    EXPECT_EQ(Rational(-4, 2).to_string(), "-2");
    EXPECT_THROW(Rational::parse("1/0"), ValidationError);
    EXPECT_THROW(Rational::parse("abc"), ValidationError);
    EXPECT_THROW(Rational::parse(""), ValidationError);
}

TEST(Rational, CanonicalForm) {
    const Rational r(10, -4);
    EXPECT_EQ(r.numerator(), "-5");
    EXPECT_EQ(r.denominator(), "2");
}

TEST(Rational, AdditionIsExactlyInvertible) {
    oracle::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational p = rng.rational(-1000, 1000, rng.range(1, 997));
        const Rational q = rng.rational(-1000, 1000, rng.range(1, 991));
        EXPECT_EQ((p + q) - q, p);
        if (!q.is_zero()) EXPECT_EQ((p * q) / q, p);
    }
}

TEST(Rational, FromDoubleIsExact) {
    EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
    EXPECT_EQ(Rational::from_double(0.5), Rational(1, 2));
    EXPECT_THROW(Rational::from_double(NAN), ValidationError);
}

TEST(ExtReal, TotalOrder) {
    const ExtReal lo = ExtReal::minus_infinity();
    const ExtReal hi = ExtReal::plus_infinity();
    EXPECT_LT(lo, ExtReal(Rational(-1000000)));
    EXPECT_LT(ExtReal(Rational(1000000)), hi);
    EXPECT_LT(lo, hi);
    EXPECT_EQ(ExtReal::parse("-inf"), lo);
    EXPECT_EQ(ExtReal::parse("+inf"), hi);
    EXPECT_EQ(ExtReal::parse("3/2"), ExtReal(Rational(3, 2)));
    EXPECT_EQ(hi.to_string(), "+inf");
}

TEST(SolveQuadratic, Examples) {
    auto s = solve_quadratic(1, 0, -1);
    ASSERT_EQ(s.roots.size(), 2u);
    EXPECT_EQ(s.roots[0].value, Rational(-1));
    EXPECT_EQ(s.roots[1].value, Rational(1));
    EXPECT_TRUE(s.roots[0].exact && s.roots[1].exact);

    s = solve_quadratic(0, 2, -1);
    ASSERT_EQ(s.roots.size(), 1u);
    EXPECT_EQ(s.roots[0].value, Rational(1, 2));
    EXPECT_TRUE(s.roots[0].exact);

    EXPECT_TRUE(solve_quadratic(1, 0, 1).roots.empty());
    EXPECT_TRUE(solve_quadratic(0, 0, 0).identically_zero);
    EXPECT_TRUE(solve_quadratic(0, 0, 5).roots.empty());
}

TEST(SolveQuadratic, IrrationalRootsFlaggedAndAccurate) {
    const auto s = solve_quadratic(1, 0, -2);
    ASSERT_EQ(s.roots.size(), 2u);
    EXPECT_FALSE(s.roots[1].exact);
    EXPECT_NEAR(s.roots[1].value.to_double(), std::sqrt(2.0), 1e-15);
}

TEST(SolveQuadratic, ResidualPropertyAndOrder) {
    oracle::Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const Rational a = rng.rational(-20, 20, rng.range(1, 9));
        const Rational b = rng.rational(-20, 20, rng.range(1, 9));
        const Rational c = rng.rational(-20, 20, rng.range(1, 9));
        const auto s = solve_quadratic(a, b, c);
        if (s.identically_zero) continue;
        const double scale = std::max({std::abs(a.to_double()), std::abs(b.to_double()), std::abs(c.to_double()), 1.0});
        for (std::size_t k = 0; k < s.roots.size(); ++k) {
            const Rational& t = s.roots[k].value;
            const Rational residual = a * t * t + b * t + c;
            if (s.roots[k].exact) {
                EXPECT_TRUE(residual.is_zero());
            } else {
                EXPECT_LE(std::abs(residual.to_double()), 1e-12 * scale);
            }
            if (k > 0) EXPECT_LT(s.roots[k - 1].value, t);
        }
        // Discriminant sign decides the root count for a true quadratic.
        if (!a.is_zero()) {
            const int disc = (b * b - Rational(4) * a * c).sign();
            EXPECT_EQ(s.roots.size(), disc < 0 ? 0u : disc == 0 ? 1u : 2u);
        }
    }
}

TEST(Interval, ConstructionRules) {
    EXPECT_THROW(Interval(Rational(1), Rational(0), true, true), ValidationError);
    EXPECT_THROW(Interval(Rational(1), Rational(1), true, false), ValidationError);
    EXPECT_EQ(Interval::point(3).to_string(), "{3}");
    EXPECT_EQ(Interval(ExtReal::minus_infinity(), Rational(0), false, true).to_string(), "(-inf,0]");
    EXPECT_EQ(Interval::closed(1, 2).to_string(), "[1,2]");
}

TEST(Interval, Containment) {
    const Interval half_open(Rational(0), Rational(1), true, false);
    EXPECT_TRUE(half_open.contains(Rational(0)));
    EXPECT_FALSE(half_open.contains(Rational(1)));
    EXPECT_TRUE(Interval::whole_line().contains(half_open));
    EXPECT_FALSE(Interval::open(0, 1).contains(half_open));
    EXPECT_TRUE(Interval::closed(0, 1).contains(Interval::point(1)));
}

TEST(Moebius, EvaluationAndInfinity) {
    const Moebius f{1, -1, 1, 0};  // 1 − 1/t
    EXPECT_EQ(f(Rational(2)), Rational(1, 2));
    EXPECT_EQ(*f.limit_at_infinity(), Rational(1));
    EXPECT_TRUE(f(ProjPoint{Rational(0)}).is_infinity());
    EXPECT_EQ(*f(ProjPoint::infinity()).finite, Rational(1));
    EXPECT_EQ(*f.pole(), Rational(0));
}

TEST(Moebius, NormalizationIdentifiesScaledCoefficients) {
    const Moebius f{2, 4, 6, 8};
    const Moebius g{1, 2, 3, 4};
    EXPECT_TRUE(f.same_function(g));
    const Moebius n = f.normalized();
    EXPECT_EQ(n.c, Rational(1));
    EXPECT_TRUE((Moebius{0, 5, 0, 5}.normalized().same_function(Moebius::constant(1))));
}

TEST(Moebius, CompositionAndInverseAgreePointwise) {
    oracle::Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const Moebius f{rng.rational(-5, 5, 3), rng.rational(-5, 5, 3), rng.rational(-5, 5, 3), rng.rational(-5, 5, 3)};
        const Moebius g{rng.rational(-5, 5, 2), rng.rational(-5, 5, 2), rng.rational(-5, 5, 2), rng.rational(-5, 5, 2)};
        if (f.is_constant() || g.is_constant()) continue;
        const Rational t = rng.rational(-7, 7, 11);
        const ProjPoint gt = g(ProjPoint{t});
        EXPECT_EQ(compose(f, g)(ProjPoint{t}), f(gt));
        EXPECT_EQ(f.inverse()(f(ProjPoint{t})), ProjPoint{t});
    }
}

TEST(Moebius, ThroughThreePoints) {
    const Moebius f = Moebius::through(0, 1, 2, 5, 7, 8);
    EXPECT_EQ(f(Rational(0)), Rational(5));
    EXPECT_EQ(f(Rational(1)), Rational(7));
    EXPECT_EQ(f(Rational(2)), Rational(8));
}

TEST(Moebius, SumInClass) {
    const Moebius f{1, 0, 1, 1};
    EXPECT_TRUE(sum_in_class(f, Moebius::constant(2)).has_value());
    EXPECT_TRUE((sum_in_class(f, Moebius{3, 1, 1, 1}).has_value()));
    EXPECT_FALSE((sum_in_class(f, Moebius{1, 0, 1, 2}).has_value()));
    const Moebius s = *sum_in_class(f, Moebius::constant(2));
    EXPECT_EQ(s(Rational(3)), f(Rational(3)) + Rational(2));
}
