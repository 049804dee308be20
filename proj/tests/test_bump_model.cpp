#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wavearith/bump_model.hpp"
#include "wavearith/errors.hpp"

using namespace wavearith;

TEST(Rational, ReducesAndNormalizesSign)
{
    const Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(Rational(0, 5), Rational(0));
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
    EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational(0));
    EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, Parse)
{
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_THROW(parse_rational("x"), DomainError);
    EXPECT_THROW(parse_rational("1/"), DomainError);
    EXPECT_THROW(parse_rational("1/0"), DomainError);
    EXPECT_THROW(parse_rational("1.5"), DomainError);
}

TEST(Rational, OverflowIsDetected)
{
    const Rational big(std::int64_t{1} << 62);
    EXPECT_THROW((void)(big + big), DomainError);
    EXPECT_THROW((void)(big * Rational(4)), DomainError);
}

TEST(BumpComb, NaturalLayout)
{
    const auto c = BumpComb::natural(4);
    ASSERT_EQ(c.terms().size(), 4u);
    EXPECT_EQ(c.terms()[0].shift, 1);
    EXPECT_EQ(c.exact_value(), Rational(4));
    // bump k centered at k - 1
    EXPECT_NEAR(c(0.0), oracle::bump_at_0, 1e-12);
    EXPECT_NEAR(c(3.0), oracle::bump_at_0, 1e-12);
    EXPECT_EQ(c(4.0), 0.0);
    EXPECT_EQ(c(-0.6), 0.0);
    EXPECT_NEAR(c(1.3), oracle::bump(0.3), 1e-12);
    EXPECT_TRUE(BumpComb::natural(0).empty());
}

TEST(BumpComb, RationalAndExplicit)
{
    const auto r = BumpComb::rational(-3, 4);
    EXPECT_EQ(r.exact_value(), Rational(-3, 4));
    EXPECT_NEAR(r.integrate({}), -0.75, 1e-12);
    const BumpComb e({{5, Rational(2)}, {2, Rational(1, 2)}});
    EXPECT_EQ(e.terms()[0].shift, 2);
    EXPECT_NEAR(e.integrate({}), 2.5, 1e-12);
    EXPECT_NEAR(e(4.0), 2 * oracle::bump_at_0, 1e-12);
    EXPECT_THROW(BumpComb({{1, Rational(1)}, {1, Rational(2)}}), DomainError);
}

TEST(BumpComb, IntegralMatchesSimpson)
{
    const BumpComb c({{1, Rational(3)}, {2, Rational(-1, 2)}, {4, Rational(5, 7)}});
    const double s = oracle::simpson([&](double x) { return c(x); }, -0.5, 3.5, 40000);
    EXPECT_NEAR(c.integrate({}), s, 1e-9);
    const auto f = c.as_factor();
    EXPECT_EQ(f.lo, -0.5);
    EXPECT_EQ(f.hi, 3.5);
    EXPECT_NEAR(f.integrate({}), 3.0 - 0.5 + 5.0 / 7.0, 1e-11);
}

TEST(Values, Naturals)
{
    for (int n = 0; n <= 30; ++n) {
        EXPECT_NEAR(nat_value(n), n, 1e-10);
    }
    EXPECT_THROW(nat_value(-1), DomainError);
}

TEST(Values, Rationals)
{
    EXPECT_NEAR(rational_value(3, 4), 0.75, 1e-12);
    EXPECT_NEAR(rational_value(-5, 3), -5.0 / 3.0, 1e-12);
    EXPECT_EQ(rational_value(0, 9), 0.0);
    EXPECT_NEAR(rational_value(Rational(7, 2)), 3.5, 1e-12);
    EXPECT_THROW(rational_value(1, 0), DomainError);
}

TEST(Values, ProductsAndPowers)
{
    EXPECT_NEAR(mul_value(3, 7), 21.0, 1e-10);
    EXPECT_NEAR(mul_value(1, 1), 1.0, 1e-12);
    EXPECT_NEAR(pow_value(2, 5), 32.0, 1e-9);
    EXPECT_NEAR(pow_value(10, 1), 10.0, 1e-10);
    EXPECT_THROW(mul_value(0, 3), DomainError);
    EXPECT_THROW(pow_value(2, 0), DomainError);
    EXPECT_THROW(pow_value(2, 60), DomainError);
}

TEST(Grid, FieldIsTensorProduct)
{
    const GridArrangement g({2, 3}, Rational(1, 2));
    EXPECT_EQ(g.exact_value(), Rational(3));
    const double p[] = {1.0, 2.0};
    EXPECT_NEAR(g(p), 0.5 * oracle::bump_at_0 * oracle::bump_at_0, 1e-12);
    const double q[] = {2.0, 0.0};
    EXPECT_EQ(g(q), 0.0);
    EXPECT_NEAR(g.integrate({}), 3.0, 1e-10);
    EXPECT_EQ(g.axis_factors().size(), 2u);
}

TEST(Grid, OverlappingSpacing)
{
    // spacing 1/2 makes neighbouring bumps overlap; mass is still one per bump
    const GridArrangement g({3}, Rational(1), {0.5});
    EXPECT_NEAR(g.integrate({}), 3.0, 1e-10);
    const double x[] = {0.25};
    EXPECT_NEAR(g(x), oracle::bump(0.25) + oracle::bump(-0.25), 1e-12);
    EXPECT_THROW(GridArrangement({2}, Rational(1), {0.0}), DomainError);
    EXPECT_THROW(GridArrangement({2, 2}, Rational(1), {1.0}), DomainError);
}

TEST(Axioms, Metadata)
{
    EXPECT_EQ(std::size(all_axioms), 9u);
    for (Axiom a : all_axioms) {
        EXPECT_EQ(parse_axiom(axiom_name(a)), a);
    }
    EXPECT_THROW(parse_axiom("nope"), DomainError);
    EXPECT_EQ(axiom_arity(Axiom::distributive), 3u);
    EXPECT_TRUE(axiom_requires_naturals(Axiom::mul_assoc));
    EXPECT_FALSE(axiom_requires_naturals(Axiom::linearity));
}

TEST(Axioms, HoldOnSamples)
{
    const std::vector<Rational> r3 = {Rational(1, 2), Rational(-7, 3), Rational(5)};
    const std::vector<Rational> n3 = {Rational(3), Rational(4), Rational(5)};
    for (Axiom a : all_axioms) {
        const auto& src = axiom_requires_naturals(a) ? n3 : r3;
        const std::vector<Rational> ops(src.begin(), src.begin() + static_cast<long>(axiom_arity(a)));
        const AxiomCheck c = check_axiom(a, ops);
        EXPECT_TRUE(c.holds) << axiom_name(a);
        EXPECT_LT(c.defect, 1e-8);
    }
    const std::vector<Rational> d = {Rational(2), Rational(3), Rational(4)};
    const auto dist = check_axiom(Axiom::distributive, d);
    EXPECT_NEAR(dist.lhs, 14.0, 1e-9);
}

TEST(Axioms, DomainChecks)
{
    const std::vector<Rational> half = {Rational(1, 2), Rational(3)};
    EXPECT_THROW(check_axiom(Axiom::mul_comm, half), DomainError);
    const std::vector<Rational> one = {Rational(1)};
    EXPECT_THROW(check_axiom(Axiom::add_comm, one), DomainError);
}
