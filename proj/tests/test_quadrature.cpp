#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "oracles.hpp"
#include "wavearith/errors.hpp"
#include "wavearith/kernels.hpp"
#include "wavearith/quadrature.hpp"

using namespace wavearith;

TEST(Integrate1D, Polynomials)
{
    const auto r = integrate_1d([](double x) { return x * x * x - 2 * x + 1; }, -1.0, 3.0);
    EXPECT_NEAR(r.value, 20.0 - 8.0 + 4.0, 1e-12);
    EXPECT_GE(r.intervals, 1u);
}

TEST(Integrate1D, Smooth)
{
    EXPECT_NEAR(integrate_1d([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value, 2.0, 1e-12);
    EXPECT_NEAR(integrate_1d([](double x) { return std::exp(x); }, 0.0, 1.0).value, std::numbers::e - 1.0, 1e-12);
}

TEST(Integrate1D, BumpToTightTolerance)
{
    ApproxConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 1e-15;
    const double z = integrate_1d(oracle::raw_bump, -0.5, 0.5, cfg).value;
    EXPECT_NEAR(z, oracle::bump_Z, 1e-14);
}

TEST(Integrate1D, ErrorEstimateHonoured)
{
    ApproxConfig cfg;
    cfg.rel_tol = 1e-8;
    const auto r = integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, cfg);
    EXPECT_LE(r.err_estimate, cfg.rel_tol * std::fabs(r.value) + cfg.abs_tol);
    EXPECT_NEAR(r.value, 2.0 / 3.0, 1e-7);
}

TEST(Integrate1D, EmptyIntervalAndErrors)
{
    EXPECT_EQ(integrate_1d([](double) { return 1.0; }, 2.0, 2.0).value, 0.0);
    EXPECT_THROW(integrate_1d([](double) { return 1.0; }, 2.0, 1.0), DomainError);
    EXPECT_THROW(integrate_1d([](double) { return NAN; }, 0.0, 1.0), DomainError);
}

TEST(Integrate1D, DepthCapThrows)
{
    ApproxConfig cfg;
    cfg.max_depth = 2;
    cfg.rel_tol = 1e-14;
    cfg.abs_tol = 1e-16;
    EXPECT_THROW(integrate_1d([](double x) { return 1.0 / std::sqrt(x + 1e-14); }, 0.0, 1.0, cfg),
                 ConvergenceError);
}

TEST(Integrate1D, Breakpoints)
{
    const double b[] = {-0.5, 0.5, 1.5, 2.5};
    const auto f = [](double x) { return oracle::bump(x) + oracle::bump(x - 1) + 3 * oracle::bump(x - 2); };
    EXPECT_NEAR(integrate_1d(f, b).value, 5.0, 1e-10);
}

TEST(Config, Validate)
{
    ApproxConfig ok;
    EXPECT_NO_THROW(ok.validate());
    auto bad = ok;
    bad.rel_tol = 0.0;
    EXPECT_THROW(bad.validate(), DomainError);
    bad = ok;
    bad.abs_tol = -1.0;
    EXPECT_THROW(bad.validate(), DomainError);
    bad = ok;
    bad.grid_per_unit = 4;
    EXPECT_THROW(bad.validate(), DomainError);
    bad = ok;
    bad.max_depth = 0;
    EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Separable, ProductOfIntegrals)
{
    std::vector<Factor1D> f = {
        {[](double x) { return x; }, 0.0, 2.0, {}},
        {[](double y) { return 3.0; }, -1.0, 1.0, {}},
        {oracle::bump, -0.5, 0.5, {}},
    };
    EXPECT_NEAR(integrate_separable(f), 2.0 * 6.0 * 1.0, 1e-10);
    EXPECT_EQ(integrate_separable(std::span<const Factor1D>{}), 1.0);
}

TEST(L2Distance, ConstantAndLinear)
{
    const Box2D box{0.0, 2.0, 0.0, 1.0};
    const double d = l2_distance_2d([](double, double) { return 3.0; }, [](double, double) { return 1.0; }, box);
    EXPECT_NEAR(d, std::sqrt(4.0 * 2.0), 1e-12);
    // f - g = x y; integral of x^2 y^2 = 8/3 * 1/3; trapezoid error is O(h^2).
    const double e = l2_distance_2d([](double x, double y) { return x * y; }, [](double, double) { return 0.0; }, box);
    EXPECT_NEAR(e, std::sqrt(8.0 / 9.0), 1e-4);
}

TEST(L2Distance, GridIntervals)
{
    ApproxConfig cfg;
    EXPECT_EQ(grid_intervals(1.0, cfg), 256u);
    EXPECT_EQ(grid_intervals(2.5, cfg), 640u);
    EXPECT_EQ(grid_intervals(0.001, cfg), 1u);
}

TEST(L2Distance, Errors)
{
    EXPECT_THROW(Box2D({1.0, 0.0, 0.0, 1.0}).validate(), DomainError);
    EXPECT_THROW(l2_distance_2d([](double, double) { return NAN; }, [](double, double) { return 0.0; },
                                Box2D{0, 1, 0, 1}),
                 DomainError);
}

namespace {

SeparableField2D::Basis bump_basis(int count)
{
    auto v = std::make_shared<std::vector<Factor1D>>();
    for (int i = 0; i < count; ++i) {
        const double c = i;
        v->push_back({[c](double x) { return eval_bump(x - c); }, c - 0.5, c + 0.5, {c}});
    }
    return v;
}

} // namespace

TEST(SeparableField, GramPathMatchesBruteForce)
{
    auto bx = bump_basis(3);
    auto by = bump_basis(2);
    SeparableField2D f(bx, by);
    f.set_coefficient(0, 0, 1.0);
    f.set_coefficient(1, 1, -2.0);
    f.set_coefficient(2, 0, 0.5);
    f.add_coefficient(2, 0, 0.25);
    EXPECT_EQ(f.coefficient(2, 0), 0.75);
    const Box2D box{-0.5, 2.5, -0.5, 1.5};
    const double brute = l2_distance_2d([&](double x, double y) { return f(x, y); },
                                        [](double, double) { return 0.0; }, box);
    EXPECT_NEAR(l2_norm_2d(f, box), brute, 1e-10);
    EXPECT_NEAR(l2_norm_2d(f, box), oracle::bump_I2 * std::sqrt(1.0 + 4.0 + 0.5625), 1e-6);
}

TEST(SeparableField, MarginalsAndIntegral)
{
    SeparableField2D f(bump_basis(2), bump_basis(3));
    f.set_coefficient(0, 2, 2.0);
    f.set_coefficient(1, 0, 1.0);
    f.set_coefficient(1, 1, 1.0);
    const auto mx = f.x_marginal({});
    const auto my = f.y_marginal({});
    ASSERT_EQ(mx.size(), 2u);
    ASSERT_EQ(my.size(), 3u);
    EXPECT_NEAR(mx[0], 2.0, 1e-10);
    EXPECT_NEAR(mx[1], 2.0, 1e-10);
    EXPECT_NEAR(my[0], 1.0, 1e-10);
    EXPECT_NEAR(my[2], 2.0, 1e-10);
    EXPECT_NEAR(f.integral({}), 4.0, 1e-10);
}

TEST(SeparableField, DifferenceNeedsSharedBasis)
{
    auto bx = bump_basis(2);
    auto by = bump_basis(2);
    SeparableField2D f(bx, by), g(bx, by), h(bump_basis(2), by);
    f.set_coefficient(1, 1, 3.0);
    g.set_coefficient(1, 1, 3.0);
    const auto d = f - g;
    EXPECT_EQ(l2_norm_2d(d, Box2D{-0.5, 1.5, -0.5, 1.5}), 0.0);
    EXPECT_THROW((void)(f - h), DomainError);
}
