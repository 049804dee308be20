#include <gtest/gtest.h>

#include <cmath>

#include "wavearith/errors.hpp"
#include "wavearith/json_io.hpp"

using namespace wavearith;

TEST(KernelJson, RoundTrip)
{
    const auto k = FourierKernel::from_coefficients(0.9, {-0.5, 0.1}, {0.0, 0.3, 0.2});
    const Json j = kernel_to_json(k);
    EXPECT_EQ(j.at("a").size(), 2u);
    EXPECT_EQ(j.at("a")[0], -0.5);  // position 0 is harmonic 1
    EXPECT_EQ(kernel_from_json(j), k);
    const auto preset = kernel_from_json(kernel_to_json(FourierKernel::standard()));
    EXPECT_EQ(preset.a0(), 1.0);
    EXPECT_EQ(preset.cos_coeff(1), -1.0);
}

TEST(KernelJson, Rejects)
{
    EXPECT_THROW(kernel_from_json(Json::parse(R"({"a":[1]})")), DomainError);
    EXPECT_THROW(kernel_from_json(Json::parse(R"({"a0":1,"c":[1]})")), DomainError);
    EXPECT_THROW(kernel_from_json(Json::parse(R"({"a0":"x"})")), DomainError);
    EXPECT_THROW(kernel_from_json(Json::parse(R"({"a0":1,"a":[1,"q"]})")), DomainError);
    EXPECT_THROW(kernel_from_json(Json::parse("[1,2]")), DomainError);
    EXPECT_NO_THROW(kernel_from_json(Json::parse(R"({"a0":1})")));
}

TEST(ConfigJson, RoundTripAndOverride)
{
    RunConfig cfg;
    cfg.approx.rel_tol = 1e-9;
    cfg.approx.grid_per_unit = 64;
    cfg.epsilon = 1e-3;
    const RunConfig back = config_from_json(config_to_json(cfg));
    EXPECT_EQ(back.approx, cfg.approx);
    EXPECT_EQ(back.epsilon, cfg.epsilon);
    const RunConfig partial = config_from_json(Json::parse(R"({"max_depth": 12})"), cfg);
    EXPECT_EQ(partial.approx.max_depth, 12);
    EXPECT_EQ(partial.approx.grid_per_unit, 64);
}

TEST(ConfigJson, Rejects)
{
    EXPECT_THROW(config_from_json(Json::parse(R"({"tol":1})")), DomainError);
    EXPECT_THROW(config_from_json(Json::parse(R"({"rel_tol":-1})")), DomainError);
    EXPECT_THROW(config_from_json(Json::parse(R"({"grid_per_unit":2.5})")), DomainError);
    EXPECT_THROW(config_from_json(Json::parse(R"({"epsilon":0})")), DomainError);
}

TEST(ProblemJson, RoundTrip)
{
    const Json j = Json::parse(R"({
        "family": "alpha_beta", "interval": [0, 0.75], "objective": "l2_deviation",
        "budget": 500, "samples_per_unit": 2000, "pins": {"a1": -1},
        "bounds": {"beta": [-0.5, 0.5]}})");
    const OptimizationProblem p = problem_from_json(j);
    EXPECT_EQ(p.family, KernelFamily::alpha_beta);
    EXPECT_EQ(p.hi, 0.75);
    EXPECT_EQ(p.budget, 500);
    EXPECT_EQ(p.pins.at("a1"), -1.0);
    EXPECT_EQ(p.bounds_for("beta").first, -0.5);
    const OptimizationProblem q = problem_from_json(problem_to_json(p));
    EXPECT_EQ(problem_to_json(q), problem_to_json(p));

    const auto e = problem_from_json(Json::parse(R"({"family":"explicit","harmonics":2})"));
    EXPECT_EQ(problem_to_json(e).at("harmonics"), 2);
}

TEST(ProblemJson, Rejects)
{
    EXPECT_THROW(problem_from_json(Json::parse(R"({"interval":[0,1]})")), DomainError);
    EXPECT_THROW(problem_from_json(Json::parse(R"({"family":"alpha","interval":[1,0]})")), DomainError);
    EXPECT_THROW(problem_from_json(Json::parse(R"({"family":"alpha","interval":[0]})")), DomainError);
    EXPECT_THROW(problem_from_json(Json::parse(R"({"family":"alpha","budget":3})")), DomainError);
    EXPECT_THROW(problem_from_json(Json::parse(R"({"family":"alpha","extra":3})")), DomainError);
    EXPECT_THROW(problem_from_json(Json::parse(R"({"family":"alpha","pins":{"beta":1}})")), DomainError);
}

TEST(ResultJson, Shapes)
{
    OptimizationProblem p;
    p.samples_per_unit = 200;
    const Json r = result_to_json(optimize(p));
    EXPECT_TRUE(r.at("params").contains("alpha"));
    EXPECT_TRUE(r.at("converged").is_boolean());
    EXPECT_NO_THROW(kernel_from_json(r.at("kernel")));

    const Json v = verdict_to_json(rigidity_scan(3));
    EXPECT_EQ(v.at("min_defect"), "inf");
    EXPECT_TRUE(v.at("best_c").is_null());
    EXPECT_EQ(v.at("classification"), "analytic_prime");

    const Json f = factorization_to_json(analytic_factorization(12));
    EXPECT_EQ(f.at("factors"), Json::parse("[2,2,3]"));
}

TEST(NumberJson, NonFinite)
{
    EXPECT_EQ(number_to_json(INFINITY), "inf");
    EXPECT_EQ(number_to_json(-INFINITY), "-inf");
    EXPECT_EQ(number_to_json(NAN), "nan");
    EXPECT_EQ(number_to_json(1.5), 1.5);
}
