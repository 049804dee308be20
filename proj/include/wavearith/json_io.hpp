#pragma once

#include "json.hpp"

#include "wavearith/bump_model.hpp"
#include "wavearith/kernel_opt.hpp"
#include "wavearith/kernels.hpp"
#include "wavearith/primality.hpp"
#include "wavearith/quadrature.hpp"

namespace wavearith {

using Json = nlohmann::json;

/// Quadrature settings plus the rigidity threshold, as read from a config file:
/// {"rel_tol", "abs_tol", "grid_per_unit", "max_depth", "epsilon"}, all optional.
struct RunConfig {
    ApproxConfig approx;
    double epsilon = default_rigidity_epsilon;
};

/// {"a0": a0, "a": [a_1, a_2, ...], "b": [b_1, b_2, ...]}; array position 0
/// holds harmonic k = 1. Missing "a" / "b" mean no harmonics of that kind.
Json kernel_to_json(const FourierKernel& kernel);
FourierKernel kernel_from_json(const Json& j);

Json config_to_json(const RunConfig& cfg);
/// Starts from `base` and overrides the keys present. Unknown keys or
/// invalid values throw DomainError.
RunConfig config_from_json(const Json& j, RunConfig base = {});

/// {"family", "harmonics", "interval": [lo, hi], "objective", "budget",
///  "samples_per_unit", "step_tolerance", "pins": {name: v},
///  "bounds": {name: [lo, hi]}}; everything but "family" optional.
OptimizationProblem problem_from_json(const Json& j);
Json problem_to_json(const OptimizationProblem& p);
Json result_to_json(const OptimizationResult& r);

Json verdict_to_json(const RigidityVerdict& v);
Json factorization_to_json(const Factorization& f);

/// Non-finite values become the strings "inf", "-inf", "nan".
Json number_to_json(double v);

} // namespace wavearith
