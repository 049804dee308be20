#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wavearith/kernels.hpp"

namespace wavearith {

enum class KernelFamily { alpha, alpha_beta, explicit_coefficients };
enum class DeviationObjective { sup_deviation, l2_deviation };

std::string_view family_name(KernelFamily f);
KernelFamily parse_family(std::string_view name);
std::string_view objective_name(DeviationObjective o);
DeviationObjective parse_objective(std::string_view name);

/// Search over a kernel family for the parameters minimizing the deviation
/// of analytic_value(K, x) from x on [lo, hi].
///
/// Parameter names: alpha -> {alpha}; alpha_beta -> {alpha, beta};
/// explicit_coefficients with N harmonics -> {a1..aN, b1..bN} (a0 fixed at 1).
/// For the preset families, pins may also be written as coefficients:
/// a1 = -alpha and b2 = beta.
struct OptimizationProblem {
    KernelFamily family = KernelFamily::alpha;
    std::int64_t harmonics = 0;  // explicit family only
    double lo = 0.0;
    double hi = 1.0;
    DeviationObjective objective = DeviationObjective::sup_deviation;
    std::int64_t budget = 2000;               // max objective evaluations
    std::int64_t samples_per_unit = 10000;    // objective sampling density
    double step_tolerance = 1e-8;             // descent stops below this step
    std::map<std::string, double> pins;
    std::map<std::string, std::pair<double, double>> bounds;  // overrides the default box

    /// Throws DomainError on lo >= hi, budget < 10, unknown parameter names
    /// or a missing harmonic count.
    void validate() const;

    std::vector<std::string> parameter_names() const;
    std::pair<double, double> bounds_for(const std::string& name) const;
    /// Pins normalized to parameter names.
    std::map<std::string, double> normalized_pins() const;

    /// Kernel for a full assignment ordered as parameter_names().
    FourierKernel kernel_for(const std::vector<double>& values) const;
    double evaluate(const FourierKernel& kernel) const;
};

struct OptimizationResult {
    std::vector<std::pair<std::string, double>> params;  // every parameter, pinned ones included
    FourierKernel kernel;
    double objective_value;
    std::int64_t evaluations_used;
    bool converged;
};

/// Coarse grid over the free parameters, then compass-style coordinate
/// descent from the best grid point with step halving. Deterministic for a
/// fixed problem. Runs out of budget -> best point so far, converged = false.
OptimizationResult optimize(const OptimizationProblem& problem);

} // namespace wavearith
