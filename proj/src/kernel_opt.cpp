#include "wavearith/kernel_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wavearith/errors.hpp"
#include "wavearith/periodic_model.hpp"

namespace wavearith {

std::string_view family_name(KernelFamily f)
{
    switch (f) {
    case KernelFamily::alpha: return "alpha";
    case KernelFamily::alpha_beta: return "alpha_beta";
    case KernelFamily::explicit_coefficients: return "explicit";
    }
    return "?";
}

KernelFamily parse_family(std::string_view name)
{
    if (name == "alpha") return KernelFamily::alpha;
    if (name == "alpha_beta") return KernelFamily::alpha_beta;
    if (name == "explicit") return KernelFamily::explicit_coefficients;
    throw DomainError("unknown kernel family '" + std::string(name) + "'");
}

std::string_view objective_name(DeviationObjective o)
{
    return o == DeviationObjective::sup_deviation ? "sup_deviation" : "l2_deviation";
}

DeviationObjective parse_objective(std::string_view name)
{
    if (name == "sup_deviation") return DeviationObjective::sup_deviation;
    if (name == "l2_deviation") return DeviationObjective::l2_deviation;
    throw DomainError("unknown objective '" + std::string(name) + "'");
}

std::vector<std::string> OptimizationProblem::parameter_names() const
{
    switch (family) {
    case KernelFamily::alpha: return {"alpha"};
    case KernelFamily::alpha_beta: return {"alpha", "beta"};
    case KernelFamily::explicit_coefficients: {
        std::vector<std::string> names;
        for (std::int64_t k = 1; k <= harmonics; ++k) {
            names.push_back("a" + std::to_string(k));
        }
        for (std::int64_t k = 1; k <= harmonics; ++k) {
            names.push_back("b" + std::to_string(k));
        }
        return names;
    }
    }
    return {};
}

std::pair<double, double> OptimizationProblem::bounds_for(const std::string& name) const
{
    if (auto it = bounds.find(name); it != bounds.end()) {
        return it->second;
    }
    if (name == "alpha") {
        return {0.0, 1.0};
    }
    if (name == "beta") {
        return {-1.0, 1.0};
    }
    return {-2.0, 2.0};
}

std::map<std::string, double> OptimizationProblem::normalized_pins() const
{
    std::map<std::string, double> out;
    const bool preset = family != KernelFamily::explicit_coefficients;
    for (const auto& [name, value] : pins) {
        if (preset && name == "a1") {
            out["alpha"] = -value;
        } else if (family == KernelFamily::alpha_beta && name == "b2") {
            out["beta"] = value;
        } else {
            out[name] = value;
        }
    }
    return out;
}

void OptimizationProblem::validate() const
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("optimization interval must satisfy lo < hi");
    }
    if (budget < 10) {
        throw DomainError("optimization budget must be at least 10 evaluations");
    }
    if (samples_per_unit < 1) {
        throw DomainError("samples_per_unit must be positive");
    }
    if (!(step_tolerance > 0.0)) {
        throw DomainError("step_tolerance must be positive");
    }
    if (family == KernelFamily::explicit_coefficients && harmonics < 1) {
        throw DomainError("explicit family needs harmonics >= 1");
    }
    const std::vector<std::string> names = parameter_names();
    auto known = [&](const std::string& n) { return std::find(names.begin(), names.end(), n) != names.end(); };
    for (const auto& [name, range] : bounds) {
        if (!known(name)) {
            throw DomainError("bounds given for unknown parameter '" + name + "'");
        }
        if (!(range.first <= range.second)) {
            throw DomainError("empty bounds for parameter '" + name + "'");
        }
    }
    for (const auto& [name, value] : normalized_pins()) {
        if (!known(name)) {
            throw DomainError("pin given for unknown parameter '" + name + "'");
        }
        if (!std::isfinite(value)) {
            throw DomainError("pin for '" + name + "' must be finite");
        }
    }
}

FourierKernel OptimizationProblem::kernel_for(const std::vector<double>& values) const
{
    switch (family) {
    case KernelFamily::alpha: return FourierKernel::alpha(values.at(0));
    case KernelFamily::alpha_beta: return FourierKernel::alpha_beta(values.at(0), values.at(1));
    case KernelFamily::explicit_coefficients: {
        const auto n = static_cast<std::size_t>(harmonics);
        std::vector<double> a(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<double> b(values.begin() + static_cast<std::ptrdiff_t>(n), values.end());
        return FourierKernel::from_coefficients(1.0, std::move(a), std::move(b));
    }
    }
    throw DomainError("unknown kernel family");
}

double OptimizationProblem::evaluate(const FourierKernel& kernel) const
{
    const auto samples = static_cast<std::size_t>(
        std::max<double>(100.0, std::ceil((hi - lo) * static_cast<double>(samples_per_unit))) + 1.0);
    return objective == DeviationObjective::sup_deviation ? deviation_sup(kernel, lo, hi, samples)
                                                          : deviation_l2(kernel, lo, hi, samples);
}

namespace {

class BudgetedObjective {
public:
    BudgetedObjective(const OptimizationProblem& problem, std::vector<double> base,
                      std::vector<std::size_t> free_index)
        : problem_(problem), base_(std::move(base)), free_(std::move(free_index))
    {
    }

    bool exhausted() const { return used_ >= problem_.budget; }
    std::int64_t used() const { return used_; }

    double operator()(const std::vector<double>& free_values)
    {
        ++used_;
        return problem_.evaluate(problem_.kernel_for(assemble(free_values)));
    }

    std::vector<double> assemble(const std::vector<double>& free_values) const
    {
        std::vector<double> full = base_;
        for (std::size_t d = 0; d < free_.size(); ++d) {
            full[free_[d]] = free_values[d];
        }
        return full;
    }

private:
    const OptimizationProblem& problem_;
    std::vector<double> base_;
    std::vector<std::size_t> free_;
    std::int64_t used_ = 0;
};

} // namespace

OptimizationResult optimize(const OptimizationProblem& problem)
{
    problem.validate();
    const std::vector<std::string> names = problem.parameter_names();
    const std::map<std::string, double> pins = problem.normalized_pins();

    std::vector<double> base(names.size(), 0.0);
    std::vector<std::size_t> free_index;
    std::vector<double> lower;
    std::vector<double> upper;
    for (std::size_t p = 0; p < names.size(); ++p) {
        if (auto it = pins.find(names[p]); it != pins.end()) {
            base[p] = it->second;
            continue;
        }
        const auto [l, u] = problem.bounds_for(names[p]);
        free_index.push_back(p);
        lower.push_back(l);
        upper.push_back(u);
    }
    const std::size_t dims = free_index.size();
    BudgetedObjective objective(problem, base, free_index);

    auto finish = [&](const std::vector<double>& point, double value, bool converged) {
        const std::vector<double> full = objective.assemble(point);
        OptimizationResult result{{}, problem.kernel_for(full), value, objective.used(), converged};
        for (std::size_t p = 0; p < names.size(); ++p) {
            result.params.emplace_back(names[p], full[p]);
        }
        return result;
    };

    if (dims == 0) {
        const double value = objective({});
        return finish({}, value, true);
    }

    // Grid phase: about half the budget, at least 2 points per axis.
    const double share = static_cast<double>(problem.budget) / 2.0;
    auto per_axis = static_cast<std::int64_t>(std::floor(std::pow(share, 1.0 / static_cast<double>(dims)) + 1e-9));
    per_axis = std::clamp<std::int64_t>(per_axis, 2, 41);

    std::vector<double> best(dims);
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<std::int64_t> index(dims, 0);
    std::vector<double> point(dims);
    for (bool more = true; more && !objective.exhausted();) {
        for (std::size_t d = 0; d < dims; ++d) {
            const double t = static_cast<double>(index[d]) / static_cast<double>(per_axis - 1);
            point[d] = lower[d] + t * (upper[d] - lower[d]);
        }
        const double v = objective(point);
        if (v < best_value) {
            best_value = v;
            best = point;
        }
        more = false;
        for (std::size_t d = 0; d < dims; ++d) {
            if (++index[d] < per_axis) {
                more = true;
                break;
            }
            index[d] = 0;
        }
        if (!more) {
            break;
        }
    }

    // Coordinate descent.
    std::vector<double> step(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        step[d] = 0.5 * (upper[d] - lower[d]) / static_cast<double>(per_axis - 1);
    }
    auto largest_step = [&] { return *std::max_element(step.begin(), step.end()); };

    while (largest_step() > problem.step_tolerance) {
        bool improved = false;
        for (std::size_t d = 0; d < dims && !improved; ++d) {
            for (const double direction : {+1.0, -1.0}) {
                std::vector<double> trial = best;
                trial[d] = std::clamp(best[d] + direction * step[d], lower[d], upper[d]);
                if (trial[d] == best[d]) {
                    continue;
                }
                if (objective.exhausted()) {
                    return finish(best, best_value, false);
                }
                const double v = objective(trial);
                if (v < best_value) {
                    best_value = v;
                    best = std::move(trial);
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) {
            for (double& s : step) {
                s *= 0.5;
            }
        }
    }
    return finish(best, best_value, true);
}

} // namespace wavearith
