#include "wavearith/json_io.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wavearith/errors.hpp"

namespace wavearith {

namespace {

double finite_number(const Json& j, const char* key)
{
    if (!j.is_number()) {
        throw DomainError(std::string("'") + key + "' must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw DomainError(std::string("'") + key + "' must be finite");
    }
    return v;
}

std::int64_t integer(const Json& j, const char* key)
{
    if (!j.is_number_integer()) {
        throw DomainError(std::string("'") + key + "' must be an integer");
    }
    return j.get<std::int64_t>();
}

std::vector<double> number_array(const Json& j, const char* key)
{
    if (!j.is_array()) {
        throw DomainError(std::string("'") + key + "' must be an array of numbers");
    }
    std::vector<double> out;
    for (const Json& e : j) {
        out.push_back(finite_number(e, key));
    }
    return out;
}

void require_object(const Json& j, const char* what)
{
    if (!j.is_object()) {
        throw DomainError(std::string(what) + " must be a JSON object");
    }
}

} // namespace

Json number_to_json(double v)
{
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    return v;
}

Json kernel_to_json(const FourierKernel& kernel)
{
    return {{"a0", kernel.a0()},
            {"a", std::vector<double>(kernel.cos_coeffs().begin(), kernel.cos_coeffs().end())},
            {"b", std::vector<double>(kernel.sin_coeffs().begin(), kernel.sin_coeffs().end())}};
}

FourierKernel kernel_from_json(const Json& j)
{
    require_object(j, "kernel");
    for (const auto& [key, value] : j.items()) {
        if (key != "a0" && key != "a" && key != "b") {
            throw DomainError("unknown kernel key '" + key + "'");
        }
    }
    if (!j.contains("a0")) {
        throw DomainError("kernel JSON needs 'a0'");
    }
    return FourierKernel::from_coefficients(finite_number(j.at("a0"), "a0"),
                                            j.contains("a") ? number_array(j.at("a"), "a") : std::vector<double>{},
                                            j.contains("b") ? number_array(j.at("b"), "b") : std::vector<double>{});
}

Json config_to_json(const RunConfig& cfg)
{
    return {{"rel_tol", cfg.approx.rel_tol},
            {"abs_tol", cfg.approx.abs_tol},
            {"grid_per_unit", cfg.approx.grid_per_unit},
            {"max_depth", cfg.approx.max_depth},
            {"epsilon", cfg.epsilon}};
}

RunConfig config_from_json(const Json& j, RunConfig base)
{
    require_object(j, "config");
    for (const auto& [key, value] : j.items()) {
        if (key == "rel_tol") {
            base.approx.rel_tol = finite_number(value, "rel_tol");
        } else if (key == "abs_tol") {
            base.approx.abs_tol = finite_number(value, "abs_tol");
        } else if (key == "grid_per_unit") {
            base.approx.grid_per_unit = static_cast<int>(integer(value, "grid_per_unit"));
        } else if (key == "max_depth") {
            base.approx.max_depth = static_cast<int>(integer(value, "max_depth"));
        } else if (key == "epsilon") {
            base.epsilon = finite_number(value, "epsilon");
        } else {
            throw DomainError("unknown config key '" + key + "'");
        }
    }
    base.approx.validate();
    if (!(base.epsilon > 0.0)) {
        throw DomainError("'epsilon' must be positive");
    }
    return base;
}

OptimizationProblem problem_from_json(const Json& j)
{
    require_object(j, "optimization problem");
    OptimizationProblem p;
    if (!j.contains("family") || !j.at("family").is_string()) {
        throw DomainError("optimization problem needs a string 'family'");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "family") {
            p.family = parse_family(value.get<std::string>());
        } else if (key == "harmonics") {
            p.harmonics = integer(value, "harmonics");
        } else if (key == "interval") {
            const std::vector<double> iv = number_array(value, "interval");
            if (iv.size() != 2) {
                throw DomainError("'interval' must be [lo, hi]");
            }
            p.lo = iv[0];
            p.hi = iv[1];
        } else if (key == "objective") {
            if (!value.is_string()) {
                throw DomainError("'objective' must be a string");
            }
            p.objective = parse_objective(value.get<std::string>());
        } else if (key == "budget") {
            p.budget = integer(value, "budget");
        } else if (key == "samples_per_unit") {
            p.samples_per_unit = integer(value, "samples_per_unit");
        } else if (key == "step_tolerance") {
            p.step_tolerance = finite_number(value, "step_tolerance");
        } else if (key == "pins") {
            require_object(value, "'pins'");
            for (const auto& [name, v] : value.items()) {
                p.pins[name] = finite_number(v, "pins");
            }
        } else if (key == "bounds") {
            require_object(value, "'bounds'");
            for (const auto& [name, v] : value.items()) {
                const std::vector<double> range = number_array(v, "bounds");
                if (range.size() != 2) {
                    throw DomainError("bounds for '" + name + "' must be [lo, hi]");
                }
                p.bounds[name] = {range[0], range[1]};
            }
        } else {
            throw DomainError("unknown optimization problem key '" + key + "'");
        }
    }
    p.validate();
    return p;
}

Json problem_to_json(const OptimizationProblem& p)
{
    Json bounds = Json::object();
    for (const auto& [name, range] : p.bounds) {
        bounds[name] = {range.first, range.second};
    }
    Json j = {{"family", family_name(p.family)},
              {"interval", {p.lo, p.hi}},
              {"objective", objective_name(p.objective)},
              {"budget", p.budget},
              {"samples_per_unit", p.samples_per_unit},
              {"step_tolerance", p.step_tolerance},
              {"pins", p.pins},
              {"bounds", bounds}};
    if (p.family == KernelFamily::explicit_coefficients) {
        j["harmonics"] = p.harmonics;
    }
    return j;
}

Json result_to_json(const OptimizationResult& r)
{
    Json params = Json::object();
    for (const auto& [name, value] : r.params) {
        params[name] = value;
    }
    return {{"params", params},
            {"kernel", kernel_to_json(r.kernel)},
            {"objective_value", number_to_json(r.objective_value)},
            {"evaluations_used", r.evaluations_used},
            {"converged", r.converged}};
}

Json verdict_to_json(const RigidityVerdict& v)
{
    return {{"n", v.n},
            {"best_c", v.best_c ? Json(*v.best_c) : Json(nullptr)},
            {"min_defect", number_to_json(v.min_defect)},
            {"literal_flattening", v.literal_flattening ? Json(*v.literal_flattening) : Json(nullptr)},
            {"epsilon", v.epsilon},
            {"classification", classification_name(v.classification)}};
}

Json factorization_to_json(const Factorization& f)
{
    return {{"n", f.n}, {"factors", f.factors}, {"verification_defect", f.verification_defect}};
}

} // namespace wavearith
