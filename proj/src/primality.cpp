#include "wavearith/primality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <ostream>
#include <string>

#include "wavearith/errors.hpp"
#include "wavearith/format.hpp"
#include "wavearith/kernels.hpp"

namespace wavearith {

namespace {

Factor1D unit_bump_at(double center)
{
    return {[center](double x) { return eval_bump(x - center); }, center - 0.5, center + 0.5, {center}};
}

SeparableField2D::Basis bump_basis(std::int64_t count)
{
    auto basis = std::make_shared<std::vector<Factor1D>>();
    basis->reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        basis->push_back(unit_bump_at(static_cast<double>(i)));
    }
    return basis;
}

void require_positive(std::int64_t v, const char* what)
{
    if (v < 1) {
        throw DomainError(std::string(what) + " must be >= 1, got " + std::to_string(v));
    }
}

double arrangement_defect(const Arrangement& arr, const ApproxConfig& cfg)
{
    const SeparableField2D& h = arr.field;
    const std::vector<double> mx = h.x_marginal(cfg);
    const std::vector<double> my = h.y_marginal(cfg);
    const double mass = static_cast<double>(arr.n);
    SeparableField2D product(h.x_basis(), h.y_basis());
    for (std::size_t i = 0; i < mx.size(); ++i) {
        for (std::size_t j = 0; j < my.size(); ++j) {
            product.set_coefficient(i, j, mx[i] * my[j] / mass);
        }
    }
    return l2_norm_2d(h - product, arr.box, cfg);
}

} // namespace

Box2D grid_box(std::int64_t a, std::int64_t b)
{
    return {-0.5, static_cast<double>(a) - 0.5, -0.5, static_cast<double>(b) - 0.5};
}

SeparableField2D grid_function(std::int64_t a, std::int64_t b)
{
    require_positive(a, "grid_function: a");
    require_positive(b, "grid_function: b");
    SeparableField2D field(bump_basis(a), bump_basis(b));
    for (std::int64_t i = 0; i < a; ++i) {
        for (std::int64_t j = 0; j < b; ++j) {
            field.set_coefficient(static_cast<std::size_t>(i), static_cast<std::size_t>(j), 1.0);
        }
    }
    return field;
}

BumpComb flatten(std::int64_t a, std::int64_t b)
{
    require_positive(a, "flatten: a");
    require_positive(b, "flatten: b");
    return BumpComb::uniform(a, Rational(b));
}

double flattening_residual_literal(std::int64_t a, std::int64_t b, const ApproxConfig& cfg)
{
    const SeparableField2D grid = grid_function(a, b);
    const std::vector<double> g_weights = grid.x_marginal(cfg);

    // y basis: the b bumps plus the constant 1 that carries G_a along y.
    const Box2D box = grid_box(a, b);
    auto y_basis = std::make_shared<std::vector<Factor1D>>(*grid.y_basis());
    y_basis->push_back({[](double) { return 1.0; }, box.y_lo, box.y_hi, {}});
    const std::size_t constant = y_basis->size() - 1;

    SeparableField2D residual(grid.x_basis(), y_basis);
    for (std::size_t i = 0; i < residual.x_size(); ++i) {
        for (std::size_t j = 0; j < constant; ++j) {
            residual.set_coefficient(i, j, grid.coefficient(i, j));
        }
        residual.set_coefficient(i, constant, -g_weights[i]);
    }
    return l2_norm_2d(residual, box, cfg);
}

Arrangement build_arrangement(std::int64_t n, std::int64_t columns)
{
    require_positive(n, "build_arrangement: n");
    if (columns < 1 || columns > n) {
        throw DomainError("build_arrangement needs 1 <= columns <= n");
    }
    const std::int64_t rows = (n + columns - 1) / columns;
    std::vector<std::int64_t> occupancy(static_cast<std::size_t>(rows), columns);
    occupancy.back() = n - columns * (rows - 1);

    SeparableField2D field(bump_basis(columns), bump_basis(rows));
    for (std::int64_t t = 0; t < n; ++t) {
        field.set_coefficient(static_cast<std::size_t>(t % columns), static_cast<std::size_t>(t / columns), 1.0);
    }
    return {n, columns, rows, std::move(occupancy), std::move(field), grid_box(columns, rows)};
}

double separability_defect(std::int64_t n, std::int64_t columns, const ApproxConfig& cfg)
{
    require_positive(n, "separability_defect: n");
    if (columns < 2 || columns > (n + 1) / 2) {
        throw DomainError("separability_defect needs 2 <= c <= ceil(n/2), got c = " + std::to_string(columns) +
                          " for n = " + std::to_string(n));
    }
    return arrangement_defect(build_arrangement(n, columns), cfg);
}

ResidualReport residual_report(std::int64_t n, std::int64_t columns, const ApproxConfig& cfg)
{
    const double defect = separability_defect(n, columns, cfg);
    const std::int64_t rows = (n + columns - 1) / columns;
    ResidualReport report{n, columns, rows, defect, std::nullopt};
    if (columns * rows == n) {
        report.literal_flattening = flattening_residual_literal(columns, rows, cfg);
    }
    return report;
}

std::string_view classification_name(Classification c)
{
    return c == Classification::analytic_prime ? "analytic_prime" : "analytic_composite";
}

RigidityVerdict rigidity_scan(std::int64_t n, double epsilon, const ApproxConfig& cfg)
{
    if (n < 2) {
        throw DomainError("rigidity_scan requires n >= 2");
    }
    if (!(epsilon > 0.0)) {
        throw DomainError("rigidity threshold epsilon must be positive");
    }
    RigidityVerdict verdict{n, std::numeric_limits<double>::infinity(), std::nullopt, epsilon,
                            Classification::analytic_prime, std::nullopt};
    for (std::int64_t c = 2; c <= n / 2; ++c) {
        const double d = separability_defect(n, c, cfg);
        if (d < verdict.min_defect) {
            verdict.min_defect = d;
            verdict.best_c = c;
        }
    }
    if (verdict.min_defect < epsilon) {
        verdict.classification = Classification::analytic_composite;
    }
    if (verdict.best_c && n % *verdict.best_c == 0) {
        verdict.literal_flattening = flattening_residual_literal(*verdict.best_c, n / *verdict.best_c, cfg);
    }
    return verdict;
}

std::vector<RigidityVerdict> residual_curve(std::int64_t n_lo, std::int64_t n_hi, double epsilon,
                                            const ApproxConfig& cfg)
{
    if (n_lo < 2 || n_hi < n_lo) {
        throw DomainError("residual_curve requires 2 <= n_lo <= n_hi");
    }
    std::vector<RigidityVerdict> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        out.push_back(rigidity_scan(n, epsilon, cfg));
    }
    return out;
}

void write_residual_csv(std::ostream& out, std::span<const RigidityVerdict> verdicts)
{
    out << "n,best_c,min_defect,literal_flattening,classification\n";
    for (const RigidityVerdict& v : verdicts) {
        out << v.n << ',';
        if (v.best_c) {
            out << *v.best_c;
        }
        out << ',' << format_number(v.min_defect) << ',';
        if (v.literal_flattening) {
            out << format_number(*v.literal_flattening);
        }
        out << ',' << classification_name(v.classification) << '\n';
    }
}

namespace {

void split_factors(std::int64_t n, const ApproxConfig& cfg, double epsilon, std::vector<std::int64_t>& out)
{
    if (n == 1) {
        return;
    }
    for (std::int64_t c = 2; c * c <= n; ++c) {
        if (separability_defect(n, c, cfg) < epsilon) {
            split_factors(c, cfg, epsilon, out);
            split_factors(n / c, cfg, epsilon, out);
            return;
        }
    }
    out.push_back(n);
}

} // namespace

Factorization analytic_factorization(std::int64_t n, const ApproxConfig& cfg, double epsilon)
{
    require_positive(n, "analytic_factorization: n");
    Factorization result{n, {}, 0.0};
    split_factors(n, cfg, epsilon, result.factors);
    std::sort(result.factors.begin(), result.factors.end());

    std::vector<Factor1D> combs;
    combs.reserve(result.factors.size());
    for (std::int64_t p : result.factors) {
        combs.push_back(BumpComb::natural(p).as_factor());
    }
    result.verification_defect = std::fabs(integrate_separable(combs, cfg) - static_cast<double>(n));
    return result;
}

bool analytic_divides(std::int64_t a, std::int64_t n, const ApproxConfig& cfg, double epsilon)
{
    require_positive(a, "analytic_divides: a");
    require_positive(n, "analytic_divides: n");
    if (a == 1 || a == n) {
        return true;
    }
    if (a > n) {
        return false;
    }
    return arrangement_defect(build_arrangement(n, a), cfg) < epsilon;
}

} // namespace wavearith
