#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "wavearith/bump_model.hpp"
#include "wavearith/quadrature.hpp"

namespace wavearith {

/// Classification threshold on the minimal separability defect. Full-grid
/// numerical noise sits near 1e-13 at the default resolution; partial-row
/// arrangements stay above 0.9 for every n we scan.
inline constexpr double default_rigidity_epsilon = 1e-4;

/// Support box [-1/2, a - 1/2] x [-1/2, b - 1/2] of an a x b grid of unit bumps.
Box2D grid_box(std::int64_t a, std::int64_t b);

/// F_{a,b}(x, y) = sum_{i<a, j<b} phi(x - i) phi(y - j).
SeparableField2D grid_function(std::int64_t a, std::int64_t b);

/// G_a(x) = b * sum_{i<a} phi(x - i): the grid integrated over y.
BumpComb flatten(std::int64_t a, std::int64_t b);

/// L2 norm over grid_box(a, b) of F_{a,b}(x, y) - G_a(x), with G_a held
/// constant in y. Never zero: equals sqrt(a b I2 (I2 - 2b + b^2)) with
/// I2 = integral of phi^2.
double flattening_residual_literal(std::int64_t a, std::int64_t b, const ApproxConfig& cfg = {});

/// n unit bumps laid out row-major in `columns` columns: bump t sits at
/// (t mod columns, t div columns). The last row is partial unless columns | n.
struct Arrangement {
    std::int64_t n;
    std::int64_t columns;
    std::int64_t rows;
    std::vector<std::int64_t> row_occupancy;
    SeparableField2D field;
    Box2D box;

    bool full() const { return columns * rows == n; }
};

/// Requires 1 <= columns <= n.
Arrangement build_arrangement(std::int64_t n, std::int64_t columns);

/// L2 distance over the arrangement's box between the arrangement H and the
/// rank-1 product of its marginals, (M_x (x) M_y) / n. Zero exactly when the
/// grid is full. Requires 2 <= columns <= ceil(n/2).
double separability_defect(std::int64_t n, std::int64_t columns, const ApproxConfig& cfg = {});

struct ResidualReport {
    std::int64_t n;
    std::int64_t columns;
    std::int64_t rows;
    double defect;
    std::optional<double> literal_flattening;  // only for full grids
};

ResidualReport residual_report(std::int64_t n, std::int64_t columns, const ApproxConfig& cfg = {});

enum class Classification { analytic_prime, analytic_composite };

std::string_view classification_name(Classification c);

struct RigidityVerdict {
    std::int64_t n;
    double min_defect;  // +inf when no candidate column count exists
    std::optional<std::int64_t> best_c;
    double epsilon;
    Classification classification;
    std::optional<double> literal_flattening;  // for best_c, when that grid is full
};

/// Scans columns c in [2, floor(n/2)]; ties go to the smallest c. n = 2, 3
/// have no candidates and are analytic primes. Requires n >= 2.
RigidityVerdict rigidity_scan(std::int64_t n, double epsilon = default_rigidity_epsilon,
                              const ApproxConfig& cfg = {});

/// rigidity_scan for every n in [n_lo, n_hi], ascending.
std::vector<RigidityVerdict> residual_curve(std::int64_t n_lo, std::int64_t n_hi,
                                            double epsilon = default_rigidity_epsilon,
                                            const ApproxConfig& cfg = {});

/// Header n,best_c,min_defect,literal_flattening,classification; absent
/// optionals are empty fields, the +inf sentinel is written as `inf`.
void write_residual_csv(std::ostream& out, std::span<const RigidityVerdict> verdicts);

struct Factorization {
    std::int64_t n;
    std::vector<std::int64_t> factors;  // ascending
    double verification_defect;         // |separable integral of the factor combs - n|
};

/// Repeatedly splits off the smallest column count c <= sqrt(n) whose
/// arrangement has defect below epsilon. n = 1 gives no factors.
Factorization analytic_factorization(std::int64_t n, const ApproxConfig& cfg = {},
                                     double epsilon = default_rigidity_epsilon);

/// True iff n unit bumps fill an a-column rectangular grid.
bool analytic_divides(std::int64_t a, std::int64_t n, const ApproxConfig& cfg = {},
                      double epsilon = default_rigidity_epsilon);

} // namespace wavearith
