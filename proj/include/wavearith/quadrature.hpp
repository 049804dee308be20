#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace wavearith {

using Func1D = std::function<double(double)>;
using Func2D = std::function<double(double, double)>;

struct ApproxConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int grid_per_unit = 256;  // L2 sampling density per unit length, per axis
    int max_depth = 40;       // bisection depth cap for adaptive quadrature

    /// Throws DomainError unless tolerances are positive, grid_per_unit >= 16
    /// and max_depth >= 1.
    void validate() const;

    friend bool operator==(const ApproxConfig&, const ApproxConfig&) = default;
};

struct Box2D {
    double x_lo;
    double x_hi;
    double y_lo;
    double y_hi;

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t intervals = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) quadrature with global bisection of the
/// worst interval. On return |err_estimate| <= rel_tol*|value| + abs_tol.
/// Throws ConvergenceError if an interval deeper than max_depth would be
/// needed, DomainError if lo > hi or a sample is non-finite.
QuadResult integrate_1d(const Func1D& f, double lo, double hi, const ApproxConfig& cfg = {});

/// Same, over consecutive pieces [b0, b1], [b1, b2], ... each integrated to
/// the full tolerance. Used where the integrand has known break points
/// (e.g. the junctions between adjacent bumps of a comb).
QuadResult integrate_1d(const Func1D& f, std::span<const double> breakpoints,
                        const ApproxConfig& cfg = {});

/// A univariate factor together with its support (f vanishes outside
/// [lo, hi]) and optional interior break points for quadrature.
struct Factor1D {
    Func1D fn;
    double lo;
    double hi;
    std::vector<double> breaks;

    double integrate(const ApproxConfig& cfg) const;
};

/// Product of the 1D integrals of the factors. Empty input gives 1.
double integrate_separable(std::span<const Factor1D> factors, const ApproxConfig& cfg = {});

/// sqrt of the composite-trapezoid approximation of the integral of (f-g)^2
/// over the box, sampled on a tensor grid with grid_per_unit intervals per
/// unit length along each axis. Throws DomainError on non-finite samples.
double l2_distance_2d(const Func2D& f, const Func2D& g, const Box2D& box,
                      const ApproxConfig& cfg = {});

/// Number of trapezoid intervals used along an axis of the given length.
std::size_t grid_intervals(double length, const ApproxConfig& cfg);

/// A 2D field that is a finite linear combination of rank-1 products
///
///     F(x, y) = sum_{i,j} C[i][j] * u_i(x) * v_j(y)
///
/// over fixed x and y bases. Fields sharing the same basis objects can be
/// combined coefficient-wise, which keeps differences that vanish
/// analytically exactly zero.
class SeparableField2D {
public:
    using Basis = std::shared_ptr<const std::vector<Factor1D>>;

    SeparableField2D(Basis x_basis, Basis y_basis);

    std::size_t x_size() const { return x_basis_->size(); }
    std::size_t y_size() const { return y_basis_->size(); }
    const Basis& x_basis() const { return x_basis_; }
    const Basis& y_basis() const { return y_basis_; }

    double coefficient(std::size_t i, std::size_t j) const { return coeffs_[i * y_size() + j]; }
    void set_coefficient(std::size_t i, std::size_t j, double w) { coeffs_[i * y_size() + j] = w; }
    void add_coefficient(std::size_t i, std::size_t j, double w) { coeffs_[i * y_size() + j] += w; }

    double operator()(double x, double y) const;

    /// Weights w_i such that the integral over y equals sum_i w_i u_i(x).
    std::vector<double> x_marginal(const ApproxConfig& cfg) const;
    /// Weights w_j such that the integral over x equals sum_j w_j v_j(y).
    std::vector<double> y_marginal(const ApproxConfig& cfg) const;

    /// Total integral, via the 1D integrals of the basis functions.
    double integral(const ApproxConfig& cfg) const;

    /// Coefficient-wise difference; both fields must share their bases.
    SeparableField2D operator-(const SeparableField2D& other) const;

private:
    Basis x_basis_;
    Basis y_basis_;
    std::vector<double> coeffs_;
};

/// Same discrete quantity as l2_distance_2d(field, 0, box, cfg): the tensor
/// trapezoid sum factors into the per-axis Gram matrices of the sampled basis
/// functions, so the cost is linear in the basis sizes instead of quadratic
/// in the grid resolution.
double l2_norm_2d(const SeparableField2D& field, const Box2D& box, const ApproxConfig& cfg = {});

} // namespace wavearith
