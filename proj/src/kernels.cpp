#include "wavearith/kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "wavearith/errors.hpp"
#include "wavearith/quadrature.hpp"

namespace wavearith {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Below this distance from the support edge the exponent -1/(1-4x^2) is far
// past the underflow threshold anyway.
constexpr double boundary_guard = 1e-15;

double unnormalized_bump(double x)
{
    const double ax = std::fabs(x);
    if (ax >= BumpKernel::support_radius - boundary_guard) {
        return 0.0;
    }
    const double s = (1.0 - 2.0 * ax) * (1.0 + 2.0 * ax);
    return std::exp(-1.0 / s);
}

// sin(2 pi r) for r in [-1/4, 1/4].
double sin_reduced(double r) { return std::sin(two_pi * r); }

} // namespace

double sin_turns(double t)
{
    const double r = t - std::round(t);  // exact, |r| <= 1/2
    if (r > 0.25) {
        return sin_reduced(0.5 - r);
    }
    if (r < -0.25) {
        return -sin_reduced(0.5 + r);
    }
    return sin_reduced(r);
}

double cos_turns(double t)
{
    const double r = std::fabs(t - std::round(t));  // [0, 1/2]
    return sin_reduced(0.25 - r);
}

BumpKernel::BumpKernel()
{
    ApproxConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-15;
    constexpr std::array<double, 3> pieces{-0.5, 0.0, 0.5};
    normalization_ = integrate_1d(unnormalized_bump, pieces, cfg).value;
}

const BumpKernel& BumpKernel::instance()
{
    static const BumpKernel kernel;
    return kernel;
}

double BumpKernel::operator()(double x) const { return unnormalized_bump(x) / normalization_; }

double eval_bump(double x) { return BumpKernel::instance()(x); }

double eval_shifted_scaled(long long k, double amplitude, double x)
{
    return BumpKernel::instance().shifted_scaled(k, amplitude, x);
}

FourierKernel::FourierKernel(double a0, std::vector<double> c, std::vector<double> s, Origin origin)
    : a0_(a0), cos_(std::move(c)), sin_(std::move(s)), origin_(origin)
{
}

FourierKernel FourierKernel::standard() { return {1.0, {-1.0}, {}, Origin::preset}; }

FourierKernel FourierKernel::alpha(double alpha)
{
    if (!std::isfinite(alpha)) {
        throw DomainError("alpha must be finite");
    }
    return {1.0, {-alpha}, {}, Origin::preset};
}

FourierKernel FourierKernel::alpha_beta(double alpha, double beta)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("alpha and beta must be finite");
    }
    return {1.0, {-alpha}, {0.0, beta}, Origin::preset};
}

FourierKernel FourierKernel::from_coefficients(double a0, std::vector<double> cos_coeffs,
                                               std::vector<double> sin_coeffs)
{
    auto finite = [](const std::vector<double>& v) {
        for (double c : v) {
            if (!std::isfinite(c)) {
                return false;
            }
        }
        return true;
    };
    if (!std::isfinite(a0) || !finite(cos_coeffs) || !finite(sin_coeffs)) {
        throw DomainError("Fourier coefficients must be finite");
    }
    return {a0, std::move(cos_coeffs), std::move(sin_coeffs), Origin::explicit_coefficients};
}

std::size_t FourierKernel::highest_nonzero_harmonic() const
{
    for (std::size_t k = harmonics(); k >= 1; --k) {
        if (cos_coeff(k) != 0.0 || sin_coeff(k) != 0.0) {
            return k;
        }
    }
    return 0;
}

double FourierKernel::operator()(double x) const
{
    double value = a0_;
    for (std::size_t k = 1; k <= harmonics(); ++k) {
        const double t = static_cast<double>(k) * x;
        value += cos_coeff(k) * cos_turns(t) + sin_coeff(k) * sin_turns(t);
    }
    return value;
}

double FourierKernel::antiderivative(double x) const
{
    double value = a0_ * x;
    for (std::size_t k = 1; k <= harmonics(); ++k) {
        const double t = static_cast<double>(k) * x;
        const double scale = two_pi * static_cast<double>(k);
        value += (cos_coeff(k) * sin_turns(t) + sin_coeff(k) * (1.0 - cos_turns(t))) / scale;
    }
    return value;
}

double eval_fourier(const FourierKernel& kernel, double x) { return kernel(x); }

double antiderivative(const FourierKernel& kernel, double x) { return kernel.antiderivative(x); }

} // namespace wavearith
