#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wavearith {

/// sin(2*pi*t) with the argument reduced in "turns" first, so integer and
/// half-integer t give exactly 0 and quarter points give exactly +-1.
double sin_turns(double t);
/// cos(2*pi*t), reduced the same way.
double cos_turns(double t);

/// The concrete compactly supported mollifier
///
///     phi(x) = exp(-1 / (1 - 4x^2)) / Z     for |x| < 1/2,   0 otherwise,
///
/// with Z chosen so that phi has unit mass. Z has no closed form; it is
/// computed once by adaptive quadrature (relative tolerance 1e-12) when the
/// shared instance is first requested.
class BumpKernel {
public:
    static constexpr double support_radius = 0.5;

    /// Process-wide instance; thread-safe lazy construction.
    static const BumpKernel& instance();

    double normalization() const { return normalization_; }

    double operator()(double x) const;

    /// r * phi(x - (k - 1)); support [k - 3/2, k - 1/2].
    double shifted_scaled(long long k, double amplitude, double x) const
    {
        return amplitude * (*this)(x - static_cast<double>(k - 1));
    }

private:
    BumpKernel();

    double normalization_;
};

double eval_bump(double x);
double eval_shifted_scaled(long long k, double amplitude, double x);

/// Finite Fourier kernel
///
///     rho(x) = a0 + sum_k a_k cos(2 pi k x) + sum_k b_k sin(2 pi k x).
///
/// Coefficient vectors are stored from k = 1: cos_coeffs()[0] is a_1.
class FourierKernel {
public:
    enum class Origin { preset, explicit_coefficients };

    static FourierKernel standard();
    static FourierKernel alpha(double alpha);
    static FourierKernel alpha_beta(double alpha, double beta);
    /// Throws DomainError on any non-finite coefficient.
    static FourierKernel from_coefficients(double a0, std::vector<double> cos_coeffs,
                                           std::vector<double> sin_coeffs);

    double a0() const { return a0_; }
    std::span<const double> cos_coeffs() const { return cos_; }
    std::span<const double> sin_coeffs() const { return sin_; }
    Origin origin() const { return origin_; }

    /// Highest stored harmonic index.
    std::size_t harmonics() const { return cos_.size() > sin_.size() ? cos_.size() : sin_.size(); }
    /// Highest harmonic with a nonzero coefficient (0 for a constant kernel).
    std::size_t highest_nonzero_harmonic() const;

    double cos_coeff(std::size_t k) const { return k >= 1 && k <= cos_.size() ? cos_[k - 1] : 0.0; }
    double sin_coeff(std::size_t k) const { return k >= 1 && k <= sin_.size() ? sin_[k - 1] : 0.0; }

    double operator()(double x) const;

    /// Exact integral from 0 to x:
    ///     a0 x + sum_k [ a_k sin(2 pi k x) + b_k (1 - cos(2 pi k x)) ] / (2 pi k).
    double antiderivative(double x) const;

    friend bool operator==(const FourierKernel&, const FourierKernel&) = default;

private:
    FourierKernel(double a0, std::vector<double> c, std::vector<double> s, Origin origin);

    double a0_;
    std::vector<double> cos_;
    std::vector<double> sin_;
    Origin origin_;
};

double eval_fourier(const FourierKernel& kernel, double x);
double antiderivative(const FourierKernel& kernel, double x);

} // namespace wavearith
