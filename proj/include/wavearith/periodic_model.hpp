#pragma once

#include <cstddef>

#include "wavearith/kernels.hpp"

namespace wavearith {

/// Integral of the kernel from 0 to x (closed form; negative x allowed).
double analytic_value(const FourierKernel& kernel, double x);

/// Double integral of rho(u) rho(v) over [0, x] x [0, y]; it factors into
/// analytic_value(x) * analytic_value(y). Throws DomainError for x < 0 or y < 0.
double analytic_product(const FourierKernel& kernel, double x, double y);

struct DeviationProfile {
    double sup = 0.0;     // max |analytic_value(x) - x| over the samples
    double argmax = 0.0;  // first sample attaining it
};

/// Samples x_i = lo + i (hi - lo) / (samples - 1), i = 0..samples-1.
/// Throws DomainError unless lo < hi and samples >= 100.
DeviationProfile deviation_profile(const FourierKernel& kernel, double lo, double hi, std::size_t samples);

double deviation_sup(const FourierKernel& kernel, double lo, double hi, std::size_t samples);

/// sqrt of the trapezoid integral of (analytic_value(x) - x)^2 on the same grid.
double deviation_l2(const FourierKernel& kernel, double lo, double hi, std::size_t samples);

} // namespace wavearith
