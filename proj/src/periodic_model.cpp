#include "wavearith/periodic_model.hpp"

#include <cmath>

#include "wavearith/compensated_sum.hpp"
#include "wavearith/errors.hpp"

namespace wavearith {

double analytic_value(const FourierKernel& kernel, double x) { return kernel.antiderivative(x); }

double analytic_product(const FourierKernel& kernel, double x, double y)
{
    if (!(x >= 0.0) || !(y >= 0.0)) {
        throw DomainError("analytic_product is defined for non-negative arguments");
    }
    return kernel.antiderivative(x) * kernel.antiderivative(y);
}

namespace {

void check_sampling(double lo, double hi, std::size_t samples)
{
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw DomainError("deviation interval must satisfy lo < hi");
    }
    if (samples < 100) {
        throw DomainError("deviation sampling needs at least 100 samples");
    }
}

double sample_point(double lo, double hi, std::size_t i, std::size_t samples)
{
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

} // namespace

DeviationProfile deviation_profile(const FourierKernel& kernel, double lo, double hi, std::size_t samples)
{
    check_sampling(lo, hi, samples);
    DeviationProfile profile{-1.0, lo};
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = sample_point(lo, hi, i, samples);
        const double d = std::fabs(kernel.antiderivative(x) - x);
        if (d > profile.sup) {
            profile.sup = d;
            profile.argmax = x;
        }
    }
    return profile;
}

double deviation_sup(const FourierKernel& kernel, double lo, double hi, std::size_t samples)
{
    return deviation_profile(kernel, lo, hi, samples).sup;
}

double deviation_l2(const FourierKernel& kernel, double lo, double hi, std::size_t samples)
{
    check_sampling(lo, hi, samples);
    const double h = (hi - lo) / static_cast<double>(samples - 1);
    CompensatedSum sum;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = sample_point(lo, hi, i, samples);
        const double d = kernel.antiderivative(x) - x;
        const double w = (i == 0 || i + 1 == samples) ? 0.5 * h : h;
        sum.add(w * d * d);
    }
    return std::sqrt(sum.value());
}

} // namespace wavearith
