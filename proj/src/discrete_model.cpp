#include "wavearith/discrete_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wavearith/compensated_sum.hpp"
#include "wavearith/errors.hpp"

namespace wavearith {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

__extension__ typedef __int128 wide_int;

// Phase k*j/m reduced to [0, 1) in integer arithmetic.
double phase(std::int64_t k, std::int64_t j, std::int64_t m)
{
    const auto r = static_cast<std::int64_t>((static_cast<wide_int>(k) * j) % m);
    return static_cast<double>(r) / static_cast<double>(m);
}

} // namespace

void DiscretizationParams::validate() const
{
    if (m < 1) {
        throw DomainError("subdivision resolution m must be >= 1");
    }
    if (harmonics < 1) {
        throw DomainError("harmonic truncation N must be >= 1");
    }
}

double discrete_standard(std::int64_t n, std::int64_t m)
{
    if (n < 1 || m < 1) {
        throw DomainError("discrete_standard requires n >= 1 and m >= 1");
    }
    const double inv_m = 1.0 / static_cast<double>(m);
    CompensatedSum sum;
    for (std::int64_t k = 1; k <= n * m; ++k) {
        const double ds = sin_turns(phase(1, k, m)) - sin_turns(phase(1, k - 1, m));
        sum.add(inv_m - ds / two_pi);
    }
    return sum.value();
}

double discrete_general(const FourierKernel& kernel, double x, const DiscretizationParams& params)
{
    params.validate();
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("discrete_general requires finite x >= 0");
    }
    if (kernel.origin() == FourierKernel::Origin::explicit_coefficients &&
        static_cast<std::size_t>(params.harmonics) > kernel.harmonics()) {
        throw DomainError("harmonic truncation N = " + std::to_string(params.harmonics) +
                          " exceeds the kernel's " + std::to_string(kernel.harmonics()) + " coefficients");
    }

    const double mx = static_cast<double>(params.m) * x;
    const double nearest = std::round(mx);
    const double snapped = std::fabs(mx - nearest) <= 1e-12 * std::max(1.0, mx) ? nearest : std::floor(mx);
    const auto steps = static_cast<std::int64_t>(snapped);

    const double a0_step = kernel.a0() / static_cast<double>(params.m);
    CompensatedSum sum;
    for (std::int64_t j = 1; j <= steps; ++j) {
        CompensatedSum term;
        term.add(a0_step);
        for (std::int64_t k = 1; k <= params.harmonics; ++k) {
            const double ak = kernel.cos_coeff(static_cast<std::size_t>(k));
            const double bk = kernel.sin_coeff(static_cast<std::size_t>(k));
            if (ak == 0.0 && bk == 0.0) {
                continue;
            }
            const double now = phase(k, j, params.m);
            const double before = phase(k, j - 1, params.m);
            const double d_sin = sin_turns(now) - sin_turns(before);
            const double d_cos = cos_turns(now) - cos_turns(before);
            const double scale = two_pi * static_cast<double>(k);
            term.add((ak * d_sin - bk * d_cos) / scale);
        }
        sum.add(term.value());
    }
    return sum.value();
}

double series_rational(std::int64_t p, std::int64_t q, SeriesVariant variant)
{
    if (p < 1 || q < 1) {
        throw DomainError("series_rational requires p >= 1 and q >= 1");
    }
    const double qd = static_cast<double>(q);
    switch (variant) {
    case SeriesVariant::fragment_sum:
        return static_cast<double>(p) * (1.0 / qd - sin_turns(phase(1, 1, q)) / two_pi);
    case SeriesVariant::cumulative: {
        const double x = static_cast<double>(p) / qd;
        return x - sin_turns(phase(p, 1, q)) / two_pi;
    }
    }
    return 0.0;
}

} // namespace wavearith
