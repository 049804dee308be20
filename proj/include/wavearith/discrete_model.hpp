#pragma once

#include <cstdint>

#include "wavearith/kernels.hpp"

namespace wavearith {

struct DiscretizationParams {
    std::int64_t m = 100;       // subintervals per unit length
    std::int64_t harmonics = 10;  // N: highest harmonic index summed

    void validate() const;
};

/// sum_{k=1}^{n m} [ 1/m - (sin(2 pi k/m) - sin(2 pi (k-1)/m)) / (2 pi) ],
/// summed literally (ascending k, compensated). Telescopes to n.
double discrete_standard(std::int64_t n, std::int64_t m);

/// Subinterval-by-subinterval accumulation of the kernel integral over
/// [0, floor(m x) / m]:
///
///     sum_{j=1}^{floor(m x)} [ a0/m + sum_{k=1}^{N} ( a_k dsin(k,j) - b_k dcos(k,j) ) / (2 pi k) ]
///
/// with dsin/dcos the differences of sin/cos(2 pi k j / m) between j and j-1.
/// m x within 1e-12 (relative) of an integer snaps to it. Harmonics beyond
/// a preset's stored coefficients count as zero; for explicit kernels
/// N above the stored harmonic count throws DomainError. x < 0 throws.
double discrete_general(const FourierKernel& kernel, double x, const DiscretizationParams& params);

enum class SeriesVariant { fragment_sum, cumulative };

/// fragment_sum: p copies of the first 1/q-fragment of the standard kernel,
/// p (1/q - sin(2 pi/q) / (2 pi)). cumulative: the integral over [0, p/q].
/// The two agree only when sin(2 pi p/q) = p sin(2 pi/q).
double series_rational(std::int64_t p, std::int64_t q, SeriesVariant variant);

} // namespace wavearith
