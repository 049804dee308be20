#pragma once

// Reference values and small reference algorithms that do not go through the
// library. Constants were computed with mpmath at 40 digits.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double bump_Z = 0.2219969080840397189115245;
inline constexpr double bump_at_0 = 1.657137679738210303328318;
inline constexpr double bump_I2 = 1.350233626019395057974866;  // integral of phi^2

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Unnormalized bump, written independently of the library.
inline double raw_bump(double x)
{
    const double s = 1.0 - 4.0 * x * x;
    return s > 0.0 ? std::exp(-1.0 / s) : 0.0;
}

inline double bump(double x) { return raw_bump(x) / bump_Z; }

// Composite Simpson with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int n = 20000)
{
    if (n % 2 != 0) {
        ++n;
    }
    const double h = (hi - lo) / n;
    double s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) {
        s += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
    }
    return s * h / 3.0;
}

inline double literal_flattening(double a, double b)
{
    return std::sqrt(a * bump_I2 * b * (bump_I2 - 2.0 * b + b * b));
}

inline bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

// Closed-form periodic values, straight from the trig identities.
inline double standard_value(double x) { return x - std::sin(two_pi * x) / two_pi; }
inline double alpha_value(double alpha, double x) { return x - alpha * std::sin(two_pi * x) / two_pi; }

// l2 objective of alpha_beta with alpha = 1 on [0, 0.75]: dense grid search
// over beta in [-1, 1] at 1e-3, then golden refinement (numpy).
inline constexpr double alpha_beta_l2_beta_unit = 0.0;
inline constexpr double alpha_beta_l2_obj_unit = 0.11253953951963826;
inline constexpr double alpha_beta_l2_beta_3q = 0.37725616140301127;
inline constexpr double alpha_beta_l2_obj_3q = 0.09211371917713417;

} // namespace oracle
