#pragma once

#include <cmath>

namespace wavearith {

// Neumaier's variant of Kahan summation. Order of add() calls is part of the
// result, so callers fix it.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v)) {
            carry_ += (sum_ - t) + v;
        } else {
            carry_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace wavearith
