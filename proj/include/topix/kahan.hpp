#pragma once

#include <cmath>

namespace topix {

// Neumaier-compensated accumulator. Index sums reach ~1e6 terms of magnitude
// ~1e6; plain summation would not hold the 1e-10 relative-error budget.
class KahanSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace topix
