#pragma once

namespace qibd {

/// Kahan-compensated accumulator. Keeps normalization and validation sums
/// accurate to a few ulp independent of the number of terms.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace qibd
