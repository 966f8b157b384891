#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace jumphedge {

// Neumaier-compensated accumulator for long scalar sums.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Pairwise (cascade) summation in fixed index order: deterministic for a
// given input vector regardless of how the entries were produced.
inline double pairwise_sum(std::span<const double> v) noexcept {
    if (v.size() <= 32) {
        CompensatedSum acc;
        for (double x : v) acc.add(x);
        return acc.value();
    }
    const std::size_t mid = v.size() / 2;
    return pairwise_sum(v.first(mid)) + pairwise_sum(v.subspan(mid));
}

} // namespace jumphedge
