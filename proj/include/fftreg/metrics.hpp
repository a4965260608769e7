#pragma once

#include <span>
#include <vector>

#include "fftreg/domain.hpp"

namespace fftreg::metrics {

/// Coefficient of determination, 1 - RSS/TSS. Throws on length mismatch,
/// empty input or zero-variance truth.
double r2(std::span<const double> truth, std::span<const double> prediction);

/// Collects the R^2 values of one bandwidth block. The trainer resets it at
/// every block boundary, so it never mixes values from two blocks.
class MetricWindow {
public:
    explicit MetricWindow(int block_size);

    void reset() { values_.clear(); }
    void push(double value);
    bool full() const { return values_.size() == static_cast<std::size_t>(block_size_); }
    int block_size() const { return block_size_; }
    const std::vector<double>& values() const { return values_; }

private:
    int block_size_;
    std::vector<double> values_;
};

/// Population standard deviation sqrt(sum((v - mean)^2) / m) of a complete
/// block. Throws if the window is not full.
double window_std(const MetricWindow& window);

}  // namespace fftreg::metrics
