#include "fftreg/metrics.hpp"

#include <cmath>
#include <string>

namespace fftreg::metrics {

double r2(std::span<const double> truth, std::span<const double> prediction) {
    if (truth.size() != prediction.size())
        throw data_error("r2: truth has " + std::to_string(truth.size()) +
                         " values but prediction has " + std::to_string(prediction.size()));
    if (truth.empty()) throw data_error("r2: empty input");

    double mean = 0.0;
    for (double y : truth) mean += y;
    mean /= static_cast<double>(truth.size());

    double rss = 0.0;
    double tss = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const double r = truth[i] - prediction[i];
        const double d = truth[i] - mean;
        rss += r * r;
        tss += d * d;
    }
    if (tss <= 0.0) throw data_error("r2: truth has zero variance, score undefined");
    return 1.0 - rss / tss;
}

MetricWindow::MetricWindow(int block_size) : block_size_(block_size) {
    if (block_size < 2) throw config_error("metric window block size must be at least 2");
    values_.reserve(static_cast<std::size_t>(block_size));
}

void MetricWindow::push(double value) {
    if (full()) throw data_error("metric window already holds a complete block");
    values_.push_back(value);
}

double window_std(const MetricWindow& window) {
    if (!window.full())
        throw data_error("window_std requires a complete block of " +
                         std::to_string(window.block_size()) + " values, got " +
                         std::to_string(window.values().size()));
    const auto& v = window.values();
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    double acc = 0.0;
    for (double x : v) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(v.size()));
}

}  // namespace fftreg::metrics
