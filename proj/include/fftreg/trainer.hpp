#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fftreg/domain.hpp"
#include "fftreg/metrics.hpp"

namespace fftreg::trainer {

/// Bandwidth step shipped by FitConfig::calibrated(). Chosen by sweeping
/// delta_bins over {1, 2, 4, 8, 16, 32} on the synthetic benchmark and
/// keeping the smallest value that converges via the sigma rule with
/// R^2(test) >= 0.90 inside the default iteration budget; the sweep lives in
/// tests/calibration_check.cpp.
inline constexpr int kCalibratedDeltaBins = 16;

/// Passband half-width for iteration n: h0 + delta_bins * floor(n / m).
/// Constant within each block of m iterations, non-decreasing across blocks.
int h_bins_at(int n, const FitConfig& config);

struct TrainerState {
    int n = 0;                // iterations completed so far
    GridSignal signal;        // extended working signal, length 2 * grid size
    std::vector<IterationRecord> trace;
    metrics::MetricWindow window;  // R^2 values of the current block
};

/// One filter-and-clamp iteration: low-pass the signal at the scheduled
/// half-width, then reset training nodes to their true responses. Appends an
/// IterationRecord with per-role R^2 over the first-half nodes (training
/// nodes score 1 by construction) and advances n. The record of the last
/// iteration in a block carries the window's standard deviation.
TrainerState step(TrainerState state, const FitConfig& config);

/// Termination check after a completed iteration, in precedence order:
///  - Converged: the completed iteration closed a block past the first one
///    and the block's R^2 standard deviation fell below sigma_min. The first
///    block runs at the initial bandwidth and is never tested.
///  - MaxIterReached: the iteration budget is spent.
///  - BandwidthExhausted: the next iteration's passband would cover every
///    bin, making the filter the identity and the state a fixed point.
std::optional<Termination> should_stop(const TrainerState& state, const FitConfig& config);

/// End-to-end fit: split (when roles are unassigned), grid, mirror, initial
/// condition, then step() until should_stop() fires. grid_size 0 selects the
/// smallest power of two holding every sample. Deterministic for fixed
/// inputs; the iteration itself is sequential and only the per-element
/// spectral kernels run in parallel, so results do not depend on thread
/// count.
FitResult fit(const Dataset& dataset, const FitConfig& config, std::size_t grid_size = 0);

}  // namespace fftreg::trainer
