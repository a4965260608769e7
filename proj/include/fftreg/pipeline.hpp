#pragma once

#include <cstdint>
#include <vector>

#include "fftreg/domain.hpp"

namespace fftreg::pipeline {

/// Seeded random role assignment. A Fisher-Yates shuffle of the indices
/// (mt19937_64, draws reduced mod the remaining range) assigns the first
/// round(n * train_frac) shuffled indices Train, the next round(n * val_frac)
/// Validation and the remainder Test. Rounding is half-up. Deterministic for
/// a fixed seed.
std::vector<SampleRole> random_split(std::size_t n_samples, double train_frac,
                                     double val_frac, double test_frac,
                                     std::uint64_t seed);

/// Lays the dataset onto a uniform grid of `grid_size` nodes spanning
/// [min x, max x]. Every sample lands on its nearest node; unoccupied nodes
/// become Augmented with value 0 and no truth. Two samples on one node is an
/// error (the grid is too coarse).
GridSignal to_uniform_grid(const Dataset& dataset, std::size_t grid_size);

/// Index of the grid node nearest to x (the node a sample is assigned to).
std::size_t nearest_node(const GridSignal& grid, double x);

/// Appends the reversed copy: [a, b, c, d] -> [a, b, c, d, d, c, b, a].
/// Values, roles and truths all mirror; output length 2M.
GridSignal mirror_extend(const GridSignal& grid);

/// First half of an extended grid (the original, unmirrored region).
GridSignal restrict_half(const GridSignal& extended);

/// Training nodes take their true responses, every other node 0.
GridSignal init_condition(const GridSignal& grid);

}  // namespace fftreg::pipeline
