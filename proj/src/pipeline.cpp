#include "fftreg/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace fftreg::pipeline {

namespace {

std::size_t round_half_up(double x) {
    return static_cast<std::size_t>(std::floor(x + 0.5));
}

}  // namespace

std::vector<SampleRole> random_split(std::size_t n_samples, double train_frac,
                                     double val_frac, double test_frac,
                                     std::uint64_t seed) {
    const double sum = train_frac + val_frac + test_frac;
    if (std::abs(sum - 1.0) > 1e-9)
        throw config_error("split fractions must sum to 1, got " + std::to_string(sum));
    if (n_samples == 0) throw data_error("cannot split an empty sample set");

    const std::size_t n = n_samples;
    const std::size_t n_train = std::min(round_half_up(static_cast<double>(n) * train_frac), n);
    const std::size_t n_val =
        std::min(round_half_up(static_cast<double>(n) * val_frac), n - n_train);
    if (n_train == 0)
        throw config_error("train_frac yields zero train samples after rounding");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
        std::swap(order[i], order[j]);
    }

    std::vector<SampleRole> roles(n, SampleRole::Test);
    for (std::size_t k = 0; k < n_train; ++k) roles[order[k]] = SampleRole::Train;
    for (std::size_t k = n_train; k < n_train + n_val; ++k)
        roles[order[k]] = SampleRole::Validation;
    return roles;
}

GridSignal to_uniform_grid(const Dataset& dataset, std::size_t grid_size) {
    if (grid_size < 2 || !std::has_single_bit(grid_size))
        throw config_error("grid_size must be a power of two >= 2, got " +
                           std::to_string(grid_size));
    if (grid_size < dataset.size())
        throw config_error("grid_size " + std::to_string(grid_size) +
                           " is smaller than the sample count " +
                           std::to_string(dataset.size()));
    const auto& samples = dataset.samples();
    const double x_min = samples.front().x;
    const double x_max = samples.back().x;
    if (!(x_max > x_min)) throw data_error("degenerate predictor range: max x must exceed min x");

    const double dx = (x_max - x_min) / static_cast<double>(grid_size - 1);
    std::vector<double> values(grid_size, 0.0);
    std::vector<SampleRole> roles(grid_size, SampleRole::Augmented);
    std::vector<std::optional<double>> truths(grid_size);
    std::vector<const Sample*> occupant(grid_size, nullptr);

    for (const Sample& s : samples) {
        const auto node = static_cast<std::size_t>(std::clamp<long long>(
            std::llround((s.x - x_min) / dx), 0, static_cast<long long>(grid_size - 1)));
        if (occupant[node] != nullptr) {
            std::ostringstream msg;
            msg << "samples x=" << occupant[node]->x << " and x=" << s.x
                << " map to the same grid node " << node << "; use a finer grid";
            throw data_error(msg.str());
        }
        occupant[node] = &s;
        if (!s.role) throw data_error("cannot grid a dataset with unassigned roles");
        roles[node] = *s.role;
        if (*s.role != SampleRole::Augmented) truths[node] = s.y;
    }
    return GridSignal(x_min, dx, std::move(values), std::move(roles), std::move(truths));
}

std::size_t nearest_node(const GridSignal& grid, double x) {
    const auto last = static_cast<long long>(grid.size() - 1);
    return static_cast<std::size_t>(
        std::clamp<long long>(std::llround((x - grid.origin()) / grid.dx()), 0, last));
}

GridSignal mirror_extend(const GridSignal& grid) {
    const std::size_t m = grid.size();
    std::vector<double> values(2 * m);
    std::vector<SampleRole> roles(2 * m, SampleRole::Augmented);
    std::vector<std::optional<double>> truths(2 * m);
    for (std::size_t i = 0; i < m; ++i) {
        values[i] = grid.values()[i];
        roles[i] = grid.roles()[i];
        truths[i] = grid.truths()[i];
        values[2 * m - 1 - i] = grid.values()[i];
        roles[2 * m - 1 - i] = grid.roles()[i];
        truths[2 * m - 1 - i] = grid.truths()[i];
    }
    return GridSignal(grid.origin(), grid.dx(), std::move(values), std::move(roles),
                      std::move(truths));
}

GridSignal restrict_half(const GridSignal& extended) {
    if (extended.size() % 2 != 0)
        throw data_error("cannot restrict a grid of odd length " +
                         std::to_string(extended.size()));
    const std::size_t m = extended.size() / 2;
    std::vector<double> values(extended.values().begin(), extended.values().begin() + m);
    std::vector<SampleRole> roles(extended.roles().begin(), extended.roles().begin() + m);
    std::vector<std::optional<double>> truths(extended.truths().begin(),
                                              extended.truths().begin() + m);
    return GridSignal(extended.origin(), extended.dx(), std::move(values), std::move(roles),
                      std::move(truths));
}

GridSignal init_condition(const GridSignal& grid) {
    std::vector<double> values(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.roles()[i] == SampleRole::Train) values[i] = *grid.truths()[i];
    }
    return grid.with_values(std::move(values));
}

}  // namespace fftreg::pipeline
