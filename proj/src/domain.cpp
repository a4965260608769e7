#include "fftreg/domain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "fftreg/trainer.hpp"

namespace fftreg {

std::string role_name(SampleRole role) {
    switch (role) {
        case SampleRole::Train: return "train";
        case SampleRole::Validation: return "val";
        case SampleRole::Test: return "test";
        case SampleRole::Augmented: return "augmented";
    }
    return "unknown";
}

SampleRole parse_role(const std::string& name) {
    if (name == "train") return SampleRole::Train;
    if (name == "val") return SampleRole::Validation;
    if (name == "test") return SampleRole::Test;
    if (name == "augmented") return SampleRole::Augmented;
    throw parse_error("unknown role '" + name + "' (expected train, val or test)");
}

std::string termination_name(Termination reason) {
    switch (reason) {
        case Termination::Converged: return "CONVERGED";
        case Termination::MaxIterReached: return "MAX_ITER_REACHED";
        case Termination::BandwidthExhausted: return "BANDWIDTH_EXHAUSTED";
    }
    return "unknown";
}

namespace {

void check_sample(const Sample& s) {
    if (s.role && *s.role == SampleRole::Augmented) {
        if (s.y) throw data_error("augmented samples must not carry a response value");
    } else if (!s.y) {
        throw data_error("missing response value for non-augmented sample at x=" +
                         std::to_string(s.x));
    }
}

}  // namespace

Dataset::Dataset(std::vector<Sample> samples) : samples_(std::move(samples)) {
    if (samples_.empty()) throw data_error("dataset must contain at least one sample");
    std::stable_sort(samples_.begin(), samples_.end(),
                     [](const Sample& a, const Sample& b) { return a.x < b.x; });
    bool any_role = false;
    bool all_roles = true;
    bool any_train = false;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        if (!std::isfinite(s.x)) throw data_error("non-finite predictor value");
        if (s.y && !std::isfinite(*s.y)) throw data_error("non-finite response value");
        if (i > 0 && !(samples_[i - 1].x < s.x)) {
            std::ostringstream msg;
            msg << "duplicate predictor value x=" << s.x;
            throw data_error(msg.str());
        }
        check_sample(s);
        if (s.role && *s.role != SampleRole::Augmented) {
            any_role = true;
            if (*s.role == SampleRole::Train) any_train = true;
        } else if (!s.role) {
            all_roles = false;
        }
    }
    if (any_role && !all_roles)
        throw data_error("roles must be assigned to all samples or to none");
    if (any_role && all_roles && !any_train)
        throw data_error("dataset with assigned roles must contain at least one train sample");
}

bool Dataset::roles_assigned() const {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](const Sample& s) { return s.role.has_value(); });
}

Dataset Dataset::with_roles(const std::vector<SampleRole>& roles) const {
    std::vector<Sample> out = samples_;
    std::size_t j = 0;
    for (Sample& s : out) {
        if (s.role && *s.role == SampleRole::Augmented) continue;
        if (j >= roles.size()) throw data_error("role list shorter than dataset");
        s.role = roles[j++];
    }
    if (j != roles.size()) throw data_error("role list longer than dataset");
    return Dataset(std::move(out));
}

GridSignal::GridSignal(double origin, double dx, std::vector<double> values,
                       std::vector<SampleRole> roles,
                       std::vector<std::optional<double>> truths)
    : origin_(origin),
      dx_(dx),
      values_(std::move(values)),
      roles_(std::move(roles)),
      truths_(std::move(truths)) {
    if (values_.size() != roles_.size() || values_.size() != truths_.size())
        throw data_error("grid values, roles and truths must have equal length");
    if (values_.empty() || !std::has_single_bit(values_.size()))
        throw data_error("grid length must be a power of two, got " +
                         std::to_string(values_.size()));
    if (!(dx_ > 0.0)) throw data_error("grid spacing dx must be positive");
}

GridSignal GridSignal::with_values(std::vector<double> values) const {
    return GridSignal(origin_, dx_, std::move(values), roles_, truths_);
}

Spectrum::Spectrum(std::vector<std::complex<double>> coefficients, double bin_spacing)
    : coefficients_(std::move(coefficients)), bin_spacing_(bin_spacing) {
    if (coefficients_.empty()) throw data_error("spectrum must not be empty");
}

FitConfig FitConfig::calibrated() {
    FitConfig config;
    config.delta_bins = trainer::kCalibratedDeltaBins;
    return config;
}

FitConfig validate_config(const FitConfig& config) {
    const double sum = config.train_frac + config.val_frac + config.test_frac;
    if (std::abs(sum - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "train_frac + val_frac + test_frac must sum to 1, got " << sum;
        throw config_error(msg.str());
    }
    if (config.train_frac < 0 || config.val_frac < 0 || config.test_frac < 0)
        throw config_error("train_frac, val_frac and test_frac must be non-negative");
    if (config.m < 2) throw config_error("m must be at least 2");
    if (config.sigma_min < 0) throw config_error("sigma_min must be non-negative");
    if (config.max_iter <= 0) throw config_error("max_iter must be positive");
    if (config.h0 < 0) throw config_error("h0 must be non-negative");
    if (config.delta_bins <= 0) throw config_error("delta_bins must be positive");
    return config;
}

}  // namespace fftreg
