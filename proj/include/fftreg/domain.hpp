#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fftreg {

// Error categories, kept distinct so the CLI can map them to exit codes.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct data_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SampleRole { Train, Validation, Test, Augmented };

std::string role_name(SampleRole role);
SampleRole parse_role(const std::string& name);

struct Sample {
    double x = 0.0;
    std::optional<double> y;          // absent only for Augmented samples
    std::optional<SampleRole> role;   // unassigned until a split is applied
};

/// An ordered set of (x, y, role) samples. Construction sorts by x and
/// rejects duplicate predictor values. Immutable afterwards.
class Dataset {
public:
    explicit Dataset(std::vector<Sample> samples);

    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }

    /// True when every non-augmented sample carries a role.
    bool roles_assigned() const;

    /// New dataset with `roles` applied to the non-augmented samples in
    /// order. Requires at least one Train role.
    Dataset with_roles(const std::vector<SampleRole>& roles) const;

private:
    std::vector<Sample> samples_;
};

/// Uniformly spaced working signal. Length is a power of two so the
/// radix-2 transform path always applies.
class GridSignal {
public:
    GridSignal(double origin, double dx, std::vector<double> values,
               std::vector<SampleRole> roles,
               std::vector<std::optional<double>> truths);

    std::size_t size() const { return values_.size(); }
    double origin() const { return origin_; }
    double dx() const { return dx_; }
    double node_x(std::size_t i) const { return origin_ + dx_ * static_cast<double>(i); }

    const std::vector<double>& values() const { return values_; }
    const std::vector<SampleRole>& roles() const { return roles_; }
    const std::vector<std::optional<double>>& truths() const { return truths_; }

    /// Same geometry, roles and truths with replaced node values.
    GridSignal with_values(std::vector<double> values) const;

private:
    double origin_;
    double dx_;
    std::vector<double> values_;
    std::vector<SampleRole> roles_;
    std::vector<std::optional<double>> truths_;
};

/// Complex frequency-domain coefficients. bin j corresponds to frequency
/// j * bin_spacing, with bin_spacing = 1 / (M * dx).
class Spectrum {
public:
    Spectrum(std::vector<std::complex<double>> coefficients, double bin_spacing);

    std::size_t size() const { return coefficients_.size(); }
    double bin_spacing() const { return bin_spacing_; }
    const std::vector<std::complex<double>>& coefficients() const { return coefficients_; }
    std::vector<std::complex<double>>& coefficients() { return coefficients_; }

private:
    std::vector<std::complex<double>> coefficients_;
    double bin_spacing_;
};

struct FitConfig {
    double train_frac = 0.7;
    double val_frac = 0.15;
    double test_frac = 0.15;
    int m = 5;                // iterations per bandwidth block, >= 2
    double sigma_min = 1e-4;  // termination threshold on the windowed std
    int max_iter = 100;
    int h0 = 0;               // initial passband half-width in bins (0 = DC only)
    int delta_bins = 1;       // half-width increment per block
    std::uint64_t seed = 0;

    /// Paper-style defaults with the calibrated bandwidth step
    /// (see trainer::kCalibratedDeltaBins).
    static FitConfig calibrated();
};

/// Returns `config` unchanged if every invariant holds, otherwise throws
/// config_error naming the offending field.
FitConfig validate_config(const FitConfig& config);

struct IterationRecord {
    int n = 0;       // 0-based iteration index
    int h_bins = 0;  // passband half-width used in this iteration
    std::optional<double> r2_train;
    std::optional<double> r2_val;
    std::optional<double> r2_test;
    std::optional<double> sigma_window;  // present at block boundaries
};

enum class Termination { Converged, MaxIterReached, BandwidthExhausted };

std::string termination_name(Termination reason);

struct Prediction {
    double x = 0.0;
    std::optional<double> y_true;
    double y_pred = 0.0;
    SampleRole role = SampleRole::Train;
};

struct FitResult {
    std::vector<Prediction> predictions;  // one per non-augmented sample
    std::vector<IterationRecord> trace;
    Termination termination = Termination::MaxIterReached;
};

}  // namespace fftreg
