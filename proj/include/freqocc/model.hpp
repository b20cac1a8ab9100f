#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "freqocc/timeseries.hpp"

namespace freqocc {

/// Numerically stable softmax.
std::vector<double> softmax(const std::vector<double>& logits);

/// Black-box classifier: maps a TimeSeries to softmax class scores and
/// counts every forward pass. Parameters are immutable after
/// construction, so predict/logits are safe to call concurrently; the
/// pass counter is atomic.
class ClassifierOracle {
public:
    virtual ~ClassifierOracle() = default;

    ClassifierOracle(const ClassifierOracle&) = delete;
    ClassifierOracle& operator=(const ClassifierOracle&) = delete;

    /// Softmax class scores. Exactly one forward pass per call.
    std::vector<double> predict(const TimeSeries& x) const;

    /// Pre-softmax scores. Also one forward pass per call.
    std::vector<double> logits(const TimeSeries& x) const;

    std::size_t num_classes() const { return num_classes_; }
    std::size_t expected_length() const { return expected_length_; }
    std::size_t expected_channels() const { return expected_channels_; }

    std::uint64_t forward_pass_count() const { return passes_.load(); }
    void reset_forward_pass_count() { passes_.store(0); }

protected:
    ClassifierOracle(std::size_t classes, std::size_t length, std::size_t channels);

private:
    virtual std::vector<double> compute_logits(const TimeSeries& x) const = 0;
    void check_dims(const TimeSeries& x) const;

    std::size_t num_classes_;
    std::size_t expected_length_;
    std::size_t expected_channels_;
    mutable std::atomic<std::uint64_t> passes_{0};
};

/// One class's decision rule for the bandpower model: spectral power of
/// `channel` summed over bins [bin_low, bin_high], compared to
/// `threshold`. Bin power is amplitude-normalized, so a pure cosine of
/// amplitude A at an interior bin contributes A^2.
struct BandRule {
    std::size_t target_class = 0;
    std::size_t channel = 0;
    std::size_t bin_low = 0;
    std::size_t bin_high = 0;
    double threshold = 0.5;
};

struct DenseLayer {
    std::vector<std::vector<double>> weights;  // [out][in]
    std::vector<double> bias;                  // [out]
};

/// Serializable description of a loadable model.
struct ModelSpec {
    enum class Kind { linear, mlp, bandpower };

    Kind kind = Kind::linear;
    std::size_t num_classes = 2;
    std::size_t input_length = 1;
    std::size_t input_channels = 1;

    // linear: class logit = weights[c] . flatten(x) + bias[c], where
    // flatten is step-major (step t, channel s -> index t*s + channel).
    std::vector<std::vector<double>> weights;
    std::vector<double> bias;

    // mlp: dense layers with rectifier activations between them, final
    // layer linear. First layer input = input_length * input_channels,
    // last layer output = num_classes.
    std::vector<DenseLayer> layers;

    // bandpower: class logit = sum over its rules of gain * (power - threshold);
    // classes without rules sit at logit 0.
    std::vector<BandRule> rules;
    double gain = 4.0;

    /// Throws on inconsistent shapes, non-finite parameters or
    /// out-of-range rule bins.
    void validate() const;
};

/// Builds the oracle described by a validated spec.
std::unique_ptr<ClassifierOracle> make_oracle(const ModelSpec& spec);

/// Bandpower oracle straight from rules; the ground-truth relevant bins
/// are exactly the rule bands. Rejects an empty rule set.
std::unique_ptr<ClassifierOracle> make_bandpower_oracle(const std::vector<BandRule>& rules,
                                                        std::size_t num_classes,
                                                        std::size_t input_length,
                                                        std::size_t input_channels,
                                                        double gain = 4.0);

ModelSpec load_model_spec(const std::string& path);
std::unique_ptr<ClassifierOracle> load_model(const std::string& path);
void save_model(const ModelSpec& spec, const std::string& path);

}  // namespace freqocc
