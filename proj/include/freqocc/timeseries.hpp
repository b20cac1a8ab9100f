#pragma once

#include <cstddef>
#include <vector>

namespace freqocc {

/// Multichannel real-valued signal, `length` steps x `channels` channels.
/// Values are stored step-major: entry (t, ch) lives at t * channels + ch.
/// Dimensions are fixed at construction; values are mutable.
class TimeSeries {
public:
    /// Zero-filled series.
    TimeSeries(std::size_t length, std::size_t channels);

    /// Takes ownership of step-major data; rejects empty dims, size
    /// mismatch and non-finite entries.
    TimeSeries(std::vector<double> values, std::size_t length, std::size_t channels);

    std::size_t length() const { return length_; }
    std::size_t channels() const { return channels_; }
    std::size_t size() const { return values_.size(); }

    double at(std::size_t step, std::size_t channel) const {
        return values_[step * channels_ + channel];
    }
    double& at(std::size_t step, std::size_t channel) {
        return values_[step * channels_ + channel];
    }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Copy of one channel as a contiguous vector.
    std::vector<double> channel(std::size_t ch) const;

    /// Overwrites one channel from a contiguous vector of length `length()`.
    void set_channel(std::size_t ch, const std::vector<double>& data);

    /// Mean of one channel.
    double channel_mean(std::size_t ch) const;

    /// Population standard deviation of one channel.
    double channel_std(std::size_t ch) const;

    bool all_finite() const;

private:
    std::vector<double> values_;
    std::size_t length_;
    std::size_t channels_;
};

}  // namespace freqocc
