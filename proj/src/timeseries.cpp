#include "freqocc/timeseries.hpp"

#include <cmath>

#include "freqocc/error.hpp"

namespace freqocc {

TimeSeries::TimeSeries(std::size_t length, std::size_t channels)
    : values_(length * channels, 0.0), length_(length), channels_(channels) {
    if (length == 0 || channels == 0) {
        throw InvalidInputError("time series dimensions must be positive");
    }
}

TimeSeries::TimeSeries(std::vector<double> values, std::size_t length, std::size_t channels)
    : values_(std::move(values)), length_(length), channels_(channels) {
    if (length == 0 || channels == 0) {
        throw InvalidInputError("time series dimensions must be positive");
    }
    if (values_.size() != length * channels) {
        throw DimensionError("time series data size does not match length x channels");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidInputError("time series contains non-finite values");
        }
    }
}

std::vector<double> TimeSeries::channel(std::size_t ch) const {
    std::vector<double> out(length_);
    for (std::size_t t = 0; t < length_; ++t) {
        out[t] = values_[t * channels_ + ch];
    }
    return out;
}

void TimeSeries::set_channel(std::size_t ch, const std::vector<double>& data) {
    if (data.size() != length_) {
        throw DimensionError("channel data length mismatch");
    }
    for (std::size_t t = 0; t < length_; ++t) {
        values_[t * channels_ + ch] = data[t];
    }
}

double TimeSeries::channel_mean(std::size_t ch) const {
    double sum = 0.0;
    for (std::size_t t = 0; t < length_; ++t) {
        sum += values_[t * channels_ + ch];
    }
    return sum / static_cast<double>(length_);
}

double TimeSeries::channel_std(std::size_t ch) const {
    const double mean = channel_mean(ch);
    double acc = 0.0;
    for (std::size_t t = 0; t < length_; ++t) {
        const double d = values_[t * channels_ + ch] - mean;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(length_));
}

bool TimeSeries::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

}  // namespace freqocc
