#pragma once

// Shared test helpers. The naive transforms here are the independent
// oracle for the library's FFT paths: straight O(n^2) evaluation of the
// DFT sums, no shared code with src/dft.cpp.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "freqocc/rng.hpp"
#include "freqocc/timeseries.hpp"

namespace testsupport {

inline constexpr double kTau = 6.283185307179586476925287;

inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
    const std::size_t n = x.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double angle = -kTau * static_cast<double>(k) * static_cast<double>(i) /
                                 static_cast<double>(n);
            acc += x[i] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[k] = acc;
    }
    return out;
}

inline std::vector<std::complex<double>> naive_idft(const std::vector<std::complex<double>>& bins) {
    const std::size_t n = bins.size();
    std::vector<std::complex<double>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const double angle = kTau * static_cast<double>(k) * static_cast<double>(i) /
                                 static_cast<double>(n);
            acc += bins[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        out[i] = acc / static_cast<double>(n);
    }
    return out;
}

inline std::vector<double> random_signal(std::size_t n, freqocc::Rng& rng) {
    std::vector<double> x(n);
    for (auto& v : x) v = rng.uniform(-1.0, 1.0);
    return x;
}

/// Single-channel cosine at an exact bin: amplitude * cos(2*pi*bin*t/T + phase).
inline freqocc::TimeSeries make_tone(std::size_t length, std::size_t bin, double amplitude,
                                     double phase, std::size_t channels = 1,
                                     std::size_t target_channel = 0) {
    freqocc::TimeSeries ts(length, channels);
    for (std::size_t t = 0; t < length; ++t) {
        ts.at(t, target_channel) =
            amplitude * std::cos(kTau * static_cast<double>(bin) * static_cast<double>(t) /
                                     static_cast<double>(length) +
                                 phase);
    }
    return ts;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace testsupport
