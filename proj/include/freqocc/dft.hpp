#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "freqocc/timeseries.hpp"

namespace freqocc {

/// Full discrete Fourier transform of one real channel. Bin k holds the
/// unnormalized coefficient for frequency k; `origin_length` is the
/// signal length the bins came from.
struct Spectrum {
    std::vector<std::complex<double>> bins;
    std::size_t origin_length = 0;

    /// Max deviation from conjugate symmetry, bins[k] vs conj(bins[t-k]).
    double symmetry_residue() const;
};

/// Number of independent frequency bins of a real signal of length t:
/// floor(t/2) + 1. Conjugate-mirror bins are not counted.
std::size_t independent_bins(std::size_t length);

/// Mirror bin of independent bin k for length t, i.e. t - k. DC maps to
/// itself, as does the Nyquist bin for even t.
std::size_t mirror_bin(std::size_t k, std::size_t length);

/// Unnormalized forward DFT, X[k] = sum_n x[n] exp(-2*pi*i*k*n/t).
/// Radix-2 for power-of-two lengths, Bluestein otherwise.
Spectrum dft_forward(const std::vector<double>& signal);

/// Inverse DFT with 1/t scaling, x[n] = (1/t) sum_k X[k] exp(+2*pi*i*k*n/t).
/// Requires a conjugate-symmetric spectrum: the imaginary residue of the
/// inverse must stay below 1e-6 or a SymmetryError is thrown.
std::vector<double> dft_inverse(const Spectrum& spectrum);

/// Forward DFT of every channel, channel order preserved.
std::vector<Spectrum> channelwise_fft(const TimeSeries& x);

namespace detail {

/// Unnormalized forward DFT of a complex input (shared by forward and
/// inverse paths; the inverse is conj(forward(conj(X))) / t).
std::vector<std::complex<double>> dft_complex(const std::vector<std::complex<double>>& x);

/// Complex inverse without the realness check, for callers that need
/// the raw imaginary residue.
std::vector<std::complex<double>> idft_complex(const std::vector<std::complex<double>>& bins);

}  // namespace detail

}  // namespace freqocc
