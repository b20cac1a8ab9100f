#include "freqocc/dft.hpp"

#include <cmath>
#include <cstdint>

#include "freqocc/error.hpp"

namespace freqocc {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 6.283185307179586476925287;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 Cooley-Tukey, unnormalized. `invert` flips
// the twiddle sign; scaling is the caller's business.
void fft_pow2(std::vector<cplx>& a, bool invert) {
    const std::size_t n = a.size();
    if (n < 2) return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (invert ? kTwoPi : -kTwoPi) / static_cast<double>(len);
        const cplx wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// Chirp factor exp(sign * i * pi * n^2 / N); n^2 is reduced mod 2N so the
// angle stays small for long inputs.
cplx chirp(std::size_t n, std::size_t N, double sign) {
    const std::uint64_t r = (static_cast<std::uint64_t>(n) * n) % (2 * static_cast<std::uint64_t>(N));
    const double angle = sign * kTwoPi / 2.0 * static_cast<double>(r) / static_cast<double>(N);
    return {std::cos(angle), std::sin(angle)};
}

// Bluestein: express the length-N DFT as a circular convolution of
// padded length M = next_pow2(2N - 1), evaluated with the radix-2 path.
std::vector<cplx> dft_bluestein(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);

    std::vector<cplx> a(m, cplx(0.0, 0.0));
    std::vector<cplx> b(m, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = x[i] * chirp(i, n, -1.0);
        b[i] = chirp(i, n, 1.0);
    }
    for (std::size_t i = 1; i < n; ++i) {
        b[m - i] = b[i];
    }

    fft_pow2(a, false);
    fft_pow2(b, false);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, true);

    const double scale = 1.0 / static_cast<double>(m);
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a[k] * scale * chirp(k, n, -1.0);
    }
    return out;
}

}  // namespace

namespace detail {

std::vector<cplx> dft_complex(const std::vector<cplx>& x) {
    if (x.size() <= 1) return x;
    if (is_pow2(x.size())) {
        std::vector<cplx> a = x;
        fft_pow2(a, false);
        return a;
    }
    return dft_bluestein(x);
}

std::vector<cplx> idft_complex(const std::vector<cplx>& bins) {
    const std::size_t n = bins.size();
    std::vector<cplx> tmp(n);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = std::conj(bins[i]);
    tmp = dft_complex(tmp);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = std::conj(tmp[i]) * scale;
    return tmp;
}

}  // namespace detail

double Spectrum::symmetry_residue() const {
    const std::size_t t = bins.size();
    double worst = 0.0;
    for (std::size_t k = 1; k < t; ++k) {
        const cplx d = bins[k] - std::conj(bins[t - k]);
        worst = std::max(worst, std::abs(d));
    }
    if (t > 0) worst = std::max(worst, std::abs(bins[0].imag()));
    return worst;
}

std::size_t independent_bins(std::size_t length) { return length / 2 + 1; }

std::size_t mirror_bin(std::size_t k, std::size_t length) {
    return k == 0 ? 0 : length - k;
}

Spectrum dft_forward(const std::vector<double>& signal) {
    if (signal.empty()) {
        throw InvalidInputError("dft_forward: empty signal");
    }
    std::vector<cplx> x(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i) {
        if (!std::isfinite(signal[i])) {
            throw InvalidInputError("dft_forward: non-finite input");
        }
        x[i] = cplx(signal[i], 0.0);
    }
    return Spectrum{detail::dft_complex(x), signal.size()};
}

std::vector<double> dft_inverse(const Spectrum& spectrum) {
    if (spectrum.bins.empty() || spectrum.bins.size() != spectrum.origin_length) {
        throw DimensionError("dft_inverse: bin count does not match origin length");
    }
    const std::vector<cplx> full = detail::idft_complex(spectrum.bins);
    double residue = 0.0;
    for (const cplx& v : full) {
        residue = std::max(residue, std::abs(v.imag()));
    }
    if (residue >= 1e-6) {
        throw SymmetryError("dft_inverse: spectrum is not conjugate-symmetric (imag residue " +
                            std::to_string(residue) + ")");
    }
    std::vector<double> out(full.size());
    for (std::size_t i = 0; i < full.size(); ++i) out[i] = full[i].real();
    return out;
}

std::vector<Spectrum> channelwise_fft(const TimeSeries& x) {
    std::vector<Spectrum> out;
    out.reserve(x.channels());
    for (std::size_t ch = 0; ch < x.channels(); ++ch) {
        out.push_back(dft_forward(x.channel(ch)));
    }
    return out;
}

}  // namespace freqocc
