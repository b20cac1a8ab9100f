#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <vector>

#include "freqocc/dft.hpp"
#include "freqocc/error.hpp"
#include "freqocc/rng.hpp"
#include "test_support.hpp"

using freqocc::dft_forward;
using freqocc::dft_inverse;
using freqocc::Spectrum;
using testsupport::naive_dft;

namespace {

double spectrum_diff(const Spectrum& s, const std::vector<std::complex<double>>& ref) {
    double worst = 0.0;
    for (std::size_t k = 0; k < ref.size(); ++k) {
        worst = std::max(worst, std::abs(s.bins[k] - ref[k]));
    }
    return worst;
}

}  // namespace

TEST_CASE("forward: impulse gives flat spectrum") {
    const Spectrum s = dft_forward({1.0, 0.0, 0.0, 0.0});
    REQUIRE(s.bins.size() == 4);
    for (const auto& b : s.bins) {
        CHECK(std::abs(b - std::complex<double>(1.0, 0.0)) < 1e-12);
    }
}

TEST_CASE("forward: constant gives DC only") {
    const Spectrum s = dft_forward({1.0, 1.0, 1.0, 1.0});
    CHECK(std::abs(s.bins[0] - std::complex<double>(4.0, 0.0)) < 1e-12);
    for (std::size_t k = 1; k < 4; ++k) {
        CHECK(std::abs(s.bins[k]) < 1e-12);
    }
}

TEST_CASE("forward: hand-evaluated 4-point sum") {
    // X[k] = sum_n x[n] e^{-2pi i k n / 4} for x = [0,1,0,-1]:
    // X[0]=0, X[1]=-2i, X[2]=0, X[3]=2i.
    const Spectrum s = dft_forward({0.0, 1.0, 0.0, -1.0});
    CHECK(std::abs(s.bins[0]) < 1e-12);
    CHECK(std::abs(s.bins[1] - std::complex<double>(0.0, -2.0)) < 1e-12);
    CHECK(std::abs(s.bins[2]) < 1e-12);
    CHECK(std::abs(s.bins[3] - std::complex<double>(0.0, 2.0)) < 1e-12);
}

TEST_CASE("forward matches the naive oracle on power-of-two and general lengths") {
    freqocc::Rng rng(11);
    for (std::size_t n : {1, 2, 3, 5, 7, 16, 50, 96, 182}) {
        const std::vector<double> x = testsupport::random_signal(n, rng);
        const Spectrum s = dft_forward(x);
        REQUIRE(s.bins.size() == n);
        REQUIRE(s.origin_length == n);
        CHECK(spectrum_diff(s, naive_dft(x)) < 1e-9);
    }
}

TEST_CASE("inverse: DC-only spectrum gives constant signal") {
    Spectrum s;
    s.bins = {{4.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
    s.origin_length = 4;
    const std::vector<double> x = dft_inverse(s);
    for (double v : x) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inverse of the hand-evaluated spectrum") {
    Spectrum s;
    s.bins = {{0.0, 0.0}, {0.0, -2.0}, {0.0, 0.0}, {0.0, 2.0}};
    s.origin_length = 4;
    const std::vector<double> x = dft_inverse(s);
    const std::vector<double> expected = {0.0, 1.0, 0.0, -1.0};
    CHECK(testsupport::max_abs_diff(x, expected) < 1e-12);
}

TEST_CASE("round-trip identity across lengths") {
    freqocc::Rng rng(23);
    for (std::size_t n : {1, 7, 64, 1000}) {
        const std::vector<double> x = testsupport::random_signal(n, rng);
        const std::vector<double> back = dft_inverse(dft_forward(x));
        CHECK(testsupport::max_abs_diff(x, back) < 1e-9);
    }
}

TEST_CASE("Parseval within relative 1e-9") {
    freqocc::Rng rng(31);
    for (std::size_t n : {4, 7, 50, 128, 182}) {
        const std::vector<double> x = testsupport::random_signal(n, rng);
        const Spectrum s = dft_forward(x);
        double time_energy = 0.0;
        for (double v : x) time_energy += v * v;
        double freq_energy = 0.0;
        for (const auto& b : s.bins) freq_energy += std::norm(b);
        freq_energy /= static_cast<double>(n);
        CHECK(std::abs(time_energy - freq_energy) <= 1e-9 * std::max(time_energy, 1.0));
    }
}

TEST_CASE("linearity") {
    freqocc::Rng rng(37);
    const std::size_t n = 50;
    const std::vector<double> x = testsupport::random_signal(n, rng);
    const std::vector<double> y = testsupport::random_signal(n, rng);
    const double a = 1.7, b = -0.4;
    std::vector<double> combo(n);
    for (std::size_t i = 0; i < n; ++i) combo[i] = a * x[i] + b * y[i];

    const Spectrum sx = dft_forward(x);
    const Spectrum sy = dft_forward(y);
    const Spectrum sc = dft_forward(combo);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(sc.bins[k] - (a * sx.bins[k] + b * sy.bins[k])) < 1e-9);
    }
}

TEST_CASE("conjugate symmetry holds for real inputs") {
    freqocc::Rng rng(41);
    for (std::size_t n : {2, 9, 64, 100}) {
        const Spectrum s = dft_forward(testsupport::random_signal(n, rng));
        CHECK(s.symmetry_residue() < 1e-9);
    }
}

TEST_CASE("non-finite input is rejected") {
    CHECK_THROWS_AS(dft_forward({1.0, std::nan(""), 0.0}), freqocc::InvalidInputError);
    CHECK_THROWS_AS(dft_forward({}), freqocc::InvalidInputError);
}

TEST_CASE("asymmetric spectrum is rejected by the inverse") {
    Spectrum s;
    s.bins = {{1.0, 0.0}, {1.0, 1.0}, {0.0, 0.0}, {0.5, 0.0}};
    s.origin_length = 4;
    CHECK_THROWS_AS(dft_inverse(s), freqocc::SymmetryError);
}

TEST_CASE("independent bin count and mirrors") {
    CHECK(freqocc::independent_bins(1) == 1);
    CHECK(freqocc::independent_bins(4) == 3);
    CHECK(freqocc::independent_bins(5) == 3);
    CHECK(freqocc::independent_bins(182) == 92);
    CHECK(freqocc::mirror_bin(0, 8) == 0);
    CHECK(freqocc::mirror_bin(4, 8) == 4);
    CHECK(freqocc::mirror_bin(3, 8) == 5);
    CHECK(freqocc::mirror_bin(2, 7) == 5);
}

TEST_CASE("channelwise transform") {
    SUBCASE("single channel impulse") {
        freqocc::TimeSeries ts({1.0, 0.0, 0.0, 0.0}, 4, 1);
        const auto spectra = freqocc::channelwise_fft(ts);
        REQUIRE(spectra.size() == 1);
        for (const auto& b : spectra[0].bins) {
            CHECK(std::abs(b - std::complex<double>(1.0, 0.0)) < 1e-12);
        }
    }
    SUBCASE("identical channels give identical spectra") {
        freqocc::Rng rng(5);
        const std::vector<double> sig = testsupport::random_signal(16, rng);
        freqocc::TimeSeries ts(16, 2);
        ts.set_channel(0, sig);
        ts.set_channel(1, sig);
        const auto spectra = freqocc::channelwise_fft(ts);
        REQUIRE(spectra.size() == 2);
        for (std::size_t k = 0; k < 16; ++k) {
            CHECK(std::abs(spectra[0].bins[k] - spectra[1].bins[k]) == 0.0);
        }
    }
    SUBCASE("3-channel 182-step input gives three 182-bin spectra") {
        freqocc::Rng rng(6);
        freqocc::TimeSeries ts(182, 3);
        for (std::size_t ch = 0; ch < 3; ++ch) {
            ts.set_channel(ch, testsupport::random_signal(182, rng));
        }
        const auto spectra = freqocc::channelwise_fft(ts);
        REQUIRE(spectra.size() == 3);
        for (const auto& s : spectra) CHECK(s.bins.size() == 182);
    }
}
