#ifndef CHLAB_FFT_HPP
#define CHLAB_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace chlab::fft {

/* Real <-> half-complex transforms with the normalization
 *   forward(v)[j] = (1/N) sum_n v_n e^{-2 pi i j n / N},
 * so forward/inverse are exact inverses and coefficients are the Fourier-series
 * amplitudes of the trigonometric interpolant.  Plan creation is serialized
 * internally (FFTW requirement); execution is concurrency-safe. */
std::vector<std::complex<double>> forward(std::span<const double> samples);
std::vector<double> inverse(std::span<const std::complex<double>> coeffs, int n);

}  // namespace chlab::fft

#endif
