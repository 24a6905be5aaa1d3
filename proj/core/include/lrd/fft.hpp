#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lrd::fft {

// In-place complex DFT, FFTW backend. Plans are cached per (size, direction)
// and reused via new-array execution, so repeated transforms of one size cost
// no planning. forward is unnormalized; inverse applies the 1/N factor.
void forward(std::vector<std::complex<double>>& buf);
void inverse(std::vector<std::complex<double>>& buf);

std::size_t next_pow2(std::size_t n);

// Circular convolution of a and x, both zero-padded to length len (len must
// be >= max(a.size, x.size); power of two is fastest). Entry t of the result
// is sum_j a[j] x[(t - j) mod len]. Callers pick len so that the slice they
// read is free of wraparound.
std::vector<double> circular_convolve(const std::vector<double>& a,
                                      const std::vector<double>& x,
                                      std::size_t len);

// Linear autocorrelation r[k] = sum_j a[j] a[j+k], k = 0..a.size()-1.
std::vector<double> autocorrelation(const std::vector<double>& a);

}  // namespace lrd::fft
