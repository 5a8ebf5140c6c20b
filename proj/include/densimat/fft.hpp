#pragma once

#include <complex>
#include <vector>

namespace densimat::fft {

inline constexpr int kForward = -1;   // kernel e^{-ikx}
inline constexpr int kBackward = +1;  // kernel e^{+ikx}

/// In-place unnormalized complex DFT over the trailing `dims` (row-major),
/// repeated `howmany` times with block stride prod(dims). Deterministic
/// (FFTW_ESTIMATE plans, cached and reused).
void transform(std::complex<double>* data, const std::vector<int>& dims, int howmany, int sign);

inline void transform_1d(std::complex<double>* data, int n, int howmany, int sign) {
  transform(data, {n}, howmany, sign);
}
inline void transform_2d(std::complex<double>* data, int n0, int n1, int howmany, int sign) {
  transform(data, {n0, n1}, howmany, sign);
}
inline void transform_3d(std::complex<double>* data, int n0, int n1, int n2, int howmany, int sign) {
  transform(data, {n0, n1, n2}, howmany, sign);
}

/// Per-axis mixed-sign 2-D transform: applies a 1-D DFT with sign `sign0`
/// along axis 0 and `sign1` along axis 1 of an n0 x n1 row-major array.
void transform_2d_mixed(std::complex<double>* data, int n0, int n1, int sign0, int sign1);

}  // namespace densimat::fft
