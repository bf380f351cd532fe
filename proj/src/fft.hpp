#pragma once

// Thin FFTW wrapper: cached 1-D complex plans keyed by (n, sign).
// FFTW sign convention matches ours: FFTW_FORWARD sums e^{-2 pi i mk/n}.

#include <complex>

namespace qlct::detail {

/// In-place unnormalized DFT of `count` contiguous rows of length n.
/// sign = -1: e^{-2 pi i mk/n} (forward); sign = +1: e^{+2 pi i mk/n}.
void dft_rows(std::complex<double>* data, int n, int count, int sign);

}  // namespace qlct::detail
