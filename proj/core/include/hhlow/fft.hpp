#pragma once

#include <complex>
#include <vector>

namespace hhlow {

// Thin deterministic wrapper over the 3D complex transforms. Plans are
// cached per (n, direction) behind a mutex and created with FFTW_ESTIMATE,
// so the algorithm choice (and therefore rounding) never depends on timing.
// Execution on caller-owned buffers is thread-safe; sweep workers each use
// their own arrays.

/// In-place forward DFT (physical → frequency), unnormalized:
/// out[k] = Σ_j in[j] e^{−2πi j·k/n}.
void fft3_forward(int n, std::complex<double>* data);

/// In-place inverse DFT (frequency → physical), unnormalized:
/// out[j] = Σ_k in[k] e^{+2πi j·k/n}.
void fft3_inverse(int n, std::complex<double>* data);

}  // namespace hhlow
