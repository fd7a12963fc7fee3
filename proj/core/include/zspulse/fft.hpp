#pragma once

#include "zspulse/types.hpp"

namespace zs {

// In-place radix-2 transforms. Grid sizes in this project are powers of two
// by design, so no general-length machinery is needed.
//
// forward_fft:  X[k] = sum_n x[n] e^{-2pi i nk/N}
// inverse_fft:  x[n] = (1/N) sum_k X[k] e^{+2pi i nk/N}
void forward_fft(CVector& data);
void inverse_fft(CVector& data);

}  // namespace zs
