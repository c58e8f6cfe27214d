#pragma once

#include "stp/kernels.hpp"

namespace stp::kern {

#if defined(STP_HAVE_AVX2)
const Ops& avx2_ops();
#endif
#if defined(STP_HAVE_NEON)
const Ops& neon_ops();
#endif

}  // namespace stp::kern
