#pragma once

#include <cstddef>

#include "nlft/lattice.hpp"

namespace nlft::fft {

enum class Direction : int { forward = -1, backward = +1 };

/// In-place unnormalised 2-D DFT of an N x N row-major array.
///
/// forward uses e^{-2 pi i j p / N}. `data` must be 64-byte aligned (CVector
/// storage is). Plans are cached per thread; planning is serialised because
/// FFTW's planner is not reentrant.
void transform2d(cplx* data, std::size_t N, Direction dir);

/// In-place unnormalised 1-D DFT of `count` contiguous rows of length N.
void transform_rows(cplx* data, std::size_t N, std::size_t count, Direction dir);

/// Smallest 2^a 3^b 5^c 7^d that is >= at_least (and even).
std::size_t good_size(std::size_t at_least);

/// Signed frequency index of DFT slot i in a length-N transform; the unpaired
/// Nyquist slot N/2 maps to -N/2.
inline long signed_index(std::size_t i, std::size_t N) noexcept
{
  return i < N / 2 ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(N);
}

/// DFT slot holding signed frequency index p.
inline std::size_t slot(long p, std::size_t N) noexcept
{
  const long n = static_cast<long>(N);
  return static_cast<std::size_t>(((p % n) + n) % n);
}

}  // namespace nlft::fft
