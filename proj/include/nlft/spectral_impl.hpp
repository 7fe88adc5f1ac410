#pragma once

// Template definitions for spectral.hpp.

#include "nlft/fft.hpp"

namespace nlft {

inline std::pair<double, double> frequency(const Lattice& lattice, std::size_t s1, std::size_t s2)
{
  const double step = lattice.frequency_step();
  return {step * static_cast<double>(fft::signed_index(s1, lattice.n())),
          step * static_cast<double>(fft::signed_index(s2, lattice.n()))};
}

template <class Symbol>
ComplexField fourier_multiplier(const ComplexField& f, Symbol&& symbol, bool drop_nyquist)
{
  const std::size_t n = f.n();
  CVector buf = f.copy_samples();
  fft::transform2d(buf.data(), n, fft::Direction::forward);
  const double scale = 1.0 / static_cast<double>(n * n);
  for (std::size_t s2 = 0; s2 < n; ++s2) {
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      cplx& c = buf[s2 * n + s1];
      if (drop_nyquist && (s1 == n / 2 || s2 == n / 2)) {
        c = 0.0;
        continue;
      }
      const auto [xi1, xi2] = frequency(f.lattice(), s1, s2);
      c *= symbol(xi1, xi2) * scale;
    }
  }
  fft::transform2d(buf.data(), n, fft::Direction::backward);
  return {f.lattice(), std::move(buf)};
}

}  // namespace nlft
