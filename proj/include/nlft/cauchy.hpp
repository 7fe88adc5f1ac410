#pragma once

#include <memory>
#include <span>

#include "nlft/field.hpp"

namespace nlft {

/// Free-space solid Cauchy transform (1/pi) int f(w)/(z - w) dw restricted to
/// a square block of `box` x `box` lattice nodes at spacing h.
///
/// Application is a 2 box zero-padded FFT convolution, so data anywhere in the
/// block sees the free-space kernel exactly. Kernel samples come from the
/// truncated-kernel construction: the Fourier transform of 1/(pi z) cut off at
/// radius R = sqrt(2) box h is
///     -2i (1 - J0(|xi| R)) / (xi1 + i xi2),
/// which is smooth, so a 4x oversampled inverse DFT of it gives lattice
/// weights that reproduce the continuum transform to spectral accuracy for
/// resolved data.
class CauchyKernel {
 public:
  /// Shared, immutable kernel for (box, h); built once per process.
  static std::shared_ptr<const CauchyKernel> get(std::size_t box, double h);

  CauchyKernel(std::size_t box, double h);

  std::size_t box() const noexcept { return box_; }
  std::size_t padded() const noexcept { return padded_; }
  double spacing() const noexcept { return h_; }

  /// out = dbar^{-1} in on the block (row-major box x box arrays; may alias).
  void dbar_inv(std::span<const cplx> in, std::span<cplx> out) const;
  /// out = d^{-1} in = conj(dbar^{-1} conj(in)).
  void del_inv(std::span<const cplx> in, std::span<cplx> out) const;

 private:
  std::size_t box_;
  std::size_t padded_;
  double h_;
  CVector symbol_;  // DFT of the padded kernel, pre-divided by padded^2
};

/// u with d-bar u = f and u -> 0 at infinity, for f on the full lattice.
ComplexField dbar_inv(const ComplexField& f);
/// Mirror of dbar_inv with kernel 1/(pi conj(z)).
ComplexField del_inv(const ComplexField& f);

}  // namespace nlft
