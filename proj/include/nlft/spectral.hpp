#pragma once

#include "nlft/field.hpp"

namespace nlft {

/// e_k(z) = exp(i (z k + conj(z k))) = exp(2 i Re(z k)).
inline cplx ek(cplx z, cplx k)
{
  const double phase = 2.0 * (z.real() * k.real() - z.imag() * k.imag());
  return {std::cos(phase), std::sin(phase)};
}

/// Whether a target lattice may touch the unpaired Nyquist frequency of the
/// source lattice. Forward transforms onto a KLattice require the strict form.
enum class NyquistRule { strict, inclusive };

/// Padding factor P and index stride c relating a source lattice (n, h) to a
/// target lattice (m, b): target node l maps to DFT slot c (l - m/2) in a
/// transform of size P n, where c = b P n h / pi must be a positive integer.
struct Commensuration {
  std::size_t padding = 1;
  long stride = 1;
  std::size_t dft_size = 0;
};

Commensuration commensurate(const Lattice& source, const Lattice& target, NyquistRule rule);

/// (i/pi) sum_z h^2 e_{-w}(z) f(z) for every node w of `target`.
///
/// The phase e_{-w}(z) = exp(-i x.xi) with xi = (2 w1, -2 w2) turns this into
/// one zero-padded DFT of size P n plus index remapping.
ComplexField ek_transform(const ComplexField& f, const Lattice& target, NyquistRule rule);

/// Fourier transform in the convention q^(k) = (i/pi) int e_{-k}(z) q(z) dz,
/// sampled on the spectral lattice `kl`.
ComplexField dft_paper(const ComplexField& q, const Lattice& kl);

/// Inverse of dft_paper: q(z) = -(i/pi) int e_k(z) q^(k) dk, sampled on `zl`.
ComplexField idft_paper(const ComplexField& s, const Lattice& zl);

/// Pointwise multiplication by e_{sign k}.
ComplexField ek_modulate(const ComplexField& f, cplx k, int sign);

/// Ordinary periodic spectrum F(xi_p) = h^2 sum_j f_j e^{-i x_j . xi_p} on the
/// lattice's own DFT grid, stored in FFT slot order.
CVector ordinary_spectrum(const ComplexField& f);
/// Inverse of ordinary_spectrum, back onto `lattice`.
CVector ordinary_inverse(std::span<const cplx> spectrum, const Lattice& lattice);

/// Angular frequency (xi1, xi2) of FFT slot (p1, p2) on `lattice`.
inline std::pair<double, double> frequency(const Lattice& lattice, std::size_t s1, std::size_t s2);

/// Multiplies the periodic spectrum of f by symbol(xi1, xi2) and transforms
/// back. The unpaired Nyquist row and column are zeroed when `drop_nyquist`.
template <class Symbol>
ComplexField fourier_multiplier(const ComplexField& f, Symbol&& symbol, bool drop_nyquist);

/// d-bar = (d/dx1 + i d/dx2)/2 applied spectrally.
ComplexField spectral_dbar(const ComplexField& f);
/// d = (d/dx1 - i d/dx2)/2 applied spectrally.
ComplexField spectral_del(const ComplexField& f);

}  // namespace nlft

#include "nlft/spectral_impl.hpp"
