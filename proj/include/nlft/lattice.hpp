#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>

namespace nlft {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// Which variable a lattice samples. Stored in NLF2 files as the domain tag.
enum class Domain : std::uint8_t { position = 0, spectral = 1 };

/// Square, origin-centred sampling of the plane.
///
/// Node (j1, j2) sits at ((j1 - n/2) h, (j2 - n/2) h), so the origin is
/// always a node. Position lattices require n to be a power of two (n >= 8);
/// spectral lattices only need an even n >= 8, since their size is chosen to
/// cover a spectrum rather than to feed a radix-2 transform.
class Lattice {
 public:
  Lattice(std::size_t n, double spacing, Domain domain = Domain::position);

  static Lattice position(std::size_t n, double h) { return {n, h, Domain::position}; }
  static Lattice spectral(std::size_t m, double dk) { return {m, dk, Domain::spectral}; }

  std::size_t n() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double extent() const noexcept { return static_cast<double>(n_) * h_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept { return n_ * n_; }
  double cell_area() const noexcept { return h_ * h_; }

  double coord(std::size_t j) const noexcept
  {
    return (static_cast<double>(j) - static_cast<double>(n_ / 2)) * h_;
  }
  cplx point(std::size_t j1, std::size_t j2) const noexcept { return {coord(j1), coord(j2)}; }
  cplx point(std::size_t idx) const noexcept { return point(idx % n_, idx / n_); }
  std::size_t index(std::size_t j1, std::size_t j2) const noexcept { return j2 * n_ + j1; }

  /// Angular Nyquist frequency pi/h of the periodic DFT on this lattice.
  double nyquist() const noexcept { return pi / h_; }
  /// Angular frequency step 2 pi / (n h) of the periodic DFT.
  double frequency_step() const noexcept { return 2.0 * pi / extent(); }

  /// Same geometry, possibly different domain tag.
  bool same_geometry(const Lattice& other) const noexcept
  {
    return n_ == other.n_ && h_ == other.h_;
  }

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t n_;
  double h_;
  Domain domain_;
};

/// Retagged copy (same nodes, other role).
inline Lattice with_domain(const Lattice& l, Domain d) { return {l.n(), l.spacing(), d}; }

}  // namespace nlft
