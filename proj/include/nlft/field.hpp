#pragma once

#include <cmath>
#include <cstddef>
#include <new>
#include <span>
#include <vector>

#include "nlft/errors.hpp"
#include "nlft/lattice.hpp"

namespace nlft {

/// 64-byte aligned allocator so every buffer satisfies FFTW's SIMD alignment.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t alignment{64};

  AlignedAllocator() noexcept = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t count)
  {
    return static_cast<T*>(::operator new(count * sizeof(T), alignment));
  }
  void deallocate(T* p, std::size_t) noexcept { ::operator delete(p, alignment); }

  template <class U>
  friend bool operator==(const AlignedAllocator&, const AlignedAllocator<U>&) noexcept
  {
    return true;
  }
};

using CVector = std::vector<cplx, AlignedAllocator<cplx>>;
using RVector = std::vector<double, AlignedAllocator<double>>;

/// Complex samples on a lattice, row-major with j2 outer and j1 inner.
///
/// Immutable after construction; every sample is finite.
class ComplexField {
 public:
  explicit ComplexField(Lattice lattice);
  ComplexField(Lattice lattice, CVector samples);

  template <class F>
  static ComplexField from_function(const Lattice& lattice, F&& f)
  {
    CVector v(lattice.size());
    for (std::size_t j2 = 0; j2 < lattice.n(); ++j2)
      for (std::size_t j1 = 0; j1 < lattice.n(); ++j1)
        v[lattice.index(j1, j2)] = f(lattice.point(j1, j2));
    return {lattice, std::move(v)};
  }

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t n() const noexcept { return lattice_.n(); }
  std::size_t size() const noexcept { return samples_.size(); }
  std::span<const cplx> samples() const noexcept { return samples_; }
  const cplx& operator[](std::size_t i) const noexcept { return samples_[i]; }
  const cplx& operator()(std::size_t j1, std::size_t j2) const noexcept
  {
    return samples_[lattice_.index(j1, j2)];
  }

  /// Copy of the samples for building a derived field.
  CVector copy_samples() const { return samples_; }

 private:
  Lattice lattice_;
  CVector samples_;
};

void require_same_lattice(const ComplexField& a, const ComplexField& b, const char* what);

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(cplx alpha, const ComplexField& a);
/// Pointwise product.
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField conj(const ComplexField& a);
/// |a| as a real-valued field.
ComplexField modulus(const ComplexField& a);
ComplexField retag(const ComplexField& a, Domain d);

/// Discrete L2 inner product h^2 sum conj(a) b.
cplx inner(const ComplexField& a, const ComplexField& b);
/// Discrete L2 norm.
double l2(const ComplexField& a);
double l2(std::span<const cplx> v, double cell_area);
/// ||a - b||_2 / ||b||_2 (0 when both vanish).
double relative_l2(const ComplexField& a, const ComplexField& b);

bool all_finite(std::span<const cplx> v) noexcept;

}  // namespace nlft
