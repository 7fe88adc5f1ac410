#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nlft/dbar_solver.hpp"
#include "nlft/field.hpp"
#include "nlft/report.hpp"

namespace nlft {

/// Multiplier |xi|^s on the periodic spectrum, zero mode set to 0.
ComplexField frac_power(const ComplexField& f, double s);

/// (-Delta)^{-alpha/2} f, i.e. the multiplier |xi|^{-alpha}; alpha in (0, 2).
ComplexField frac_laplacian(const ComplexField& f, double alpha);

/// Ordinary transform f^(xi) = int e^{-i x.xi} f(x) dx on the centred
/// frequency lattice (n, 2 pi / L), spectral domain tag.
ComplexField spectrum_field(const ComplexField& f);

/// Largest pointwise ratio |top| / bottom over the nodes where mask is set
/// (all nodes when mask is empty); returns the (|top|, bottom) pair attaining
/// it. A node with bottom == 0 and top != 0 wins outright.
std::pair<double, double> worst_ratio(std::span<const double> top, std::span<const double> bottom,
                                      std::span<const std::uint8_t> mask = {});

struct FractionalAudit {
  InequalityReport form_a;  // |I f| <= c (lambda^{2-alpha} Mf^(0) + lambda^{-alpha} Mf)
  InequalityReport form_b;  // |I f| <= c (Mf^(0))^{alpha/2} (Mf)^{1-alpha/2}
};

/// Pointwise audit of the fractional integral bound on one field; each form
/// records its worst node as a single trial.
FractionalAudit audit_fractional_bound(const ComplexField& f, double alpha, double lambda);

/// Adds the worst-node trial of `f` to an existing audit (for ensembles).
void add_fractional_trial(FractionalAudit& audit, const ComplexField& f, double alpha, double lambda);

/// Samples a(x, xi) for x on `xl` and xi on the nodes of `xil`, stored
/// x-major: slice x is xil.size() contiguous values.
class SymbolField {
 public:
  static constexpr std::size_t max_samples = std::size_t{1} << 31;

  SymbolField(Lattice xl, Lattice xil);
  template <class F>
  static SymbolField from_function(const Lattice& xl, const Lattice& xil, F&& a)
  {
    SymbolField s(xl, xil);
    for (std::size_t i = 0; i < xl.size(); ++i) {
      const cplx x = xl.point(i);
      for (std::size_t j = 0; j < xil.size(); ++j) s.data_[i * xil.size() + j] = a(x, xil.point(j));
    }
    return s;
  }

  const Lattice& x_lattice() const noexcept { return xl_; }
  const Lattice& xi_lattice() const noexcept { return xil_; }
  std::span<const cplx> slice(std::size_t x) const noexcept
  {
    return {data_.data() + x * xil_.size(), xil_.size()};
  }
  std::span<cplx> slice(std::size_t x) noexcept { return {data_.data() + x * xil_.size(), xil_.size()}; }
  ComplexField slice_field(std::size_t x) const;

 private:
  Lattice xl_, xil_;
  CVector data_;
};

/// a(x, D) f(x) = (2 pi)^{-2} int e^{i x.xi} a(x, xi) f^(xi) dxi on a's x lattice.
/// The xi lattice of `a` must be the frequency lattice of f (n, 2 pi / L).
ComplexField pdo_apply(const SymbolField& a, const ComplexField& f);

/// Same with f^ supplied directly on a's xi lattice (centred order).
ComplexField pdo_apply_spectral(const SymbolField& a, std::span<const cplx> fhat);

/// Jost symbol a(k, xi) = m1(z, k) - 1 with xi = (2 x1, -2 x2), so that
/// e^{i k.xi} = e_k(z). The x lattice is `kl`; the xi lattice has spacing 2h.
/// xi node (j1, j2) reads z node (j1, n - j2); the row j2 = 0 has no partner
/// and is set to zero.
SymbolField jost_symbol(const ComplexField& q, const Lattice& kl, const SolverConfig& cfg);

/// Values on the xi lattice of jost_symbol for which pdo_apply_spectral
/// reproduces -(i/pi) int e_k conj(q) (m1 - 1) dz: -i pi conj(q(z(xi))).
CVector jost_symbol_spectrum(const ComplexField& q);

/// || (-Delta_xi)^{1/2} a ||_{L^4_x L^{4/3}_xi}.
double pdo_symbol_norm(const SymbolField& a);

struct PdoAudit {
  InequalityReport l2;         // ||a(x,D) f||_2 <= c ||f||_2 ||(-Delta)^{1/2} a||
  InequalityReport pointwise;  // |a(x,D) f(x)| <= c (Mf(x))^{1/2} ||b(x,.)||_{4/3} ||f||_2^{1/2}
};

/// Audits both forms over an ensemble of fields living on the position
/// lattice dual to a's xi lattice. Mf is read at the node nearest each x.
PdoAudit audit_pdo_bound(const SymbolField& a, std::span<const ComplexField> ensemble);

/// ||q u||_{H^{-r}} against ||q||_{B^{2/p - 2r, p}_inf} ||u||_{H^r};
/// requires r in [0, 1) and p in [max(2, 1/r), 2/r).
InequalityReport audit_bilinear_besov(const ComplexField& q, const ComplexField& u, double r = 0.5, double p = 3.0);
void add_bilinear_trial(InequalityReport& report, const ComplexField& q, const ComplexField& u, double r = 0.5,
                        double p = 3.0);

/// |dbar^{-1}(e_{-k} q)(x)| <= c (M q^(k))^{1/2} (M q(x))^{1/2} over x and
/// every `stride`-th node of the k lattice (paper transform for q^).
InequalityReport audit_dbar_bound(const ComplexField& q, const Lattice& kl, std::size_t stride = 1);
void add_dbar_trial(InequalityReport& report, const ComplexField& q, const Lattice& kl, std::size_t stride = 1);

/// Reproducible random test field: a sum of `bumps` modulated Gaussians with
/// seeded centres, widths, frequencies and complex amplitudes, defined as a
/// function of position so that every lattice samples the same field.
struct RandomField {
  struct Bump {
    cplx centre, amplitude, frequency;
    double width;
  };
  std::vector<Bump> bumps;

  cplx operator()(cplx z) const;
  ComplexField sample(const Lattice& l) const;
};

/// `count` fields from one seeded stream; `spread` bounds the centres and
/// `max_frequency` the modulation, both in lattice units of length.
std::vector<RandomField> random_ensemble(std::size_t count, std::uint64_t seed, double spread = 3.0,
                                         double max_frequency = 2.0, std::size_t bumps = 6);

inline constexpr std::uint64_t default_seed = 0x5EED;

}  // namespace nlft
