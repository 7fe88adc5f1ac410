#pragma once

#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nlft/dbar_solver.hpp"
#include "nlft/report.hpp"
#include "nlft/spectral.hpp"

namespace nlft {

/// Values of the scattering transform on a lattice together with per-node
/// solver outcomes. Nodes whose Jost solve did not converge ("holes") keep
/// their best iterate but are left out of the norm summary.
struct ScatteringData {
  /// Wraps raw samples with every node marked converged.
  explicit ScatteringData(ComplexField samples)
      : s(std::move(samples)), residual(s.size(), 0.0), iterations(s.size(), 0), converged(s.size(), 1)
  {
  }

  ComplexField s;
  std::vector<double> residual;
  std::vector<std::uint32_t> iterations;
  std::vector<std::uint8_t> converged;
  double source_norm = 0.0;
  double l2_norm = 0.0;
  double truncated_fraction = 0.0;  // share of ||q^||_2 outside the lattice
  SolverConfig config;

  const Lattice& lattice() const noexcept { return s.lattice(); }
  std::size_t hole_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> holes() const;
  /// Trapezoid L2 norm over converged nodes, in index order.
  double converged_l2() const;
  /// Samples with holes replaced by the mean of their converged neighbours
  /// (bilinear fill on the lattice); meant for evolution, not for norms.
  ComplexField filled() const;
};

/// Sidecar description {source_norm, l2_norm, holes, config, ...}.
nlohmann::json sidecar(const ScatteringData& d);
/// Writes `stem`.nlf2 and `stem`.json.
void save(const ScatteringData& d, const std::filesystem::path& stem);
/// Reads a pair written by save (or any NLF2 field with an optional sidecar).
ScatteringData load_scattering(const std::filesystem::path& stem);

/// Optional progress hook, called with (rows done, total rows).
using Progress = std::function<void(std::size_t, std::size_t)>;

/// The transform S evaluated on `target`:
///   S f(w) = -(i/pi) int e_w(x) conj(f(x)) m1(x, w) dx,
/// with the Born term conj(f^) taken from one padded DFT and the correction
/// from per-node Jost solves on the active block of f. forward and inverse
/// are this single routine with the roles of z and k exchanged.
ScatteringData transform(const ComplexField& f, const Lattice& target, const SolverConfig& cfg, NyquistRule rule,
                         const Progress& progress = {});

/// s = S q on the spectral lattice kl.
ScatteringData forward(const ComplexField& q, const Lattice& kl, const SolverConfig& cfg,
                       const Progress& progress = {});

/// q = S s on zl; throws ExcessiveHoles when more than 1% of s failed.
ComplexField inverse(const ScatteringData& s, const Lattice& zl, const SolverConfig& cfg,
                     const Progress& progress = {});

struct DifferenceResult {
  ComplexField values;
  std::size_t holes = 0;
};

/// T_{q1,q2} f(k) = -(i/pi)(int e_k conj(f) a - int e_k f b) with
/// a = conj(m1[conj q2](z, -k)) m1[q1](z, k) and b = conj(m2[conj q2](z, -k)) m2[q1](z, k),
/// so that S q1 - S q2 = T_{q1,q2}(q1 - q2).
DifferenceResult difference_apply(const ComplexField& q1, const ComplexField& q2, const ComplexField& f,
                                  const Lattice& kl, const SolverConfig& cfg);

/// sup_k |s(k)| / M q^(k) and the mirror sup_z |q(z)| / M s^(z), where hats
/// are the transform of q onto the spectral lattice and of s back onto q's lattice.
std::pair<InequalityReport, InequalityReport> pointwise_bound_report(const ComplexField& q,
                                                                     const ScatteringData& s);

}  // namespace nlft
