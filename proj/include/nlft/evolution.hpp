#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlft/dbar_solver.hpp"
#include "nlft/scattering.hpp"

namespace nlft {

/// Settings shared by both DSII solvers.
///
/// The equation is i q_t + 2(d^2 + dbar^2) q + q (g + conj g) = 0 with
/// dbar g = -d |q|^2, so g + conj g = -coupling L(D) |q|^2 where
/// L(xi) = (xi1^2 - xi2^2) / |xi|^2. The default coupling of 8 is the one
/// whose flow the scattering phase e^{4i(k1^2 - k2^2)t} linearizes.
struct EvolutionConfig {
  double t_final = 0.1;
  double dt = 1e-3;
  std::string scheme = "strang";
  Lattice kl = Lattice::spectral(64, pi / 20.0);
  SolverConfig cfg;
  double coupling = 8.0;
  /// Lattice the IST solution is sampled on (defaults to the initial data's).
  std::optional<Lattice> output;

  /// Rejects bad steps and, via CflViolation, steps that under-resolve the
  /// linear phase on the spectral band: dt max|xi1^2 - xi2^2| <= pi/4 with
  /// xi = (2 k1, -2 k2) over kl.
  void validate() const;
};

struct EvolutionReport {
  std::string method;
  std::vector<double> times;
  std::vector<double> mass;      // ||q(t)||_2
  std::vector<double> l4_accum;  // int_0^t ||q||_4^4 ds (trapezoid over recorded times)
  std::size_t holes = 0;
  double max_residual = 0.0;
};

nlohmann::json to_json(const EvolutionReport& r);

/// U(t) = exp(2 i t (d^2 + dbar^2)), the Fourier multiplier exp(-i t (xi1^2 - xi2^2)).
ComplexField linear_propagate(const ComplexField& q0, double t);

/// Scattering data at time t: s(t, k) = exp(4 i (k1^2 - k2^2) t) s0(k).
ScatteringData evolve_scattering(const ScatteringData& s0, double t);

/// IST pipeline for one or more times sharing the forward transform.
std::vector<ComplexField> evolve_ist_series(const ComplexField& q0, const std::vector<double>& times,
                                            const EvolutionConfig& ec, EvolutionReport* report = nullptr,
                                            const ScatteringData* precomputed = nullptr);
std::pair<ComplexField, EvolutionReport> evolve_ist(const ComplexField& q0, double t, const EvolutionConfig& ec,
                                                    const ScatteringData* precomputed = nullptr);

/// Strang split-step: half nonlinear phase, full linear step, half nonlinear
/// phase. The nonlinear substep multiplies by a unimodular factor, so |q| is
/// unchanged pointwise within it.
std::pair<ComplexField, EvolutionReport> evolve_direct(const ComplexField& q0, double t, const EvolutionConfig& ec);

struct CrossValidation {
  ComplexField ist;
  ComplexField direct;  // sampled on the IST output lattice
  double discrepancy = 0.0;
  double ist_vs_linear = 0.0;
  double direct_vs_linear = 0.0;
  EvolutionReport ist_report;
  EvolutionReport direct_report;
};

nlohmann::json to_json(const CrossValidation& c);

CrossValidation cross_validate(const ComplexField& q0, double t, const EvolutionConfig& ec,
                               const ScatteringData* precomputed = nullptr);

/// Samples f on a coarser lattice whose nodes are a subset of f's nodes.
ComplexField restrict_to(const ComplexField& f, const Lattice& coarse);

/// Largest time before the root-mean-square group speed 2 <|xi|^2>^{1/2} of
/// q0 carries mass a quarter of the box width.
double dispersive_window(const ComplexField& q0);

struct WaveOperatorReport {
  std::vector<double> times;
  std::vector<double> distance;  // ||U(-t) q(t) - q_+||_2
  bool non_increasing = true;
  double window = 0.0;
};

nlohmann::json to_json(const WaveOperatorReport& r);

/// q_+ = conj(FT(S q0)) sampled on q0's lattice, compared against the direct
/// solver pulled back by U(-t) at each time.
WaveOperatorReport wave_operator_check(const ComplexField& q0, const std::vector<double>& times,
                                       const EvolutionConfig& ec, const ScatteringData* precomputed = nullptr);

/// || dbar_k^{-1}( e_z(k) exp(i t (k^2 + conj(k)^2)) s0(k) ) ||_{L^4_{z,k}} by
/// direct quadrature: k lattice fine enough for the phase, z sampled on a
/// grid of spacing z_step sqrt(t) over the region the stationary points reach.
struct DecayQuadrature {
  double k_radius = 4.0;
  double z_step = 0.5;
  double z_margin = 8.0;
};
double linear_phase_l4(const std::function<cplx(cplx)>& s0, double t, const DecayQuadrature& quad = {});

struct DecayFit {
  std::vector<double> times;
  std::vector<double> norms;
  double exponent = 0.0;  // least-squares slope of log norm against log t
};
DecayFit fit_linear_phase_decay(const std::function<cplx(cplx)>& s0, const std::vector<double>& times,
                                const DecayQuadrature& quad = {});

nlohmann::json to_json(const DecayFit& f);

}  // namespace nlft
