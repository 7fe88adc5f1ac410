#pragma once

#include <string>

#include "json.hpp"
#include "nlft/field.hpp"
#include "nlft/krylov.hpp"

namespace nlft {

enum class Method { neumann, krylov };

Method parse_method(const std::string& name);
const char* to_string(Method m) noexcept;

struct SolverConfig {
  Method method = Method::krylov;
  double tol = 1e-8;
  std::size_t max_iter = 600;
  std::size_t restart = 60;

  /// Throws std::invalid_argument unless tol in (0, 1) and max_iter >= 1.
  void validate() const;
};

nlohmann::json to_json(const SolverConfig& cfg);

/// Square block of lattice nodes [o1, o1 + size) x [o2, o2 + size).
struct ActiveBox {
  std::size_t o1 = 0;
  std::size_t o2 = 0;
  std::size_t size = 0;

  bool empty() const noexcept { return size == 0; }
  std::size_t count() const noexcept { return size * size; }
};

/// Smallest square block (kept inside the lattice) holding every node where
/// |f| exceeds threshold * max|f|. Empty for f == 0.
ActiveBox active_box(const ComplexField& f, double threshold = 1e-14);
/// Union of the active boxes of several fields on one lattice.
ActiveBox active_box(std::initializer_list<const ComplexField*> fields, double threshold = 1e-14);

CVector crop(const ComplexField& f, const ActiveBox& box);

struct LqSolution {
  ComplexField u;
  double residual = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::converged;
};

/// Solves d-bar u + q conj(u) = f through u + dbar^{-1}(q conj u) = dbar^{-1} f.
/// The operator is real-linear, so krylov runs GMRES on the real splitting.
LqSolution solve_lq(const ComplexField& q, const ComplexField& f, const SolverConfig& cfg);

/// ||u + dbar^{-1}(q conj u) - dbar^{-1} f|| / ||dbar^{-1} f|| evaluated from scratch.
double lq_residual(const ComplexField& q, const ComplexField& u, const ComplexField& f);

struct JostTriple {
  cplx k;
  ComplexField m_plus;
  ComplexField m_minus;
  ComplexField m1;
  ComplexField m2;
  double residual_plus = 0.0;
  double residual_minus = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::converged;
  // Relative residuals of d-bar m1 = q m2 and (d + i k) m2 = conj(q) m1.
  double lax_residual_1 = 0.0;
  double lax_residual_2 = 0.0;
  // ||r_+||_{H^{1/2}} / ||e_{-k} q||_{H^{-1/2}}.
  double hdot_half_ratio = 0.0;

  bool converged() const noexcept { return status == SolveStatus::converged; }
};

/// Jost functions at spectral parameter k: r = m_pm - 1 solves
/// r -/+ dbar^{-1}(e_{-k} q conj r) = +/- dbar^{-1}(e_{-k} q), and
/// m1 = (m_+ + m_-)/2, m2 = conj(e_k (m_+ - m_-)/2).
JostTriple jost_solve(const ComplexField& q, cplx k, const SolverConfig& cfg);

nlohmann::json diagnostics(const JostTriple& t);

struct ComplexLinearSolution {
  ComplexField m1_minus_one;
  double residual = 0.0;
  std::size_t iterations = 0;
  SolveStatus status = SolveStatus::converged;
};

/// A f = dbar^{-1}(e_{-k} q d^{-1}(e_k conj(q) f)) on the full lattice.
ComplexField jost_operator(const ComplexField& q, cplx k, const ComplexField& f);

/// m1 - 1 = (I - A)^{-1} A 1, solved with complex GMRES (or Neumann).
ComplexLinearSolution jost_solve_complexlinear(const ComplexField& q, cplx k, const SolverConfig& cfg);

/// Per-k workhorse used by the transform sweeps: solves the complex-linear
/// system on a fixed block for one k and returns m1 - 1 on that block.
class BoxJostSolver {
 public:
  BoxJostSolver(const ComplexField& q, const ActiveBox& box);

  const ActiveBox& box() const noexcept { return box_; }
  std::span<const cplx> potential() const noexcept { return q_; }
  /// Node position within the block.
  cplx point(std::size_t i) const noexcept;

  struct Result {
    CVector m1_minus_one;  // block-sized
    KrylovResult stats;
  };
  Result solve_m1(cplx k, const SolverConfig& cfg) const;
  /// m2 = e_{-k} d^{-1}(e_k conj(q) m1) on the block, given m1 - 1.
  CVector m2_from(cplx k, std::span<const cplx> m1_minus_one) const;

 private:
  Lattice lattice_;
  ActiveBox box_;
  CVector q_;
  std::shared_ptr<const class CauchyKernel> kernel_;
};

}  // namespace nlft
