#include "nlft/dbar_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "nlft/cauchy.hpp"
#include "nlft/norms.hpp"
#include "nlft/spectral.hpp"

namespace nlft {

const char* to_string(SolveStatus s) noexcept
{
  switch (s) {
    case SolveStatus::converged: return "converged";
    case SolveStatus::max_iterations: return "max_iterations";
    case SolveStatus::neumann_divergence: return "neumann_divergence";
  }
  return "unknown";
}

Method parse_method(const std::string& name)
{
  if (name == "krylov") return Method::krylov;
  if (name == "neumann") return Method::neumann;
  throw std::invalid_argument("unknown solver method '" + name + "' (expected krylov or neumann)");
}

const char* to_string(Method m) noexcept { return m == Method::krylov ? "krylov" : "neumann"; }

void SolverConfig::validate() const
{
  if (!(tol > 0.0 && tol < 1.0)) throw std::invalid_argument("solver tol must lie in (0, 1)");
  if (max_iter < 1) throw std::invalid_argument("solver max_iter must be >= 1");
  if (restart < 1) throw std::invalid_argument("solver restart must be >= 1");
}

nlohmann::json to_json(const SolverConfig& cfg)
{
  return {{"method", to_string(cfg.method)},
          {"tol", cfg.tol},
          {"max_iter", cfg.max_iter},
          {"restart", cfg.restart}};
}

ActiveBox active_box(std::initializer_list<const ComplexField*> fields, double threshold)
{
  if (fields.size() == 0) return {};
  const Lattice& l = (*fields.begin())->lattice();
  double peak = 0.0;
  for (const ComplexField* f : fields) {
    if (!f->lattice().same_geometry(l)) throw LatticeMismatch("active_box: fields on different lattices");
    for (const cplx& c : f->samples()) peak = std::max(peak, std::abs(c));
  }
  if (peak == 0.0) return {};
  const std::size_t n = l.n();
  std::size_t lo1 = n, hi1 = 0, lo2 = n, hi2 = 0;
  const double cut = threshold * peak;
  for (const ComplexField* f : fields)
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t j1 = 0; j1 < n; ++j1)
        if (std::abs((*f)(j1, j2)) > cut) {
          lo1 = std::min(lo1, j1);
          hi1 = std::max(hi1, j1);
          lo2 = std::min(lo2, j2);
          hi2 = std::max(hi2, j2);
        }
  const std::size_t size = std::max({hi1 - lo1 + 1, hi2 - lo2 + 1, std::size_t{2}});
  auto place = [&](std::size_t lo, std::size_t hi) {
    // Centre the block on the occupied range, then clamp into the lattice.
    const std::size_t mid = (lo + hi) / 2;
    const std::size_t half = size / 2;
    std::size_t o = mid >= half ? mid - half : 0;
    return std::min(o, n - size);
  };
  return {place(lo1, hi1), place(lo2, hi2), size};
}

ActiveBox active_box(const ComplexField& f, double threshold) { return active_box({&f}, threshold); }

CVector crop(const ComplexField& f, const ActiveBox& box)
{
  CVector out(box.count());
  for (std::size_t b2 = 0; b2 < box.size; ++b2)
    for (std::size_t b1 = 0; b1 < box.size; ++b1) out[b2 * box.size + b1] = f(box.o1 + b1, box.o2 + b2);
  return out;
}

namespace {

ComplexField embed(const Lattice& l, const ActiveBox& box, std::span<const cplx> v)
{
  CVector out(l.size(), cplx(0.0));
  for (std::size_t b2 = 0; b2 < box.size; ++b2)
    for (std::size_t b1 = 0; b1 < box.size; ++b1) out[l.index(box.o1 + b1, box.o2 + b2)] = v[b2 * box.size + b1];
  return {l, std::move(out)};
}

template <class Apply>
KrylovResult run_solver(const SolverConfig& cfg, bool real_linear, Apply&& apply, std::span<const cplx> b,
                        CVector& x)
{
  if (cfg.method == Method::neumann) return neumann(apply, b, x, cfg.tol, cfg.max_iter);
  if (real_linear) return gmres<double>(apply, b, x, cfg.tol, cfg.max_iter, cfg.restart);
  return gmres<cplx>(apply, b, x, cfg.tol, cfg.max_iter, cfg.restart);
}

ComplexField constant(const Lattice& l, cplx c) { return {l, CVector(l.size(), c)}; }

// Smooth cutoff equal to 1 (to roundoff) on the block and 0 near the lattice
// edge, used to take spectral derivatives of fields with slowly decaying tails.
// Each edge is an erfc step centred in the margin; its width balances the
// leakage at the block edge against the spectral tail at the Nyquist frequency.
ComplexField box_window(const Lattice& l, const ActiveBox& box)
{
  const std::size_t n = l.n();
  const double h = l.spacing();
  const double band = l.nyquist();
  auto profile = [&](std::size_t lo, std::size_t size) {
    const double a = l.coord(lo);
    const double b = l.coord(lo + size - 1);
    const double edge_l = l.coord(0), edge_r = l.coord(n - 1);
    const double half_l = std::max(h, 0.5 * (a - edge_l));
    const double half_r = std::max(h, 0.5 * (edge_r - b));
    const double sigma_l = std::sqrt(2.0 * half_l / band);
    const double sigma_r = std::sqrt(2.0 * half_r / band);
    RVector w(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = l.coord(j);
      w[j] = 0.5 * std::erfc(((a - half_l) - x) / sigma_l) * 0.5 * std::erfc((x - (b + half_r)) / sigma_r);
    }
    return w;
  };
  const RVector w1 = profile(box.o1, box.size);
  const RVector w2 = profile(box.o2, box.size);
  CVector v(l.size());
  for (std::size_t j2 = 0; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) v[l.index(j1, j2)] = w1[j1] * w2[j2];
  return {l, std::move(v)};
}

double ratio_or_abs(double num, double den) { return den > 0.0 ? num / den : num; }

}  // namespace

double lq_residual(const ComplexField& q, const ComplexField& u, const ComplexField& f)
{
  require_same_lattice(q, u, "lq_residual");
  require_same_lattice(q, f, "lq_residual");
  const ComplexField rhs = dbar_inv(f);
  const ComplexField lhs = u + dbar_inv(q * conj(u));
  return ratio_or_abs(l2(lhs - rhs), l2(rhs));
}

LqSolution solve_lq(const ComplexField& q, const ComplexField& f, const SolverConfig& cfg)
{
  cfg.validate();
  require_same_lattice(q, f, "solve_lq");
  const Lattice& l = q.lattice();
  const auto kernel = CauchyKernel::get(l.n(), l.spacing());
  const auto qs = q.samples();
  const std::size_t N = l.size();

  CVector b(N);
  kernel->dbar_inv(f.samples(), b);
  CVector tmp(N);
  auto apply = [&](std::span<const cplx> in, std::span<cplx> out) {
    for (std::size_t i = 0; i < N; ++i) tmp[i] = qs[i] * std::conj(in[i]);
    kernel->dbar_inv(tmp, tmp);
    for (std::size_t i = 0; i < N; ++i) out[i] = in[i] + tmp[i];
  };
  CVector x(N, cplx(0.0));
  const KrylovResult r = run_solver(cfg, true, apply, b, x);
  LqSolution out{ComplexField(l, std::move(x)), r.residual, r.iterations, r.status};
  return out;
}

JostTriple jost_solve(const ComplexField& q, cplx k, const SolverConfig& cfg)
{
  cfg.validate();
  const Lattice& l = q.lattice();
  const ActiveBox box = active_box(q);
  if (box.empty()) {
    JostTriple t{k, constant(l, 1.0), constant(l, 1.0), constant(l, 1.0), constant(l, 0.0)};
    return t;
  }
  const std::size_t B = box.count();
  const auto kernel = CauchyKernel::get(box.size, l.spacing());

  // a = e_{-k} q on the block.
  const ComplexField a_full = ek_modulate(q, k, -1);
  const CVector a = crop(a_full, box);
  CVector born(B);
  kernel->dbar_inv(a, born);

  CVector tmp(B);
  std::array<CVector, 2> r;
  std::array<KrylovResult, 2> stats;
  for (int idx = 0; idx < 2; ++idx) {
    const double sigma = idx == 0 ? 1.0 : -1.0;
    auto apply = [&](std::span<const cplx> in, std::span<cplx> out) {
      for (std::size_t i = 0; i < B; ++i) tmp[i] = a[i] * std::conj(in[i]);
      kernel->dbar_inv(tmp, tmp);
      for (std::size_t i = 0; i < B; ++i) out[i] = in[i] - sigma * tmp[i];
    };
    CVector b(B);
    for (std::size_t i = 0; i < B; ++i) b[i] = sigma * born[i];
    r[idx] = b;
    stats[idx] = run_solver(cfg, true, apply, b, r[idx]);
  }

  // Extend r to the whole lattice: r = sigma dbar^{-1}(e_{-k} q (1 + conj r)).
  std::array<ComplexField, 2> m = {constant(l, 1.0), constant(l, 1.0)};
  for (int idx = 0; idx < 2; ++idx) {
    const double sigma = idx == 0 ? 1.0 : -1.0;
    CVector src(B);
    for (std::size_t i = 0; i < B; ++i) src[i] = sigma * a[i] * (1.0 + std::conj(r[idx][i]));
    m[idx] = constant(l, 1.0) + dbar_inv(embed(l, box, src));
  }

  JostTriple t{k, m[0], m[1], 0.5 * (m[0] + m[1]), constant(l, 0.0)};
  {
    CVector m2(l.size());
    for (std::size_t i = 0; i < m2.size(); ++i)
      m2[i] = std::conj(ek(l.point(i), k) * 0.5 * (m[0][i] - m[1][i]));
    t.m2 = ComplexField(l, std::move(m2));
  }
  t.residual_plus = stats[0].residual;
  t.residual_minus = stats[1].residual;
  t.iterations = stats[0].iterations + stats[1].iterations;
  t.status = stats[0].status != SolveStatus::converged ? stats[0].status : stats[1].status;

  // Lax pair diagnostics on a window that is 1 on the support of q.
  const ComplexField chi = box_window(l, box);
  const ComplexField one = constant(l, 1.0);
  const ComplexField r1 = t.m1 - one;
  const ComplexField dbar_m1 = spectral_dbar(chi * r1) - r1 * spectral_dbar(chi);
  const ComplexField q_m2 = chi * (q * t.m2);
  t.lax_residual_1 = ratio_or_abs(l2(dbar_m1 - q_m2), l2(q_m2));
  const ComplexField del_m2 =
      spectral_del(chi * t.m2) - t.m2 * spectral_del(chi) + cplx(0.0, 1.0) * k * (chi * t.m2);
  const ComplexField qb_m1 = chi * (conj(q) * t.m1);
  t.lax_residual_2 = ratio_or_abs(l2(del_m2 - qb_m1), l2(qb_m1));

  const double src_norm = sobolev_norm(a_full, -0.5);
  t.hdot_half_ratio = ratio_or_abs(sobolev_norm(t.m_plus - one, 0.5), src_norm);
  return t;
}

nlohmann::json diagnostics(const JostTriple& t)
{
  return {{"k", {t.k.real(), t.k.imag()}},
          {"iters", t.iterations},
          {"status", to_string(t.status)},
          {"residual", std::max(t.residual_plus, t.residual_minus)},
          {"residual_plus", t.residual_plus},
          {"residual_minus", t.residual_minus},
          {"lax_residuals", {t.lax_residual_1, t.lax_residual_2}},
          {"hdot_half_ratio", t.hdot_half_ratio}};
}

ComplexField jost_operator(const ComplexField& q, cplx k, const ComplexField& f)
{
  require_same_lattice(q, f, "jost_operator");
  const ComplexField a = ek_modulate(q, k, -1);
  return dbar_inv(a * del_inv(conj(a) * f));
}

BoxJostSolver::BoxJostSolver(const ComplexField& q, const ActiveBox& box)
    : lattice_(q.lattice()), box_(box), q_(crop(q, box)), kernel_(CauchyKernel::get(box.size, q.lattice().spacing()))
{
  if (box.empty()) throw std::invalid_argument("BoxJostSolver: empty block");
}

cplx BoxJostSolver::point(std::size_t i) const noexcept
{
  return lattice_.point(box_.o1 + i % box_.size, box_.o2 + i / box_.size);
}

BoxJostSolver::Result BoxJostSolver::solve_m1(cplx k, const SolverConfig& cfg) const
{
  const std::size_t B = box_.count();
  CVector a(B);
  for (std::size_t i = 0; i < B; ++i) a[i] = ek(point(i), -k) * q_[i];
  CVector tmp(B);
  // A f = dbar^{-1}(a d^{-1}(conj(a) f)).
  auto A = [&](std::span<const cplx> in, std::span<cplx> out) {
    // d^{-1} g = conj(dbar^{-1} conj g).
    for (std::size_t i = 0; i < B; ++i) tmp[i] = a[i] * std::conj(in[i]);
    kernel_->dbar_inv(tmp, tmp);
    for (std::size_t i = 0; i < B; ++i) tmp[i] = a[i] * std::conj(tmp[i]);
    kernel_->dbar_inv(tmp, out);
  };
  CVector rhs(B, cplx(1.0));
  A(rhs, rhs);
  CVector w(B);
  auto apply = [&](std::span<const cplx> in, std::span<cplx> out) {
    A(in, w);
    for (std::size_t i = 0; i < B; ++i) out[i] = in[i] - w[i];
  };
  Result result{rhs, {}};
  result.stats = run_solver(cfg, false, apply, rhs, result.m1_minus_one);
  return result;
}

CVector BoxJostSolver::m2_from(cplx k, std::span<const cplx> m1_minus_one) const
{
  const std::size_t B = box_.count();
  CVector tmp(B);
  // d^{-1} g = conj(dbar^{-1} conj g), with g = e_k conj(q) m1.
  for (std::size_t i = 0; i < B; ++i)
    tmp[i] = std::conj(ek(point(i), k) * std::conj(q_[i]) * (1.0 + m1_minus_one[i]));
  kernel_->dbar_inv(tmp, tmp);
  for (std::size_t i = 0; i < B; ++i) tmp[i] = ek(point(i), -k) * std::conj(tmp[i]);
  return tmp;
}

ComplexLinearSolution jost_solve_complexlinear(const ComplexField& q, cplx k, const SolverConfig& cfg)
{
  cfg.validate();
  const Lattice& l = q.lattice();
  const ActiveBox box = active_box(q);
  if (box.empty()) return {constant(l, 0.0), 0.0, 0, SolveStatus::converged};
  const BoxJostSolver solver(q, box);
  const auto res = solver.solve_m1(k, cfg);
  // Off the block, m1 - 1 = dbar^{-1}(q m2) with q m2 supported on the block.
  const CVector m2 = solver.m2_from(k, res.m1_minus_one);
  CVector src(box.count());
  for (std::size_t i = 0; i < src.size(); ++i) src[i] = solver.potential()[i] * m2[i];
  return {dbar_inv(embed(l, box, src)), res.stats.residual, res.stats.iterations, res.stats.status};
}

}  // namespace nlft
