#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "nlft/field.hpp"

namespace nlft {

enum class SolveStatus { converged, max_iterations, neumann_divergence };

const char* to_string(SolveStatus s) noexcept;

struct KrylovResult {
  SolveStatus status = SolveStatus::max_iterations;
  std::size_t iterations = 0;
  double residual = 0.0;  // ||b - A x|| / ||b||, recomputed from x
};

namespace detail {

template <class Scalar>
Scalar dot(std::span<const cplx> u, std::span<const cplx> v)
{
  cplx acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  if constexpr (std::is_same_v<Scalar, double>)
    return acc.real();
  else
    return acc;
}

inline double norm2(std::span<const cplx> u)
{
  double acc = 0.0;
  for (const cplx& c : u) acc += std::norm(c);
  return std::sqrt(acc);
}

template <class Scalar>
void givens(Scalar a, Scalar b, Scalar& c, Scalar& s)
{
  if constexpr (std::is_same_v<Scalar, double>) {
    const double r = std::hypot(a, b);
    if (r == 0.0) {
      c = 1.0;
      s = 0.0;
    } else {
      c = a / r;
      s = b / r;
    }
  } else {
    // Rotation [c s; -conj(s) c] with real c zeroing b against a.
    const double na = std::abs(a);
    const double r = std::hypot(na, std::abs(b));
    if (r == 0.0) {
      c = 1.0;
      s = 0.0;
    } else if (na == 0.0) {
      c = 0.0;
      s = std::conj(b) / std::abs(b);
    } else {
      c = na / r;
      s = (a / na) * std::conj(b) / r;
    }
  }
}

template <class Scalar>
Scalar conj_if(Scalar v)
{
  if constexpr (std::is_same_v<Scalar, double>)
    return v;
  else
    return std::conj(v);
}

}  // namespace detail

/// Restarted GMRES for A x = b over the scalar field `Scalar`.
///
/// Scalar = double treats C^N as R^{2N} with <u, v> = Re sum conj(u) v, which
/// is what a real-linear operator (one that involves conj) needs; Scalar = cplx
/// is ordinary complex GMRES. `apply(in, out)` writes A in into out. x holds the
/// initial guess on entry and the best iterate on exit.
template <class Scalar, class Apply>
KrylovResult gmres(Apply&& apply, std::span<const cplx> b, CVector& x, double tol, std::size_t max_iter,
                   std::size_t restart)
{
  const std::size_t N = b.size();
  KrylovResult result;
  const double bnorm = detail::norm2(b);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), cplx(0.0));
    result.status = SolveStatus::converged;
    return result;
  }
  restart = std::max<std::size_t>(1, std::min(restart, max_iter));

  // Basis vectors are allocated as the Krylov space grows.
  std::vector<CVector> V;
  V.reserve(restart + 1);
  V.emplace_back(N);
  std::vector<Scalar> H((restart + 1) * restart);
  std::vector<Scalar> cs(restart), sn(restart), g(restart + 1), y(restart);
  CVector w(N);

  auto residual_into = [&](CVector& r) {
    apply(std::span<const cplx>(x), std::span<cplx>(w));
    for (std::size_t i = 0; i < N; ++i) r[i] = b[i] - w[i];
    return detail::norm2(r);
  };

  double beta = residual_into(V[0]);
  std::size_t total = 0;
  while (beta / bnorm > tol && total < max_iter) {
    for (std::size_t i = 0; i < N; ++i) V[0][i] /= beta;
    std::fill(g.begin(), g.end(), Scalar(0));
    g[0] = beta;
    std::size_t k = 0;
    for (; k < restart && total < max_iter; ++k, ++total) {
      if (V.size() < k + 2) V.emplace_back(N);
      apply(std::span<const cplx>(V[k]), std::span<cplx>(V[k + 1]));
      // Modified Gram-Schmidt.
      for (std::size_t i = 0; i <= k; ++i) {
        const Scalar hik = detail::dot<Scalar>(V[i], V[k + 1]);
        H[i * restart + k] = hik;
        for (std::size_t t = 0; t < N; ++t) V[k + 1][t] -= hik * V[i][t];
      }
      const double hn = detail::norm2(V[k + 1]);
      H[(k + 1) * restart + k] = hn;
      if (hn > 0.0)
        for (std::size_t t = 0; t < N; ++t) V[k + 1][t] /= hn;
      for (std::size_t i = 0; i < k; ++i) {
        const Scalar a = H[i * restart + k];
        const Scalar c = H[(i + 1) * restart + k];
        H[i * restart + k] = cs[i] * a + sn[i] * c;
        H[(i + 1) * restart + k] = -detail::conj_if(sn[i]) * a + cs[i] * c;
      }
      detail::givens<Scalar>(H[k * restart + k], H[(k + 1) * restart + k], cs[k], sn[k]);
      H[k * restart + k] = cs[k] * H[k * restart + k] + sn[k] * H[(k + 1) * restart + k];
      H[(k + 1) * restart + k] = 0.0;
      g[k + 1] = -detail::conj_if(sn[k]) * g[k];
      g[k] = cs[k] * g[k];
      if (std::abs(g[k + 1]) / bnorm <= tol || hn == 0.0) {
        ++k;
        ++total;
        break;
      }
    }
    // Back substitution and update.
    for (std::size_t i = k; i-- > 0;) {
      Scalar acc = g[i];
      for (std::size_t j = i + 1; j < k; ++j) acc -= H[i * restart + j] * y[j];
      y[i] = acc / H[i * restart + i];
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t t = 0; t < N; ++t) x[t] += y[i] * V[i][t];
    beta = residual_into(V[0]);
  }
  result.iterations = total;
  result.residual = beta / bnorm;
  result.status = result.residual <= tol ? SolveStatus::converged : SolveStatus::max_iterations;
  return result;
}

/// Richardson / Neumann iteration x <- x + (b - A x). Flags divergence when the
/// residual grows over `patience` consecutive iterations and returns the best
/// iterate seen.
template <class Apply>
KrylovResult neumann(Apply&& apply, std::span<const cplx> b, CVector& x, double tol, std::size_t max_iter,
                     std::size_t patience = 10)
{
  const std::size_t N = b.size();
  KrylovResult result;
  const double bnorm = detail::norm2(b);
  if (bnorm == 0.0) {
    std::fill(x.begin(), x.end(), cplx(0.0));
    result.status = SolveStatus::converged;
    return result;
  }
  CVector w(N), r(N), best = x;
  double best_res = std::numeric_limits<double>::infinity();
  double prev = std::numeric_limits<double>::infinity();
  std::size_t growth = 0;
  for (std::size_t it = 0;; ++it) {
    apply(std::span<const cplx>(x), std::span<cplx>(w));
    for (std::size_t i = 0; i < N; ++i) r[i] = b[i] - w[i];
    const double res = detail::norm2(r) / bnorm;
    if (res < best_res) {
      best_res = res;
      best = x;
    }
    growth = res > prev ? growth + 1 : 0;
    prev = res;
    result.iterations = it;
    if (res <= tol) {
      result.status = SolveStatus::converged;
      break;
    }
    if (growth >= patience) {
      result.status = SolveStatus::neumann_divergence;
      break;
    }
    if (it >= max_iter) {
      result.status = SolveStatus::max_iterations;
      break;
    }
    for (std::size_t i = 0; i < N; ++i) x[i] += r[i];
  }
  x = std::move(best);
  result.residual = best_res;
  return result;
}

}  // namespace nlft
