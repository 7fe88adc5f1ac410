#include "nlft/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nlft/fft.hpp"
#include "nlft/spectral.hpp"

namespace nlft {

double norm(const ComplexField& f, double p)
{
  if (!(p >= 1.0)) throw std::invalid_argument("norm: p must be >= 1");
  const auto v = f.samples();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& c : v) m = std::max(m, std::abs(c));
    return m;
  }
  double acc = 0.0;
  if (p == 2.0) {
    for (const cplx& c : v) acc += std::norm(c);
    return std::sqrt(acc * f.lattice().cell_area());
  }
  for (const cplx& c : v) acc += std::pow(std::abs(c), p);
  return std::pow(acc * f.lattice().cell_area(), 1.0 / p);
}

double sobolev_norm(const ComplexField& f, double s)
{
  const CVector F = ordinary_spectrum(f);
  const std::size_t n = f.n();
  double acc = 0.0;
  for (std::size_t s2 = 0; s2 < n; ++s2) {
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      const auto [xi1, xi2] = frequency(f.lattice(), s1, s2);
      const double r2 = xi1 * xi1 + xi2 * xi2;
      double w = 1.0;
      if (s != 0.0) {
        if (r2 == 0.0) continue;
        w = std::pow(r2, s);
      }
      acc += w * std::norm(F[s2 * n + s1]);
    }
  }
  // (2 pi)^{-2} dxi^2 = 1/L^2.
  return std::sqrt(acc) / f.lattice().extent();
}

ShellRange resolved_shells(const Lattice& lattice)
{
  const double lo = lattice.frequency_step();
  // Largest |xi| off the Nyquist row and column.
  const double top = std::sqrt(2.0) * lattice.frequency_step() * static_cast<double>(lattice.n() / 2 - 1);
  // Shell j holds 2^{j-1} < |xi| <= 2^j.
  const int lowest = static_cast<int>(std::ceil(std::log2(lo) - 1e-12));
  const int highest = static_cast<int>(std::floor(std::log2(top) - 1e-12)) + 1;
  return {lowest, highest};
}

ComplexField lp_project(const ComplexField& f, int j)
{
  const ShellRange range = resolved_shells(f.lattice());
  if (j < range.lowest || j > range.highest)
    throw std::out_of_range("lp_project: shell " + std::to_string(j) + " outside resolved range [" +
                            std::to_string(range.lowest) + ", " + std::to_string(range.highest) + "]");
  const double inner = std::ldexp(1.0, j - 1);
  const double outer = std::ldexp(1.0, j);
  return fourier_multiplier(
      f,
      [&](double xi1, double xi2) {
        const double r = std::hypot(xi1, xi2);
        return (r > inner && r <= outer) ? 1.0 : 0.0;
      },
      true);
}

double besov_norm(const ComplexField& f, double s, double p)
{
  const ShellRange range = resolved_shells(f.lattice());
  double best = 0.0;
  for (int j = range.lowest; j <= range.highest; ++j)
    best = std::max(best, std::pow(2.0, j * s) * norm(lp_project(f, j), p));
  return best;
}

ComplexField maximal_function(const ComplexField& f)
{
  const std::size_t n = f.n();
  const std::size_t N = 2 * n;
  const double inv = 1.0 / static_cast<double>(N * N);

  CVector mag(N * N, cplx(0.0));
  CVector ones(N * N, cplx(0.0));
  for (std::size_t j2 = 0; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) {
      mag[j2 * N + j1] = std::abs(f(j1, j2));
      ones[j2 * N + j1] = 1.0;
    }
  fft::transform2d(mag.data(), N, fft::Direction::forward);
  fft::transform2d(ones.data(), N, fft::Direction::forward);

  CVector best(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) best[i] = std::abs(f[i]);

  CVector disc(N * N), sum(N * N), count(N * N);
  // Radius h 2^i in node units; i = 0 is the node alone.
  for (long radius = 2; radius <= static_cast<long>(n / 2); radius *= 2) {
    std::fill(disc.begin(), disc.end(), cplx(0.0));
    const long r2 = radius * radius;
    for (long d2 = -radius; d2 <= radius; ++d2)
      for (long d1 = -radius; d1 <= radius; ++d1)
        if (d1 * d1 + d2 * d2 < r2) disc[fft::slot(d2, N) * N + fft::slot(d1, N)] = 1.0;
    fft::transform2d(disc.data(), N, fft::Direction::forward);
    for (std::size_t i = 0; i < N * N; ++i) {
      sum[i] = mag[i] * disc[i];
      count[i] = ones[i] * disc[i];
    }
    fft::transform2d(sum.data(), N, fft::Direction::backward);
    fft::transform2d(count.data(), N, fft::Direction::backward);
    for (std::size_t j2 = 0; j2 < n; ++j2)
      for (std::size_t j1 = 0; j1 < n; ++j1) {
        const double c = std::round(count[j2 * N + j1].real() * inv);
        const double mean = std::max(0.0, sum[j2 * N + j1].real() * inv) / c;
        cplx& b = best[j2 * n + j1];
        b = std::max(b.real(), mean);
      }
  }
  return {f.lattice(), std::move(best)};
}

}  // namespace nlft
