#include "nlft/cauchy.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "nlft/fft.hpp"

namespace nlft {

namespace {

CVector& scratch(std::size_t count)
{
  thread_local CVector buf;
  if (buf.size() < count) buf.resize(count);
  return buf;
}

}  // namespace

std::shared_ptr<const CauchyKernel> CauchyKernel::get(std::size_t box, double h)
{
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, double>, std::shared_ptr<const CauchyKernel>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{box, h}];
  if (!slot) slot = std::make_shared<const CauchyKernel>(box, h);
  return slot;
}

CauchyKernel::CauchyKernel(std::size_t box, double h)
    : box_(box), padded_(fft::good_size(2 * box - 1)), h_(h)
{
  if (box < 2) throw std::invalid_argument("Cauchy kernel block must have at least 2 nodes");

  // Oversampled grid on which the truncated symbol is sampled.
  const std::size_t M = fft::good_size(4 * box);
  const double R = std::sqrt(2.0) * static_cast<double>(box) * h;
  const double dxi = 2.0 * pi / (static_cast<double>(M) * h);
  CVector w(M * M);
  for (std::size_t s2 = 0; s2 < M; ++s2) {
    const double xi2 = dxi * static_cast<double>(fft::signed_index(s2, M));
    for (std::size_t s1 = 0; s1 < M; ++s1) {
      const double xi1 = dxi * static_cast<double>(fft::signed_index(s1, M));
      const double rho = std::hypot(xi1, xi2);
      cplx g = 0.0;
      if (rho > 0.0) g = cplx(0.0, -2.0) * (1.0 - std::cyl_bessel_j(0.0, rho * R)) / cplx(xi1, xi2);
      w[s2 * M + s1] = g;
    }
  }
  fft::transform2d(w.data(), M, fft::Direction::backward);
  const double inv_m2 = 1.0 / static_cast<double>(M * M);

  const std::size_t N = padded_;
  symbol_.assign(N * N, cplx(0.0));
  const long reach = static_cast<long>(box) - 1;
  for (long d2 = -reach; d2 <= reach; ++d2)
    for (long d1 = -reach; d1 <= reach; ++d1)
      symbol_[fft::slot(d2, N) * N + fft::slot(d1, N)] =
          w[fft::slot(d2, M) * M + fft::slot(d1, M)] * inv_m2;
  fft::transform2d(symbol_.data(), N, fft::Direction::forward);
  const double inv_n2 = 1.0 / static_cast<double>(N * N);
  for (cplx& c : symbol_) c *= inv_n2;
}

void CauchyKernel::dbar_inv(std::span<const cplx> in, std::span<cplx> out) const
{
  const std::size_t b = box_;
  const std::size_t N = padded_;
  CVector& buf = scratch(N * N);
  std::fill(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(N * N), cplx(0.0));
  for (std::size_t j2 = 0; j2 < b; ++j2)
    std::copy_n(in.data() + j2 * b, b, buf.data() + j2 * N);
  fft::transform2d(buf.data(), N, fft::Direction::forward);
  for (std::size_t i = 0; i < N * N; ++i) buf[i] *= symbol_[i];
  fft::transform2d(buf.data(), N, fft::Direction::backward);
  for (std::size_t j2 = 0; j2 < b; ++j2)
    std::copy_n(buf.data() + j2 * N, b, out.data() + j2 * b);
}

void CauchyKernel::del_inv(std::span<const cplx> in, std::span<cplx> out) const
{
  const std::size_t count = box_ * box_;
  CVector tmp(count);
  for (std::size_t i = 0; i < count; ++i) tmp[i] = std::conj(in[i]);
  dbar_inv(tmp, tmp);
  for (std::size_t i = 0; i < count; ++i) out[i] = std::conj(tmp[i]);
}

ComplexField dbar_inv(const ComplexField& f)
{
  auto kernel = CauchyKernel::get(f.n(), f.lattice().spacing());
  CVector out(f.size());
  kernel->dbar_inv(f.samples(), out);
  return {f.lattice(), std::move(out)};
}

ComplexField del_inv(const ComplexField& f)
{
  return conj(dbar_inv(conj(f)));
}

}  // namespace nlft
