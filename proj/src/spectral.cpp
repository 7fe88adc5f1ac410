#include "nlft/spectral.hpp"

#include <cmath>
#include <string>

namespace nlft {

Commensuration commensurate(const Lattice& source, const Lattice& target, NyquistRule rule)
{
  const double n = static_cast<double>(source.n());
  const double h = source.spacing();
  const double b = target.spacing();
  // Highest target frequency 2 (m/2) b against the source band pi/h.
  const double reach = 2.0 * static_cast<double>(target.n() / 2) * b;
  const double band = source.nyquist();
  const double slack = 1e-12 * band;
  const bool inside = rule == NyquistRule::strict ? reach < band - slack : reach <= band + slack;
  if (!inside)
    throw NyquistViolation("target lattice reaches frequency " + std::to_string(reach) +
                           " beyond the source band " + std::to_string(band));
  for (std::size_t P = 1; P <= 64; ++P) {
    const double c = b * static_cast<double>(P) * n * h / pi;
    const double rounded = std::round(c);
    if (rounded >= 1.0 && std::abs(c - rounded) <= 1e-9 * std::max(1.0, c)) {
      Commensuration out;
      out.padding = P;
      out.stride = static_cast<long>(rounded);
      out.dft_size = P * source.n();
      return out;
    }
  }
  throw IncommensurateLattices("target spacing " + std::to_string(b) +
                               " is not commensurate with source lattice (n=" +
                               std::to_string(source.n()) + ", h=" + std::to_string(h) + ")");
}

ComplexField ek_transform(const ComplexField& f, const Lattice& target, NyquistRule rule)
{
  const Lattice& src = f.lattice();
  const Commensuration cm = commensurate(src, target, rule);
  const std::size_t n = src.n();
  const std::size_t N = cm.dft_size;

  CVector buf(N * N, cplx(0.0));
  for (std::size_t j2 = 0; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) buf[j2 * N + j1] = f(j1, j2);
  fft::transform2d(buf.data(), N, fft::Direction::forward);

  // Source node j sits at (j - n/2) h, so each DFT bin picks up e^{i pi n p / N}.
  const double centring = pi * static_cast<double>(n) / static_cast<double>(N);
  const cplx prefactor = cplx(0.0, 1.0 / pi) * src.cell_area();
  const std::size_t m = target.n();
  const long half = static_cast<long>(m / 2);

  CVector out(target.size());
  for (std::size_t l2 = 0; l2 < m; ++l2) {
    const long p2 = -cm.stride * (static_cast<long>(l2) - half);
    for (std::size_t l1 = 0; l1 < m; ++l1) {
      const long p1 = cm.stride * (static_cast<long>(l1) - half);
      const double phase = centring * static_cast<double>(p1 + p2);
      const cplx value = buf[fft::slot(p2, N) * N + fft::slot(p1, N)];
      out[target.index(l1, l2)] = prefactor * value * cplx(std::cos(phase), std::sin(phase));
    }
  }
  return {target, std::move(out)};
}

ComplexField dft_paper(const ComplexField& q, const Lattice& kl)
{
  return ek_transform(q, kl, NyquistRule::strict);
}

ComplexField idft_paper(const ComplexField& s, const Lattice& zl)
{
  // -(i/pi) int e_k(z) s(k) dk = conj((i/pi) int e_{-z}(k) conj(s(k)) dk).
  return conj(ek_transform(conj(s), zl, NyquistRule::inclusive));
}

ComplexField ek_modulate(const ComplexField& f, cplx k, int sign)
{
  const cplx kk = sign >= 0 ? k : -k;
  CVector out(f.size());
  const Lattice& l = f.lattice();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f[i] * ek(l.point(i), kk);
  return {l, std::move(out)};
}

namespace {

// (-1)^(p1+p2) for FFT slots of an even-length transform.
double centring_sign(std::size_t s1, std::size_t s2) { return ((s1 + s2) % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

CVector ordinary_spectrum(const ComplexField& f)
{
  const std::size_t n = f.n();
  CVector buf = f.copy_samples();
  fft::transform2d(buf.data(), n, fft::Direction::forward);
  const double area = f.lattice().cell_area();
  for (std::size_t s2 = 0; s2 < n; ++s2)
    for (std::size_t s1 = 0; s1 < n; ++s1) buf[s2 * n + s1] *= area * centring_sign(s1, s2);
  return buf;
}

CVector ordinary_inverse(std::span<const cplx> spectrum, const Lattice& lattice)
{
  const std::size_t n = lattice.n();
  if (spectrum.size() != lattice.size()) throw LatticeMismatch("ordinary_inverse: size mismatch");
  CVector buf(spectrum.begin(), spectrum.end());
  for (std::size_t s2 = 0; s2 < n; ++s2)
    for (std::size_t s1 = 0; s1 < n; ++s1) buf[s2 * n + s1] *= centring_sign(s1, s2);
  fft::transform2d(buf.data(), n, fft::Direction::backward);
  const double scale = 1.0 / (lattice.extent() * lattice.extent());
  for (cplx& c : buf) c *= scale;
  return buf;
}

ComplexField spectral_dbar(const ComplexField& f)
{
  return fourier_multiplier(
      f, [](double xi1, double xi2) { return cplx(0.0, 0.5) * cplx(xi1, xi2); }, true);
}

ComplexField spectral_del(const ComplexField& f)
{
  return fourier_multiplier(
      f, [](double xi1, double xi2) { return cplx(0.0, 0.5) * cplx(xi1, -xi2); }, true);
}

}  // namespace nlft
