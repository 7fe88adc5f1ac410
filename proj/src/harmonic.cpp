#include "nlft/harmonic.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "nlft/cauchy.hpp"
#include "nlft/fft.hpp"
#include "nlft/norms.hpp"
#include "nlft/parallel.hpp"
#include "nlft/spectral.hpp"

namespace nlft {

ComplexField frac_power(const ComplexField& f, double s)
{
  return fourier_multiplier(
      f,
      [s](double xi1, double xi2) {
        const double r = std::hypot(xi1, xi2);
        return cplx(r > 0.0 ? std::pow(r, s) : 0.0, 0.0);
      },
      false);
}

ComplexField frac_laplacian(const ComplexField& f, double alpha)
{
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("frac_laplacian: alpha must lie in (0, 2)");
  return frac_power(f, -alpha);
}

ComplexField spectrum_field(const ComplexField& f)
{
  const std::size_t n = f.n();
  const CVector buf = ordinary_spectrum(f);
  const Lattice fl = Lattice::spectral(n, f.lattice().frequency_step());
  CVector v(fl.size());
  const long half = static_cast<long>(n / 2);
  for (std::size_t l2 = 0; l2 < n; ++l2)
    for (std::size_t l1 = 0; l1 < n; ++l1) {
      const std::size_t s1 = fft::slot(static_cast<long>(l1) - half, n);
      const std::size_t s2 = fft::slot(static_cast<long>(l2) - half, n);
      v[fl.index(l1, l2)] = buf[s2 * n + s1];
    }
  return {fl, std::move(v)};
}

std::pair<double, double> worst_ratio(std::span<const double> top, std::span<const double> bottom,
                                      std::span<const std::uint8_t> mask)
{
  if (top.size() != bottom.size() || (!mask.empty() && mask.size() != top.size()))
    throw std::invalid_argument("worst_ratio: size mismatch");
  double best_l = 0.0, best_r = 0.0, best_c = -1.0;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (!mask.empty() && !mask[i]) continue;
    const double l = std::abs(top[i]), r = bottom[i];
    if (r <= 0.0) {
      if (l > 0.0) return {l, 0.0};
      continue;
    }
    if (l / r > best_c) {
      best_c = l / r;
      best_l = l;
      best_r = r;
    }
  }
  return {best_l, best_r};
}

namespace {

std::vector<double> moduli(const ComplexField& f)
{
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(f[i]);
  return v;
}

std::vector<double> real_parts(const ComplexField& f)
{
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i].real();
  return v;
}

}  // namespace

void add_fractional_trial(FractionalAudit& audit, const ComplexField& f, double alpha, double lambda)
{
  if (!(lambda > 0.0)) throw std::invalid_argument("audit_fractional_bound: lambda must be positive");
  const std::vector<double> lhs = moduli(frac_laplacian(f, alpha));
  const std::vector<double> Mf = real_parts(maximal_function(f));
  const ComplexField Mspec = maximal_function(spectrum_field(f));
  const double M0 = Mspec(f.n() / 2, f.n() / 2).real();

  std::vector<double> rhs_a(lhs.size()), rhs_b(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    rhs_a[i] = std::pow(lambda, 2.0 - alpha) * M0 + std::pow(lambda, -alpha) * Mf[i];
    rhs_b[i] = std::pow(M0, alpha / 2.0) * std::pow(Mf[i], 1.0 - alpha / 2.0);
  }
  const auto [la, ra] = worst_ratio(lhs, rhs_a);
  audit.form_a.add_trial(la, ra);
  const auto [lb, rb] = worst_ratio(lhs, rhs_b);
  audit.form_b.add_trial(lb, rb);
}

FractionalAudit audit_fractional_bound(const ComplexField& f, double alpha, double lambda)
{
  FractionalAudit audit;
  audit.form_a.name = "|(-Delta)^{-a/2} f| <= c (l^{2-a} Mf^(0) + l^{-a} Mf)";
  audit.form_b.name = "|(-Delta)^{-a/2} f| <= c (Mf^(0))^{a/2} (Mf)^{1-a/2}";
  audit.form_a.set_grid(f.lattice());
  audit.form_b.set_grid(f.lattice());
  add_fractional_trial(audit, f, alpha, lambda);
  return audit;
}

SymbolField::SymbolField(Lattice xl, Lattice xil) : xl_(xl), xil_(xil)
{
  const double count = static_cast<double>(xl.size()) * static_cast<double>(xil.size());
  if (count > static_cast<double>(max_samples))
    throw std::invalid_argument("SymbolField: " + std::to_string(static_cast<unsigned long long>(count)) +
                                " samples exceed the 2^31 limit");
  data_.assign(xl.size() * xil.size(), cplx{});
}

ComplexField SymbolField::slice_field(std::size_t x) const
{
  const auto s = slice(x);
  return {xil_, CVector(s.begin(), s.end())};
}

ComplexField pdo_apply_spectral(const SymbolField& a, std::span<const cplx> fhat)
{
  const Lattice& xl = a.x_lattice();
  const Lattice& xil = a.xi_lattice();
  if (fhat.size() != xil.size()) throw LatticeMismatch("pdo_apply: spectrum does not match the symbol's xi lattice");
  const std::size_t n = xil.n();
  const double weight = xil.cell_area() / (4.0 * pi * pi);
  CVector out(xl.size());
  parallel_for(xl.size(), [&](std::size_t i) {
    const cplx x = xl.point(i);
    const auto s = a.slice(i);
    std::vector<cplx> w1(n), w2(n);
    for (std::size_t j = 0; j < n; ++j) {
      w1[j] = std::polar(1.0, x.real() * xil.coord(j));
      w2[j] = std::polar(1.0, x.imag() * xil.coord(j));
    }
    cplx total = 0.0;
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      cplx row = 0.0;
      for (std::size_t j1 = 0; j1 < n; ++j1) row += w1[j1] * s[j2 * n + j1] * fhat[j2 * n + j1];
      total += w2[j2] * row;
    }
    out[i] = weight * total;
  });
  return {xl, std::move(out)};
}

ComplexField pdo_apply(const SymbolField& a, const ComplexField& f)
{
  const Lattice& xil = a.xi_lattice();
  const double step = f.lattice().frequency_step();
  if (xil.n() != f.n() || std::abs(xil.spacing() - step) > 1e-12 * step)
    throw LatticeMismatch("pdo_apply: the symbol's xi lattice is not the frequency lattice of f");
  return pdo_apply_spectral(a, spectrum_field(f).samples());
}

namespace {

Lattice jost_xi_lattice(const Lattice& zl) { return Lattice::spectral(zl.n(), 2.0 * zl.spacing()); }

template <class F>
void for_each_xi_partner(std::size_t n, F&& body)
{
  for (std::size_t j2 = 1; j2 < n; ++j2)
    for (std::size_t j1 = 0; j1 < n; ++j1) body(j2 * n + j1, (n - j2) * n + j1);
}

}  // namespace

SymbolField jost_symbol(const ComplexField& q, const Lattice& kl, const SolverConfig& cfg)
{
  const std::size_t n = q.n();
  SymbolField a(kl, jost_xi_lattice(q.lattice()));
  parallel_for(kl.size(), [&](std::size_t i) {
    const auto sol = jost_solve_complexlinear(q, kl.point(i), cfg);
    auto slice = a.slice(i);
    for_each_xi_partner(n, [&](std::size_t xi, std::size_t z) { slice[xi] = sol.m1_minus_one[z]; });
  });
  return a;
}

CVector jost_symbol_spectrum(const ComplexField& q)
{
  CVector out(q.size());
  for_each_xi_partner(q.n(), [&](std::size_t xi, std::size_t z) { out[xi] = cplx(0.0, -pi) * std::conj(q[z]); });
  return out;
}

namespace {

std::vector<double> symbol_slice_norms(const SymbolField& a)
{
  std::vector<double> norms(a.x_lattice().size());
  parallel_for(norms.size(), [&](std::size_t i) { norms[i] = norm(frac_power(a.slice_field(i), 1.0), 4.0 / 3.0); });
  return norms;
}

double mixed_norm(const std::vector<double>& slice_norms, const Lattice& xl)
{
  double acc = 0.0;
  for (double v : slice_norms) acc += v * v * v * v;
  return std::pow(acc * xl.cell_area(), 0.25);
}

}  // namespace

double pdo_symbol_norm(const SymbolField& a) { return mixed_norm(symbol_slice_norms(a), a.x_lattice()); }

PdoAudit audit_pdo_bound(const SymbolField& a, std::span<const ComplexField> ensemble)
{
  const Lattice& xl = a.x_lattice();
  const std::vector<double> bnorm = symbol_slice_norms(a);
  const double mixed = mixed_norm(bnorm, xl);
  PdoAudit audit;
  audit.l2.name = "||a(x,D) f||_2 <= c ||f||_2 ||(-Delta_xi)^{1/2} a||_{L4 L4/3}";
  audit.pointwise.name = "|a(x,D) f(x)| <= c (Mf(x))^{1/2} ||(-Delta_xi)^{1/2} a(x,.)||_{4/3} ||f||_2^{1/2}";
  audit.l2.set_grid(a.xi_lattice());
  audit.pointwise.set_grid(a.xi_lattice());
  for (const ComplexField& f : ensemble) {
    const ComplexField g = pdo_apply(a, f);
    const double fn = l2(f);
    audit.l2.add_trial(l2(g), fn * mixed);

    const ComplexField Mf = maximal_function(f);
    const Lattice& fl = f.lattice();
    const double half = static_cast<double>(fl.n() / 2);
    auto nearest = [&](double c) {
      const double j = std::clamp(std::round(c / fl.spacing() + half), 0.0, static_cast<double>(fl.n() - 1));
      return static_cast<std::size_t>(j);
    };
    std::vector<double> top(xl.size()), bottom(xl.size());
    for (std::size_t i = 0; i < xl.size(); ++i) {
      const cplx x = xl.point(i);
      const double m = Mf(nearest(x.real()), nearest(x.imag())).real();
      top[i] = std::abs(g[i]);
      bottom[i] = std::sqrt(m) * bnorm[i] * std::sqrt(fn);
    }
    const auto [l, r] = worst_ratio(top, bottom);
    audit.pointwise.add_trial(l, r);
  }
  return audit;
}

void add_bilinear_trial(InequalityReport& report, const ComplexField& q, const ComplexField& u, double r, double p)
{
  const double lower = std::max(2.0, r > 0.0 ? 1.0 / r : infinity);
  const double upper = r > 0.0 ? 2.0 / r : infinity;
  const bool ok = r >= 0.0 && r < 1.0 && ((p >= lower && p < upper) || (r == 0.0 && p == infinity));
  if (!ok)
    throw std::invalid_argument("audit_bilinear_besov: need r in [0, 1) and p in [max(2, 1/r), 2/r), got r = " +
                                std::to_string(r) + ", p = " + std::to_string(p));
  require_same_lattice(q, u, "audit_bilinear_besov");
  const double lhs = sobolev_norm(q * u, -r);
  const double rhs = besov_norm(q, 2.0 / p - 2.0 * r, p) * sobolev_norm(u, r);
  report.add_trial(lhs, rhs);
}

InequalityReport audit_bilinear_besov(const ComplexField& q, const ComplexField& u, double r, double p)
{
  InequalityReport report;
  report.name = "||q u||_{H^-r} <= c ||q||_{B^{2/p-2r,p}_inf} ||u||_{H^r}";
  report.set_grid(q.lattice());
  add_bilinear_trial(report, q, u, r, p);
  return report;
}

void add_dbar_trial(InequalityReport& report, const ComplexField& q, const Lattice& kl, std::size_t stride)
{
  if (stride == 0) throw std::invalid_argument("audit_dbar_bound: stride must be positive");
  const ComplexField Mqhat = maximal_function(dft_paper(q, kl));
  const std::vector<double> Mq = real_parts(maximal_function(q));
  std::vector<std::size_t> nodes;
  for (std::size_t l2 = 0; l2 < kl.n(); l2 += stride)
    for (std::size_t l1 = 0; l1 < kl.n(); l1 += stride) nodes.push_back(kl.index(l1, l2));

  std::vector<std::pair<double, double>> worst(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    const cplx k = kl.point(nodes[i]);
    const std::vector<double> top = moduli(dbar_inv(ek_modulate(q, k, -1)));
    const double mk = Mqhat[nodes[i]].real();
    std::vector<double> bottom(top.size());
    for (std::size_t j = 0; j < top.size(); ++j) bottom[j] = std::sqrt(mk * Mq[j]);
    worst[i] = worst_ratio(top, bottom);
  });
  double best_c = -1.0;
  std::pair<double, double> pick{0.0, 0.0};
  for (const auto& [l, r] : worst) {
    const double c = r > 0.0 ? l / r : (l > 0.0 ? infinity : -1.0);
    if (c > best_c) {
      best_c = c;
      pick = {l, r};
    }
  }
  report.add_trial(pick.first, pick.second);
}

InequalityReport audit_dbar_bound(const ComplexField& q, const Lattice& kl, std::size_t stride)
{
  InequalityReport report;
  report.name = "|dbar^{-1}(e_{-k} q)(x)| <= c (Mq^(k))^{1/2} (Mq(x))^{1/2}";
  report.set_grid(q.lattice());
  add_dbar_trial(report, q, kl, stride);
  return report;
}

cplx RandomField::operator()(cplx z) const
{
  cplx total = 0.0;
  for (const Bump& b : bumps) {
    const cplx d = z - b.centre;
    const double phase = b.frequency.real() * d.real() + b.frequency.imag() * d.imag();
    total += b.amplitude * std::exp(-std::norm(d) / (b.width * b.width)) * cplx(std::cos(phase), std::sin(phase));
  }
  return total;
}

ComplexField RandomField::sample(const Lattice& l) const
{
  return ComplexField::from_function(l, [this](cplx z) { return (*this)(z); });
}

std::vector<RandomField> random_ensemble(std::size_t count, std::uint64_t seed, double spread, double max_frequency,
                                         std::size_t bumps)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<RandomField> out(count);
  const double scale = 1.0 / std::sqrt(static_cast<double>(bumps));
  for (RandomField& f : out) {
    f.bumps.resize(bumps);
    for (RandomField::Bump& b : f.bumps) {
      b.centre = {spread * (2.0 * unit(rng) - 1.0), spread * (2.0 * unit(rng) - 1.0)};
      b.width = 0.6 + 0.8 * unit(rng);
      b.frequency = std::polar(max_frequency * std::sqrt(unit(rng)), 2.0 * pi * unit(rng));
      b.amplitude = scale * cplx(gauss(rng), gauss(rng));
    }
  }
  return out;
}

}  // namespace nlft
