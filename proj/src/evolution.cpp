#include "nlft/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlft/cauchy.hpp"
#include "nlft/fft.hpp"
#include "nlft/norms.hpp"
#include "nlft/parallel.hpp"

namespace nlft {

void EvolutionConfig::validate() const
{
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("evolution dt must be positive");
  if (!std::isfinite(t_final)) throw std::invalid_argument("evolution t_final must be finite");
  if (scheme != "strang") throw std::invalid_argument("unknown evolution scheme '" + scheme + "'");
  cfg.validate();
  const double kmax = static_cast<double>(kl.n() / 2) * kl.spacing();
  const double fastest = 4.0 * kmax * kmax;
  if (dt * fastest > pi / 4.0 * (1.0 + 1e-12))
    throw CflViolation("dt = " + std::to_string(dt) + " exceeds pi/4 / max|xi1^2 - xi2^2| = " +
                       std::to_string(pi / 4.0 / fastest) + " on the spectral band");
}

nlohmann::json to_json(const EvolutionReport& r)
{
  return {{"method", r.method}, {"times", r.times},  {"mass", r.mass}, {"l4_accum", r.l4_accum},
          {"holes", r.holes},   {"max_residual", r.max_residual}};
}

ComplexField linear_propagate(const ComplexField& q0, double t)
{
  if (t == 0.0) return q0;
  return fourier_multiplier(
      q0,
      [t](double xi1, double xi2) {
        const double phase = -t * (xi1 * xi1 - xi2 * xi2);
        return cplx(std::cos(phase), std::sin(phase));
      },
      false);
}

ScatteringData evolve_scattering(const ScatteringData& s0, double t)
{
  ScatteringData out = s0;
  const Lattice& kl = s0.lattice();
  CVector v = s0.s.copy_samples();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const cplx k = kl.point(i);
    const double phase = 4.0 * (k.real() * k.real() - k.imag() * k.imag()) * t;
    v[i] *= cplx(std::cos(phase), std::sin(phase));
  }
  out.s = ComplexField(kl, std::move(v));
  out.l2_norm = out.converged_l2();
  return out;
}

namespace {

double l4_power(const ComplexField& q)
{
  const double v = norm(q, 4.0);
  return v * v * v * v;
}

void record(EvolutionReport& r, double t, const ComplexField& q, double& last_power)
{
  const double p = l4_power(q);
  if (r.times.empty())
    r.l4_accum.push_back(0.0);
  else
    r.l4_accum.push_back(r.l4_accum.back() + 0.5 * (t - r.times.back()) * (p + last_power));
  r.times.push_back(t);
  r.mass.push_back(l2(q));
  last_power = p;
}

}  // namespace

std::vector<ComplexField> evolve_ist_series(const ComplexField& q0, const std::vector<double>& times,
                                            const EvolutionConfig& ec, EvolutionReport* report,
                                            const ScatteringData* precomputed)
{
  ec.validate();
  const Lattice out_lattice = ec.output.value_or(q0.lattice());
  const ScatteringData s0 = precomputed ? *precomputed : forward(q0, ec.kl, ec.cfg);
  std::vector<ComplexField> out;
  EvolutionReport local;
  local.method = "ist";
  local.holes = s0.hole_count();
  for (double r : s0.residual) local.max_residual = std::max(local.max_residual, r);
  double last = 0.0;
  record(local, 0.0, q0, last);
  for (double t : times) {
    out.push_back(inverse(evolve_scattering(s0, t), out_lattice, ec.cfg));
    record(local, t, out.back(), last);
  }
  if (report) *report = std::move(local);
  return out;
}

std::pair<ComplexField, EvolutionReport> evolve_ist(const ComplexField& q0, double t, const EvolutionConfig& ec,
                                                    const ScatteringData* precomputed)
{
  EvolutionReport report;
  auto fields = evolve_ist_series(q0, {t}, ec, &report, precomputed);
  return {std::move(fields.front()), std::move(report)};
}

std::pair<ComplexField, EvolutionReport> evolve_direct(const ComplexField& q0, double t, const EvolutionConfig& ec)
{
  ec.validate();
  const Lattice& l = q0.lattice();
  const std::size_t n = l.n();
  const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(t) / ec.dt - 1e-9)));
  const double tau = t / static_cast<double>(steps);

  CVector linear(l.size()), shape(l.size());
  for (std::size_t s2 = 0; s2 < n; ++s2)
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      const auto [xi1, xi2] = frequency(l, s1, s2);
      const double d = xi1 * xi1 - xi2 * xi2;
      const double r2 = xi1 * xi1 + xi2 * xi2;
      linear[s2 * n + s1] = std::polar(1.0 / static_cast<double>(n * n), -tau * d);
      shape[s2 * n + s1] = r2 > 0.0 ? d / r2 / static_cast<double>(n * n) : 0.0;
    }

  CVector q = q0.copy_samples();
  CVector rho(l.size());
  auto nonlinear = [&](double step) {
    for (std::size_t i = 0; i < q.size(); ++i) rho[i] = std::norm(q[i]);
    fft::transform2d(rho.data(), n, fft::Direction::forward);
    for (std::size_t i = 0; i < q.size(); ++i) rho[i] *= shape[i];
    fft::transform2d(rho.data(), n, fft::Direction::backward);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] *= std::polar(1.0, -ec.coupling * step * rho[i].real());
  };

  EvolutionReport report;
  report.method = "direct";
  double last = 0.0;
  record(report, 0.0, q0, last);
  for (std::size_t step = 0; step < steps; ++step) {
    nonlinear(0.5 * tau);
    fft::transform2d(q.data(), n, fft::Direction::forward);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] *= linear[i];
    fft::transform2d(q.data(), n, fft::Direction::backward);
    nonlinear(0.5 * tau);
    record(report, tau * static_cast<double>(step + 1), ComplexField(l, q), last);
  }
  return {ComplexField(l, std::move(q)), std::move(report)};
}

ComplexField restrict_to(const ComplexField& f, const Lattice& coarse)
{
  const Lattice& fine = f.lattice();
  const double ratio = coarse.spacing() / fine.spacing();
  const double stride = std::round(ratio);
  if (stride < 1.0 || std::abs(ratio - stride) > 1e-9 * ratio)
    throw LatticeMismatch("restrict_to: coarse spacing is not an integer multiple of the fine spacing");
  const long s = static_cast<long>(stride);
  const long half_f = static_cast<long>(fine.n() / 2), half_c = static_cast<long>(coarse.n() / 2);
  if ((half_c)*s > half_f) throw LatticeMismatch("restrict_to: coarse lattice extends beyond the fine lattice");
  CVector v(coarse.size());
  for (std::size_t l2 = 0; l2 < coarse.n(); ++l2)
    for (std::size_t l1 = 0; l1 < coarse.n(); ++l1) {
      const auto j1 = static_cast<std::size_t>(half_f + (static_cast<long>(l1) - half_c) * s);
      const auto j2 = static_cast<std::size_t>(half_f + (static_cast<long>(l2) - half_c) * s);
      v[coarse.index(l1, l2)] = f(j1, j2);
    }
  return {with_domain(coarse, fine.domain()), std::move(v)};
}

nlohmann::json to_json(const CrossValidation& c)
{
  return {{"discrepancy", c.discrepancy},
          {"ist_vs_linear", c.ist_vs_linear},
          {"direct_vs_linear", c.direct_vs_linear},
          {"ist", to_json(c.ist_report)},
          {"direct", to_json(c.direct_report)}};
}

CrossValidation cross_validate(const ComplexField& q0, double t, const EvolutionConfig& ec,
                               const ScatteringData* precomputed)
{
  auto [ist, ist_report] = evolve_ist(q0, t, ec, precomputed);
  auto [direct, direct_report] = evolve_direct(q0, t, ec);
  const ComplexField direct_c = restrict_to(direct, ist.lattice());
  const ComplexField linear_c = restrict_to(linear_propagate(q0, t), ist.lattice());
  const double discrepancy = relative_l2(ist, direct_c);
  const double ist_vs_linear = relative_l2(ist, linear_c);
  const double direct_vs_linear = relative_l2(direct_c, linear_c);
  return {ist, direct_c, discrepancy, ist_vs_linear, direct_vs_linear, std::move(ist_report), std::move(direct_report)};
}

double dispersive_window(const ComplexField& q0)
{
  const CVector F = ordinary_spectrum(q0);
  const std::size_t n = q0.n();
  double num = 0.0, den = 0.0;
  for (std::size_t s2 = 0; s2 < n; ++s2)
    for (std::size_t s1 = 0; s1 < n; ++s1) {
      const auto [xi1, xi2] = frequency(q0.lattice(), s1, s2);
      const double w = std::norm(F[s2 * n + s1]);
      num += (xi1 * xi1 + xi2 * xi2) * w;
      den += w;
    }
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  const double speed = 2.0 * std::sqrt(num / den);
  return q0.lattice().extent() / (4.0 * speed);
}

nlohmann::json to_json(const WaveOperatorReport& r)
{
  return {{"times", r.times}, {"distance", r.distance}, {"non_increasing", r.non_increasing}, {"window", r.window}};
}

WaveOperatorReport wave_operator_check(const ComplexField& q0, const std::vector<double>& times,
                                       const EvolutionConfig& ec, const ScatteringData* precomputed)
{
  ec.validate();
  WaveOperatorReport r;
  r.window = dispersive_window(q0);
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || (i > 0 && times[i] <= times[i - 1]))
      throw std::invalid_argument("wave_operator_check: times must be positive and increasing");
  }
  if (!times.empty() && times.back() >= r.window)
    throw WindowViolation("time " + std::to_string(times.back()) + " reaches the wrap-around window " +
                          std::to_string(r.window));
  const Lattice zl = with_domain(q0.lattice(), Domain::position);
  const ScatteringData s0 = precomputed ? *precomputed : forward(q0, ec.kl, ec.cfg);
  const ComplexField q_plus = conj(ek_transform(s0.filled(), zl, NyquistRule::inclusive));

  ComplexField q = q0;
  double now = 0.0;
  for (double t : times) {
    q = evolve_direct(q, t - now, ec).first;
    now = t;
    r.times.push_back(t);
    r.distance.push_back(l2(linear_propagate(q, -t) - q_plus));
  }
  for (std::size_t i = 1; i < r.distance.size(); ++i)
    if (r.distance[i] > r.distance[i - 1]) r.non_increasing = false;
  return r;
}

double linear_phase_l4(const std::function<cplx(cplx)>& s0, double t, const DecayQuadrature& quad)
{
  if (!(t > 0.0)) throw std::invalid_argument("linear_phase_l4: t must be positive");
  // Radius holding the part of s0 that matters for an L^4 norm.
  double peak = 0.0;
  const int probes = 400;
  std::vector<double> radial(probes + 1);
  for (int i = 0; i <= probes; ++i) {
    const double r = quad.k_radius * i / probes;
    radial[i] = std::max({std::abs(s0(cplx(r, 0))), std::abs(s0(cplx(0, r))), std::abs(s0(cplx(-r, 0))),
                          std::abs(s0(cplx(0, -r)))});
    peak = std::max(peak, radial[i]);
  }
  double support = 0.0;
  for (int i = 0; i <= probes; ++i)
    if (radial[i] > 1e-2 * peak) support = quad.k_radius * i / probes;

  // Stationary points sit at k = -z / (2t).
  const double zmax = 2.0 * t * support + quad.z_margin;
  const double fastest = 2.0 * zmax + 4.0 * t * support + 8.0;
  std::size_t m = static_cast<std::size_t>(std::ceil(2.0 * quad.k_radius * 1.2 * fastest / pi));
  m += m % 2;
  const double dk = 2.0 * quad.k_radius / static_cast<double>(m);
  const Lattice kl = Lattice::spectral(m, dk);
  const auto kernel = CauchyKernel::get(m, dk);

  CVector base(kl.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    const cplx k = kl.point(i);
    const double phase = 2.0 * t * (k.real() * k.real() - k.imag() * k.imag());
    base[i] = s0(k) * cplx(std::cos(phase), std::sin(phase));
  }

  const double zstep = quad.z_step * std::sqrt(t);
  const long half = static_cast<long>(std::ceil(zmax / zstep));
  const std::size_t side = static_cast<std::size_t>(2 * half + 1);
  std::vector<double> row_sums(side, 0.0);
  parallel_for(side, [&](std::size_t r2) {
    CVector work(kl.size());
    const double x2 = zstep * (static_cast<double>(r2) - static_cast<double>(half));
    double acc = 0.0;
    for (std::size_t r1 = 0; r1 < side; ++r1) {
      const double x1 = zstep * (static_cast<double>(r1) - static_cast<double>(half));
      const cplx z(x1, x2);
      for (std::size_t i = 0; i < work.size(); ++i) work[i] = ek(z, kl.point(i)) * base[i];
      kernel->dbar_inv(work, work);
      for (const cplx& c : work) {
        const double a = std::norm(c);
        acc += a * a;
      }
    }
    row_sums[r2] = acc;
  });
  double total = 0.0;
  for (double v : row_sums) total += v;
  return std::pow(total * kl.cell_area() * zstep * zstep, 0.25);
}

DecayFit fit_linear_phase_decay(const std::function<cplx(cplx)>& s0, const std::vector<double>& times,
                                const DecayQuadrature& quad)
{
  if (times.size() < 2) throw std::invalid_argument("fit_linear_phase_decay: need at least two times");
  DecayFit fit;
  fit.times = times;
  for (double t : times) fit.norms.push_back(linear_phase_l4(s0, t, quad));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double N = static_cast<double>(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double x = std::log(times[i]), y = std::log(fit.norms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  fit.exponent = (N * sxy - sx * sy) / (N * sxx - sx * sx);
  return fit;
}

nlohmann::json to_json(const DecayFit& f)
{
  return {{"times", f.times}, {"norms", f.norms}, {"exponent", f.exponent}};
}

}  // namespace nlft
