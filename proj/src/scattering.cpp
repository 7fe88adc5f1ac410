#include "nlft/scattering.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>

#include "nlft/harmonic.hpp"
#include "nlft/io.hpp"
#include "nlft/norms.hpp"
#include "nlft/parallel.hpp"

namespace nlft {

std::size_t ScatteringData::hole_count() const
{
  std::size_t c = 0;
  for (auto ok : converged) c += ok ? 0 : 1;
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> ScatteringData::holes() const
{
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = lattice().n();
  for (std::size_t i = 0; i < converged.size(); ++i)
    if (!converged[i]) out.emplace_back(i % m, i / m);
  return out;
}

double ScatteringData::converged_l2() const
{
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (converged[i]) acc += std::norm(s[i]);
  return std::sqrt(acc * lattice().cell_area());
}

ComplexField ScatteringData::filled() const
{
  if (hole_count() == 0) return s;
  const std::size_t m = lattice().n();
  CVector v = s.copy_samples();
  for (std::size_t l2 = 0; l2 < m; ++l2)
    for (std::size_t l1 = 0; l1 < m; ++l1) {
      const std::size_t i = l2 * m + l1;
      if (converged[i]) continue;
      cplx acc = 0.0;
      int count = 0;
      auto take = [&](std::size_t a, std::size_t b) {
        const std::size_t j = b * m + a;
        if (converged[j]) {
          acc += s[j];
          ++count;
        }
      };
      if (l1 > 0) take(l1 - 1, l2);
      if (l1 + 1 < m) take(l1 + 1, l2);
      if (l2 > 0) take(l1, l2 - 1);
      if (l2 + 1 < m) take(l1, l2 + 1);
      if (count > 0) v[i] = acc / static_cast<double>(count);
    }
  return {lattice(), std::move(v)};
}

nlohmann::json sidecar(const ScatteringData& d)
{
  nlohmann::json holes = nlohmann::json::array();
  for (auto [a, b] : d.holes()) holes.push_back({a, b});
  return {{"source_norm", d.source_norm},
          {"l2_norm", d.l2_norm},
          {"truncated_fraction", d.truncated_fraction},
          {"lattice", {{"n", d.lattice().n()}, {"spacing", d.lattice().spacing()},
                       {"domain", d.lattice().domain() == Domain::spectral ? "k" : "z"}}},
          {"holes", holes},
          {"config", to_json(d.config)}};
}

void save(const ScatteringData& d, const std::filesystem::path& stem)
{
  auto field = stem;
  field += ".nlf2";
  auto meta = stem;
  meta += ".json";
  io::write_field(field, d.s);
  io::write_text(meta, sidecar(d).dump(2) + "\n");
}

ScatteringData load_scattering(const std::filesystem::path& stem)
{
  auto field = stem;
  field += ".nlf2";
  auto meta = stem;
  meta += ".json";
  ScatteringData d{io::read_field(std::filesystem::exists(field) ? field : stem)};
  d.l2_norm = d.converged_l2();
  if (std::filesystem::exists(meta)) {
    std::ifstream in(meta);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("bad scattering sidecar " + meta.string() + ": " + e.what());
    }
    const std::size_t m = d.lattice().n();
    for (const auto& h : j.value("holes", nlohmann::json::array())) {
      const std::size_t a = h.at(0), b = h.at(1);
      if (a >= m || b >= m) throw FormatError("hole index outside lattice in " + meta.string());
      d.converged[b * m + a] = 0;
    }
    d.source_norm = j.value("source_norm", 0.0);
    d.l2_norm = d.converged_l2();
    d.truncated_fraction = j.value("truncated_fraction", 0.0);
    if (j.contains("config")) {
      const auto& c = j["config"];
      d.config.method = parse_method(c.value("method", "krylov"));
      d.config.tol = c.value("tol", d.config.tol);
      d.config.max_iter = c.value("max_iter", d.config.max_iter);
      d.config.restart = c.value("restart", d.config.restart);
    }
  }
  return d;
}

ScatteringData transform(const ComplexField& f, const Lattice& target, const SolverConfig& cfg, NyquistRule rule,
                         const Progress& progress)
{
  cfg.validate();
  const ComplexField born = conj(ek_transform(f, target, rule));
  const std::size_t m = target.n();
  CVector out = born.copy_samples();
  ScatteringData d{born};
  d.config = cfg;
  d.source_norm = l2(f);

  const ActiveBox box = active_box(f);
  if (!box.empty()) {
    const BoxJostSolver solver(f, box);
    const std::size_t B = box.count();
    CVector conj_f(B), pts(B);
    for (std::size_t i = 0; i < B; ++i) {
      conj_f[i] = std::conj(solver.potential()[i]);
      pts[i] = solver.point(i);
    }
    const cplx prefactor = cplx(0.0, -1.0 / pi) * f.lattice().cell_area();
    std::atomic<std::size_t> rows_done{0};
    std::mutex progress_mutex;
    parallel_for(m, [&](std::size_t l2) {
      for (std::size_t l1 = 0; l1 < m; ++l1) {
        const std::size_t idx = target.index(l1, l2);
        const cplx w = target.point(l1, l2);
        const auto res = solver.solve_m1(w, cfg);
        cplx acc = 0.0;
        for (std::size_t i = 0; i < B; ++i) acc += ek(pts[i], w) * conj_f[i] * res.m1_minus_one[i];
        out[idx] += prefactor * acc;
        d.residual[idx] = res.stats.residual;
        d.iterations[idx] = static_cast<std::uint32_t>(res.stats.iterations);
        d.converged[idx] = res.stats.status == SolveStatus::converged;
      }
      const std::size_t done = ++rows_done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(done, m);
      }
    });
  }
  d.s = ComplexField(target, std::move(out));
  d.l2_norm = d.converged_l2();
  const double rel = d.source_norm > 0.0 ? l2(born) / d.source_norm : 1.0;
  d.truncated_fraction = std::sqrt(std::max(0.0, 1.0 - rel * rel));
  return d;
}

ScatteringData forward(const ComplexField& q, const Lattice& kl, const SolverConfig& cfg, const Progress& progress)
{
  return transform(q, with_domain(kl, Domain::spectral), cfg, NyquistRule::strict, progress);
}

ComplexField inverse(const ScatteringData& s, const Lattice& zl, const SolverConfig& cfg, const Progress& progress)
{
  const std::size_t holes = s.hole_count();
  if (static_cast<double>(holes) > 0.01 * static_cast<double>(s.s.size()))
    throw ExcessiveHoles(std::to_string(holes) + " of " + std::to_string(s.s.size()) +
                         " spectral nodes failed to converge (limit 1%)");
  return transform(s.filled(), with_domain(zl, Domain::position), cfg, NyquistRule::inclusive, progress).s;
}

DifferenceResult difference_apply(const ComplexField& q1, const ComplexField& q2, const ComplexField& f,
                                  const Lattice& kl, const SolverConfig& cfg)
{
  cfg.validate();
  require_same_lattice(q1, q2, "difference_apply");
  require_same_lattice(q1, f, "difference_apply");
  const Lattice target = with_domain(kl, Domain::spectral);
  commensurate(q1.lattice(), target, NyquistRule::strict);
  const ActiveBox box = active_box({&q1, &q2, &f});
  const std::size_t m = target.n();
  CVector out(target.size(), cplx(0.0));
  if (box.empty()) return {ComplexField(target, std::move(out)), 0};

  const ComplexField q2bar = conj(q2);
  const BoxJostSolver first(q1, box);
  const BoxJostSolver second(q2bar, box);
  const CVector fb = crop(f, box);
  const std::size_t B = box.count();
  const cplx prefactor = cplx(0.0, -1.0 / pi) * q1.lattice().cell_area();
  std::vector<std::uint8_t> ok(target.size(), 1);

  parallel_for(m, [&](std::size_t l2) {
    for (std::size_t l1 = 0; l1 < m; ++l1) {
      const cplx k = target.point(l1, l2);
      const auto r1 = first.solve_m1(k, cfg);
      const auto r2 = second.solve_m1(-k, cfg);
      const CVector m2_1 = first.m2_from(k, r1.m1_minus_one);
      const CVector m2_2 = second.m2_from(-k, r2.m1_minus_one);
      cplx acc = 0.0;
      for (std::size_t i = 0; i < B; ++i) {
        const cplx a = std::conj(1.0 + r2.m1_minus_one[i]) * (1.0 + r1.m1_minus_one[i]);
        const cplx b = std::conj(m2_2[i]) * m2_1[i];
        acc += ek(first.point(i), k) * (std::conj(fb[i]) * a - fb[i] * b);
      }
      const std::size_t idx = target.index(l1, l2);
      out[idx] = prefactor * acc;
      ok[idx] = r1.stats.status == SolveStatus::converged && r2.stats.status == SolveStatus::converged;
    }
  });
  std::size_t holes = 0;
  for (auto v : ok) holes += v ? 0 : 1;
  return {ComplexField(target, std::move(out)), holes};
}

std::pair<InequalityReport, InequalityReport> pointwise_bound_report(const ComplexField& q, const ScatteringData& s)
{
  const Lattice& kl = s.lattice();
  const ComplexField qhat = dft_paper(q, kl);
  const ComplexField Mqhat = maximal_function(qhat);
  const ComplexField shat = ek_transform(s.s, with_domain(q.lattice(), Domain::position), NyquistRule::inclusive);
  const ComplexField Mshat = maximal_function(shat);

  auto moduli = [](const ComplexField& f) {
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::abs(f[i]);
    return v;
  };
  auto reals = [](const ComplexField& f) {
    std::vector<double> v(f.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i].real();
    return v;
  };

  InequalityReport forward_report, mirror_report;
  forward_report.name = "|s(k)| <= C M(q^)(k)";
  forward_report.set_grid(q.lattice());
  mirror_report.name = "|q(z)| <= C M(s^)(z)";
  mirror_report.set_grid(q.lattice());
  const auto [fl, fr] = worst_ratio(moduli(s.s), reals(Mqhat), s.converged);
  forward_report.add_trial(fl, fr);
  const auto [ml, mr] = worst_ratio(moduli(q), reals(Mshat));
  mirror_report.add_trial(ml, mr);
  return {forward_report, mirror_report};
}

}  // namespace nlft
