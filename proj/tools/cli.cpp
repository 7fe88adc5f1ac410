#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include <fmt/format.h>

#include "nlft/errors.hpp"
#include "nlft/evolution.hpp"
#include "nlft/harmonic.hpp"
#include "nlft/io.hpp"
#include "nlft/norms.hpp"
#include "nlft/parallel.hpp"
#include "nlft/scattering.hpp"

namespace nlft::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed)
{
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      throw ConfigError("unknown key " + (where.empty() ? key : where + "." + key));
  }
}

template <class T>
void read(const json& obj, const char* key, const std::string& where, T& into)
{
  if (!obj.contains(key)) return;
  try {
    into = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad type for " + where + "." + key + ": got " + obj.at(key).dump());
  }
}

std::uint64_t parse_seed(const json& v)
{
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = v.get<std::string>();
      const auto value = std::stoull(s, &used, 0);
      if (used == s.size()) return value;
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("seed must be a non-negative integer or an integer string such as \"0x5EED\", got " + v.dump());
}

}  // namespace

RunConfig RunConfig::from_json(const json& j)
{
  check_keys(j, "", {"command", "grid", "kgrid", "potential", "solver", "evolution", "audit", "inputs", "output_dir",
                     "seed"});
  RunConfig c;
  read(j, "command", "config", c.command);
  if (j.contains("grid")) {
    check_keys(j["grid"], "grid", {"n", "h"});
    read(j["grid"], "n", "grid", c.n);
    read(j["grid"], "h", "grid", c.h);
  }
  if (j.contains("kgrid")) {
    check_keys(j["kgrid"], "kgrid", {"m", "dk"});
    read(j["kgrid"], "m", "kgrid", c.m);
    read(j["kgrid"], "dk", "kgrid", c.dk);
  }
  try {
    (void)c.grid();
    (void)c.kgrid();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("potential")) {
    try {
      c.potential = PotentialSpec::from_json(j["potential"]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    } catch (const json::exception& e) {
      throw ConfigError(std::string("potential: ") + e.what());
    }
  }
  if (j.contains("solver")) {
    const json& s = j["solver"];
    check_keys(s, "solver", {"tol", "max_iter", "restart", "method"});
    read(s, "tol", "solver", c.solver.tol);
    read(s, "max_iter", "solver", c.solver.max_iter);
    read(s, "restart", "solver", c.solver.restart);
    if (s.contains("method")) {
      std::string m;
      read(s, "method", "solver", m);
      try {
        c.solver.method = parse_method(m);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }
  try {
    c.solver.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("evolution")) {
    const json& e = j["evolution"];
    check_keys(e, "evolution", {"t", "dt", "times", "mode", "output_n", "coupling"});
    read(e, "t", "evolution", c.evolution.t);
    read(e, "dt", "evolution", c.evolution.dt);
    read(e, "times", "evolution", c.evolution.times);
    read(e, "mode", "evolution", c.evolution.mode);
    read(e, "coupling", "evolution", c.evolution.coupling);
    if (e.contains("output_n")) {
      std::size_t v = 0;
      read(e, "output_n", "evolution", v);
      c.evolution.output_n = v;
    }
    const auto& mode = c.evolution.mode;
    if (mode != "ist" && mode != "direct" && mode != "both" && mode != "wave")
      throw ConfigError("evolution.mode must be ist, direct, both or wave, got '" + mode + "'");
  }
  if (j.contains("audit")) {
    const json& a = j["audit"];
    check_keys(a, "audit", {"which", "alpha", "lambda", "r", "p", "trials", "stride", "symbol", "x_n"});
    read(a, "which", "audit", c.audit.which);
    read(a, "alpha", "audit", c.audit.alpha);
    read(a, "lambda", "audit", c.audit.lambda);
    read(a, "r", "audit", c.audit.r);
    read(a, "p", "audit", c.audit.p);
    read(a, "trials", "audit", c.audit.trials);
    read(a, "stride", "audit", c.audit.stride);
    read(a, "symbol", "audit", c.audit.symbol);
    read(a, "x_n", "audit", c.audit.x_n);
    const auto& w = c.audit.which;
    if (w != "frac" && w != "pdo" && w != "besov" && w != "pointwise" && w != "dbar")
      throw ConfigError("audit.which must be frac, pdo, besov, pointwise or dbar, got '" + w + "'");
    if (c.audit.symbol != "smooth" && c.audit.symbol != "jost")
      throw ConfigError("audit.symbol must be smooth or jost, got '" + c.audit.symbol + "'");
    if (c.audit.stride == 0) throw ConfigError("audit.stride must be positive");
  }
  read(j, "inputs", "config", c.inputs);
  if (j.contains("output_dir")) {
    std::string d;
    read(j, "output_dir", "config", d);
    c.output_dir = d;
  }
  if (j.contains("seed")) c.seed = parse_seed(j["seed"]);
  return c;
}

json RunConfig::to_json() const
{
  json e = {{"t", evolution.t},
            {"dt", evolution.dt},
            {"times", evolution.times},
            {"mode", evolution.mode},
            {"coupling", evolution.coupling}};
  if (evolution.output_n) e["output_n"] = *evolution.output_n;
  return {{"command", command},
          {"grid", {{"n", n}, {"h", h}}},
          {"kgrid", {{"m", m}, {"dk", dk}}},
          {"potential", potential.to_json()},
          {"solver", nlft::to_json(solver)},
          {"evolution", e},
          {"audit",
           {{"which", audit.which},
            {"alpha", audit.alpha},
            {"lambda", audit.lambda},
            {"r", audit.r},
            {"p", audit.p},
            {"trials", audit.trials},
            {"stride", audit.stride},
            {"symbol", audit.symbol},
            {"x_n", audit.x_n}}},
          {"inputs", inputs},
          {"output_dir", output_dir.string()},
          {"seed", seed}};
}

void apply_override(json& doc, const std::string& assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("--set expects key=value, got '" + assignment + "'");
  const std::string path = assignment.substr(0, eq), text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &doc;
  std::size_t start = 0;
  for (;;) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) throw ConfigError("--set: empty key segment in '" + path + "'");
    if (!node->is_object()) throw ConfigError("--set: '" + path + "' descends into a non-object");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    node = &(*node)[key];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

namespace {

void write_json(const fs::path& path, const json& j) { io::write_text(path, j.dump(2) + "\n"); }

fs::path prepare(const RunConfig& cfg)
{
  fs::create_directories(cfg.output_dir);
  return cfg.output_dir;
}

ComplexField load_field(const fs::path& path)
{
  if (!fs::exists(path)) throw InputError("input file " + path.string() + " does not exist");
  try {
    return io::read_field(path);
  } catch (const FormatError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ComplexField potential(const RunConfig& cfg)
{
  if (cfg.potential.kind == "file") {
    if (!fs::exists(cfg.potential.path)) throw InputError("potential file " + cfg.potential.path + " does not exist");
    try {
      return make_potential(cfg.potential, cfg.grid());
    } catch (const FormatError& e) {
      throw InputError(cfg.potential.path + ": " + e.what());
    } catch (const LatticeMismatch& e) {
      throw ConfigError(e.what());
    }
  }
  return make_potential(cfg.potential, cfg.grid());
}

std::string series_csv(const std::vector<const EvolutionReport*>& reports)
{
  std::string text = "method,t,mass,l4_accum\n";
  for (const EvolutionReport* r : reports)
    for (std::size_t i = 0; i < r->times.size(); ++i)
      text += fmt::format("{},{:.17g},{:.17g},{:.17g}\n", r->method, r->times[i], r->mass[i], r->l4_accum[i]);
  return text;
}

std::string time_tag(double t) { return fmt::format("t{:.6g}", t); }

int cmd_forward(const RunConfig& cfg, std::ostream& out)
{
  const ComplexField q = potential(cfg);
  const ScatteringData s = forward(q, cfg.kgrid(), cfg.solver);
  const fs::path dir = prepare(cfg);
  io::write_field(dir / "q.nlf2", q);
  io::write_csv(dir / "q.csv", q);
  save(s, dir / "s");
  io::write_csv(dir / "s.csv", s.s);
  const bool degenerate = s.source_norm == 0.0;
  const json report = {{"q_norm", s.source_norm},
                       {"s_norm", s.l2_norm},
                       {"ratio", degenerate ? json(nullptr) : json(s.l2_norm / s.source_norm)},
                       {"deficit", degenerate ? json(nullptr) : json(std::abs(s.l2_norm / s.source_norm - 1.0))},
                       {"holes", s.hole_count()},
                       {"truncated_fraction", s.truncated_fraction},
                       {"degenerate", degenerate}};
  write_json(dir / "plancherel.json", report);
  out << report.dump(2) << "\n";
  if (static_cast<double>(s.hole_count()) > 0.01 * static_cast<double>(s.s.size()))
    throw ExcessiveHoles(std::to_string(s.hole_count()) + " spectral nodes failed to converge");
  return ok;
}

int cmd_inverse(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.inputs.size() != 1) throw ConfigError("inverse needs exactly one entry in inputs (a scattering data stem)");
  const fs::path stem = cfg.inputs.front();
  fs::path field = stem;
  field += ".nlf2";
  if (!fs::exists(field) && !fs::exists(stem)) throw InputError("scattering data " + stem.string() + " not found");
  std::optional<ScatteringData> s;
  try {
    s = load_scattering(stem);
  } catch (const FormatError& e) {
    throw InputError(stem.string() + ": " + e.what());
  } catch (const json::exception& e) {
    throw InputError(stem.string() + ": bad sidecar: " + e.what());
  }
  const ComplexField q = inverse(*s, cfg.grid(), cfg.solver);
  const fs::path dir = prepare(cfg);
  io::write_field(dir / "q.nlf2", q);
  io::write_csv(dir / "q.csv", q);
  const double qn = l2(q), sn = s->converged_l2();
  const json report = {{"q_norm", qn},
                       {"s_norm", sn},
                       {"ratio", sn > 0.0 ? json(qn / sn) : json(nullptr)},
                       {"holes", s->hole_count()}};
  write_json(dir / "inverse.json", report);
  out << report.dump(2) << "\n";
  return ok;
}

EvolutionConfig evolution_config(const RunConfig& cfg)
{
  EvolutionConfig ec;
  ec.t_final = cfg.evolution.t;
  ec.dt = cfg.evolution.dt;
  ec.kl = cfg.kgrid();
  ec.cfg = cfg.solver;
  ec.coupling = cfg.evolution.coupling;
  if (cfg.evolution.output_n) {
    const std::size_t no = *cfg.evolution.output_n;
    try {
      ec.output = Lattice::position(no, cfg.grid().extent() / static_cast<double>(no));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("evolution.output_n: ") + e.what());
    }
  }
  try {
    ec.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return ec;
}

std::vector<double> snapshot_times(const RunConfig& cfg)
{
  std::vector<double> times = cfg.evolution.times;
  times.push_back(cfg.evolution.t);
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("evolution times must be finite and non-negative");
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out)
{
  const EvolutionConfig ec = evolution_config(cfg);
  const ComplexField q0 = potential(cfg);
  const std::string& mode = cfg.evolution.mode;
  const double t = cfg.evolution.t;

  if (mode == "wave") {
    if (cfg.evolution.times.empty()) throw ConfigError("evolution.mode = wave needs evolution.times");
    const WaveOperatorReport r = wave_operator_check(q0, cfg.evolution.times, ec);
    const fs::path dir = prepare(cfg);
    const json report = to_json(r);
    write_json(dir / "wave.json", report);
    std::string text = "t,distance\n";
    for (std::size_t i = 0; i < r.times.size(); ++i) text += fmt::format("{:.17g},{:.17g}\n", r.times[i], r.distance[i]);
    io::write_text(dir / "wave.csv", text);
    out << report.dump(2) << "\n";
    return ok;
  }

  if (mode == "both") {
    const CrossValidation c = cross_validate(q0, t, ec);
    const fs::path dir = prepare(cfg);
    io::write_field(dir / "q_ist.nlf2", c.ist);
    io::write_field(dir / "q_direct.nlf2", c.direct);
    io::write_csv(dir / "q_ist.csv", c.ist);
    io::write_csv(dir / "q_direct.csv", c.direct);
    io::write_text(dir / "series.csv", series_csv({&c.ist_report, &c.direct_report}));
    const json report = to_json(c);
    write_json(dir / "crossval.json", report);
    out << json{{"discrepancy", c.discrepancy},
                {"ist_vs_linear", c.ist_vs_linear},
                {"direct_vs_linear", c.direct_vs_linear}}
               .dump(2)
        << "\n";
    return ok;
  }

  const std::vector<double> times = snapshot_times(cfg);
  std::vector<ComplexField> snapshots;
  EvolutionReport report;
  if (mode == "ist") {
    snapshots = evolve_ist_series(q0, times, ec, &report);
  } else {
    report.method = "direct";
    ComplexField q = q0;
    double now = 0.0;
    for (double tau : times) {
      auto [next, seg] = evolve_direct(q, tau - now, ec);
      const std::size_t first = report.times.empty() ? 0 : 1;
      const double offset = report.l4_accum.empty() ? 0.0 : report.l4_accum.back();
      for (std::size_t i = first; i < seg.times.size(); ++i) {
        report.times.push_back(now + seg.times[i]);
        report.mass.push_back(seg.mass[i]);
        report.l4_accum.push_back(offset + seg.l4_accum[i]);
      }
      q = std::move(next);
      now = tau;
      snapshots.push_back(q);
    }
  }
  const fs::path dir = prepare(cfg);
  for (std::size_t i = 0; i < times.size(); ++i)
    io::write_field(dir / fmt::format("q_{}_{}.nlf2", mode, time_tag(times[i])), snapshots[i]);
  const ComplexField& last = snapshots[std::find(times.begin(), times.end(), t) - times.begin()];
  io::write_field(dir / ("q_" + mode + ".nlf2"), last);
  io::write_csv(dir / ("q_" + mode + ".csv"), last);
  io::write_text(dir / "series.csv", series_csv({&report}));
  const json j = to_json(report);
  write_json(dir / ("evolution_" + mode + ".json"), j);
  out << json{{"method", report.method},
              {"mass_initial", report.mass.front()},
              {"mass_final", report.mass.back()},
              {"l4_accum", report.l4_accum.back()}}
             .dump(2)
      << "\n";
  return ok;
}

std::vector<ComplexField> sample_ensemble(const RunConfig& cfg, const Lattice& l, std::size_t count)
{
  std::vector<ComplexField> out;
  for (const RandomField& f : random_ensemble(count, cfg.seed)) out.push_back(f.sample(l));
  return out;
}

json tagged(InequalityReport r, const std::string& label, std::optional<std::uint64_t> seed)
{
  r.seed = seed;
  json j = to_json(r);
  j["label"] = label;
  return j;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out)
{
  const AuditSection& a = cfg.audit;
  const Lattice zl = cfg.grid();
  const ComplexField q = potential(cfg);
  json reports = json::array();

  if (a.which == "frac") {
    const FractionalAudit single = audit_fractional_bound(q, a.alpha, a.lambda);
    reports.push_back(tagged(single.form_a, "potential/a", std::nullopt));
    reports.push_back(tagged(single.form_b, "potential/b", std::nullopt));
    if (a.trials > 0) {
      FractionalAudit ens;
      ens.form_a.name = single.form_a.name;
      ens.form_b.name = single.form_b.name;
      ens.form_a.set_grid(zl);
      ens.form_b.set_grid(zl);
      for (const ComplexField& f : sample_ensemble(cfg, zl, a.trials)) add_fractional_trial(ens, f, a.alpha, a.lambda);
      reports.push_back(tagged(ens.form_a, "ensemble/a", cfg.seed));
      reports.push_back(tagged(ens.form_b, "ensemble/b", cfg.seed));
    }
  } else if (a.which == "besov") {
    const ComplexField u = ComplexField::from_function(zl, [](cplx z) { return cplx(std::exp(-std::norm(z))); });
    reports.push_back(tagged(audit_bilinear_besov(q, u, a.r, a.p), "potential", std::nullopt));
    if (a.trials > 0) {
      InequalityReport ens;
      ens.name = reports.back()["name"].get<std::string>();
      ens.set_grid(zl);
      const auto fields = sample_ensemble(cfg, zl, 2 * a.trials);
      for (std::size_t i = 0; i < a.trials; ++i) add_bilinear_trial(ens, fields[2 * i], fields[2 * i + 1], a.r, a.p);
      reports.push_back(tagged(ens, "ensemble", cfg.seed));
    }
  } else if (a.which == "pointwise") {
    const ScatteringData s = forward(q, cfg.kgrid(), cfg.solver);
    const auto [fwd, mirror] = pointwise_bound_report(q, s);
    reports.push_back(tagged(fwd, "forward", std::nullopt));
    reports.push_back(tagged(mirror, "mirror", std::nullopt));
  } else if (a.which == "dbar") {
    reports.push_back(tagged(audit_dbar_bound(q, cfg.kgrid(), a.stride), "potential", std::nullopt));
    if (a.trials > 0) {
      InequalityReport ens;
      ens.name = reports.back()["name"].get<std::string>();
      ens.set_grid(zl);
      for (const ComplexField& f : sample_ensemble(cfg, zl, a.trials)) add_dbar_trial(ens, f, cfg.kgrid(), a.stride);
      reports.push_back(tagged(ens, "ensemble", cfg.seed));
    }
  } else {
    const std::size_t xn = a.x_n;
    std::optional<SymbolField> symbol;
    Lattice fl = zl;
    if (a.symbol == "smooth") {
      const Lattice xl = Lattice::position(xn, zl.extent() / (2.0 * static_cast<double>(xn)));
      const Lattice xil = Lattice::spectral(zl.n(), zl.frequency_step());
      symbol = SymbolField::from_function(xl, xil, [](cplx x, cplx xi) {
        return cplx(std::exp(-std::norm(xi) / 8.0) * (1.0 + 0.5 * std::exp(-std::norm(x))));
      });
    } else {
      symbol = jost_symbol(q, Lattice::spectral(xn, cfg.dk), cfg.solver);
      fl = Lattice::position(zl.n(), pi / (static_cast<double>(zl.n()) * zl.spacing()));
    }
    const auto fields = sample_ensemble(cfg, fl, a.trials);
    const PdoAudit r = audit_pdo_bound(*symbol, fields);
    reports.push_back(tagged(r.l2, a.symbol + "/l2", cfg.seed));
    reports.push_back(tagged(r.pointwise, a.symbol + "/pointwise", cfg.seed));
  }

  const fs::path dir = prepare(cfg);
  const json doc = {{"which", a.which}, {"reports", reports}};
  write_json(dir / ("audit_" + a.which + ".json"), doc);
  std::string text = "label,lhs,rhs,constant\n";
  for (const json& r : reports)
    text += fmt::format("{},{:.17g},{:.17g},{}\n", r["label"].get<std::string>(), r["lhs"].get<double>(),
                        r["rhs"].get<double>(), r["constant"].is_null() ? "" : fmt::format("{:.17g}", r["constant"].get<double>()));
  io::write_text(dir / ("audit_" + a.which + ".csv"), text);
  out << doc.dump(2) << "\n";
  return ok;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out)
{
  if (cfg.inputs.size() != 2) throw ConfigError("compare needs exactly two entries in inputs");
  const ComplexField a = load_field(cfg.inputs[0]);
  const ComplexField b = load_field(cfg.inputs[1]);
  if (!a.lattice().same_geometry(b.lattice()))
    throw ConfigError("compare: " + cfg.inputs[0] + " and " + cfg.inputs[1] + " are on different lattices");
  const ComplexField bb = retag(b, a.lattice().domain());
  const ComplexField d = a - bb;
  const json report = {{"a", cfg.inputs[0]},
                       {"b", cfg.inputs[1]},
                       {"n", a.n()},
                       {"h", a.lattice().spacing()},
                       {"max_abs_delta", norm(d, infinity)},
                       {"l2_delta", l2(d)},
                       {"relative_l2", relative_l2(a, bb)},
                       {"identical", norm(d, infinity) == 0.0}};
  const fs::path dir = prepare(cfg);
  write_json(dir / "compare.json", report);
  io::write_csv(dir / "delta.csv", d);
  out << report.dump(2) << "\n";
  return ok;
}

}  // namespace

int execute(const std::string& command, const RunConfig& cfg, std::ostream& out)
{
  if (!cfg.command.empty() && cfg.command != command)
    throw ConfigError("config is for command '" + cfg.command + "' but '" + command + "' was requested");
  if (command == "forward") return cmd_forward(cfg, out);
  if (command == "inverse") return cmd_inverse(cfg, out);
  if (command == "evolve") return cmd_evolve(cfg, out);
  if (command == "audit") return cmd_audit(cfg, out);
  if (command == "compare") return cmd_compare(cfg, out);
  throw ConfigError("unknown command '" + command + "'");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Nonlinear Fourier transform and defocusing DSII toolkit"};
  std::string command, config_path;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  app.add_option("command", command, "forward | inverse | evolve | audit | compare")
      ->required()
      ->check(CLI::IsMember({"forward", "inverse", "evolve", "audit", "compare"}));
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--set", overrides, "Override a config entry, e.g. --set grid.n=128");
  app.add_option("--threads", threads, "Worker thread cap (0 = all cores)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "nlft2d: " << e.what() << "\n";
    return config_error;
  }

  try {
    std::ifstream in(config_path);
    if (!in) throw ConfigError("cannot open config " + config_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ConfigError("config " + config_path + " is not valid JSON: " + e.what());
    }
    for (const std::string& o : overrides) apply_override(doc, o);
    const RunConfig cfg = RunConfig::from_json(doc);
    set_thread_limit(threads);
    return execute(command, cfg, out);
  } catch (const ConfigError& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const InputError& e) {
    err << "nlft2d: input error: " << e.what() << "\n";
    return bad_input;
  } catch (const FormatError& e) {
    err << "nlft2d: input error: " << e.what() << "\n";
    return bad_input;
  } catch (const ExcessiveHoles& e) {
    err << "nlft2d: " << e.what() << "\n";
    return excessive_holes;
  } catch (const CflViolation& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const WindowViolation& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const LatticeMismatch& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const NyquistViolation& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const IncommensurateLattices& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const std::invalid_argument& e) {
    err << "nlft2d: config error: " << e.what() << "\n";
    return config_error;
  } catch (const std::exception& e) {
    err << "nlft2d: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace nlft::cli
