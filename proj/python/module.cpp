#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "nlft/cauchy.hpp"
#include "nlft/errors.hpp"
#include "nlft/evolution.hpp"
#include "nlft/harmonic.hpp"
#include "nlft/io.hpp"
#include "nlft/norms.hpp"
#include "nlft/parallel.hpp"
#include "nlft/potentials.hpp"
#include "nlft/scattering.hpp"
#include "nlft/spectral.hpp"

namespace py = pybind11;
using namespace nlft;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

Domain parse_domain(const std::string& d)
{
  if (d == "z" || d == "position") return Domain::position;
  if (d == "k" || d == "spectral") return Domain::spectral;
  throw std::invalid_argument("domain must be 'z' or 'k', got '" + d + "'");
}

ComplexField field_from_array(const CArray& a, double spacing, const std::string& domain)
{
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw std::invalid_argument("expected a square 2-D array");
  const Lattice l(static_cast<std::size_t>(a.shape(0)), spacing, parse_domain(domain));
  CVector v(a.data(), a.data() + a.size());
  return {l, std::move(v)};
}

CArray field_to_array(const ComplexField& f)
{
  CArray out({f.n(), f.n()});
  std::copy(f.samples().begin(), f.samples().end(), out.mutable_data());
  return out;
}

std::vector<double> axis(const Lattice& l)
{
  std::vector<double> x(l.n());
  for (std::size_t j = 0; j < l.n(); ++j) x[j] = l.coord(j);
  return x;
}

}  // namespace

PYBIND11_MODULE(_nlft, m)
{
  m.doc() = "Two-dimensional nonlinear Fourier transform and defocusing DSII solvers";

  py::register_exception<LatticeMismatch>(m, "LatticeMismatch", PyExc_ValueError);
  py::register_exception<NyquistViolation>(m, "NyquistViolation", PyExc_ValueError);
  py::register_exception<IncommensurateLattices>(m, "IncommensurateLattices", PyExc_ValueError);
  py::register_exception<ExcessiveHoles>(m, "ExcessiveHoles", PyExc_RuntimeError);
  py::register_exception<CflViolation>(m, "CflViolation", PyExc_ValueError);
  py::register_exception<WindowViolation>(m, "WindowViolation", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_IOError);

  py::class_<Lattice>(m, "Lattice")
      .def(py::init([](std::size_t n, double spacing, const std::string& domain) {
             return Lattice(n, spacing, parse_domain(domain));
           }),
           py::arg("n"), py::arg("spacing"), py::arg("domain") = "z")
      .def_property_readonly("n", &Lattice::n)
      .def_property_readonly("spacing", &Lattice::spacing)
      .def_property_readonly("extent", &Lattice::extent)
      .def_property_readonly("domain", [](const Lattice& l) { return l.domain() == Domain::position ? "z" : "k"; })
      .def_property_readonly("axis", &axis)
      .def("__repr__", [](const Lattice& l) {
        return "Lattice(n=" + std::to_string(l.n()) + ", spacing=" + std::to_string(l.spacing()) + ")";
      });

  py::class_<ComplexField>(m, "Field")
      .def(py::init(&field_from_array), py::arg("samples"), py::arg("spacing"), py::arg("domain") = "z")
      .def_property_readonly("lattice", &ComplexField::lattice)
      .def_property_readonly("n", &ComplexField::n)
      .def("numpy", &field_to_array)
      .def("l2", [](const ComplexField& f) { return l2(f); })
      .def("norm", [](const ComplexField& f, double p) { return norm(f, p); }, py::arg("p"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init([](double tol, std::size_t max_iter, std::size_t restart, const std::string& method) {
             SolverConfig c;
             c.tol = tol;
             c.max_iter = max_iter;
             c.restart = restart;
             c.method = parse_method(method);
             c.validate();
             return c;
           }),
           py::arg("tol") = 1e-8, py::arg("max_iter") = 600, py::arg("restart") = 60, py::arg("method") = "krylov")
      .def_readonly("tol", &SolverConfig::tol)
      .def_readonly("max_iter", &SolverConfig::max_iter)
      .def_readonly("restart", &SolverConfig::restart);

  py::class_<ScatteringData>(m, "ScatteringData")
      .def_property_readonly("s", [](const ScatteringData& d) { return d.s; })
      .def_readonly("source_norm", &ScatteringData::source_norm)
      .def_readonly("l2_norm", &ScatteringData::l2_norm)
      .def_readonly("truncated_fraction", &ScatteringData::truncated_fraction)
      .def_property_readonly("holes", &ScatteringData::hole_count)
      .def("filled", &ScatteringData::filled)
      .def("save", [](const ScatteringData& d, const std::filesystem::path& stem) { save(d, stem); });

  m.def("position_lattice", &Lattice::position, py::arg("n"), py::arg("h"));
  m.def("spectral_lattice", &Lattice::spectral, py::arg("m"), py::arg("dk"));
  m.def("load_scattering", &load_scattering, py::arg("stem"));
  m.def("read_field", &io::read_field, py::arg("path"));
  m.def("write_field", &io::write_field, py::arg("path"), py::arg("field"));

  m.def(
      "potential",
      [](const Lattice& zl, const std::string& kind, double amplitude) {
        PotentialSpec s;
        s.kind = kind;
        s.amplitude = amplitude;
        return make_potential(s, zl);
      },
      py::arg("lattice"), py::arg("kind") = "gaussian", py::arg("amplitude") = 1.0);

  m.def(
      "ek_transform",
      [](const ComplexField& f, const Lattice& target, bool inclusive) {
        return ek_transform(f, target, inclusive ? NyquistRule::inclusive : NyquistRule::strict);
      },
      py::arg("field"), py::arg("target"), py::arg("inclusive") = false);
  m.def("dbar_inv", py::overload_cast<const ComplexField&>(&dbar_inv), py::arg("field"));
  m.def("maximal_function", &maximal_function, py::arg("field"));
  m.def("sobolev_norm", &sobolev_norm, py::arg("field"), py::arg("s"));
  m.def("besov_norm", &besov_norm, py::arg("field"), py::arg("s"), py::arg("p"));

  m.def(
      "forward",
      [](const ComplexField& q, const Lattice& kl, const SolverConfig& cfg) {
        py::gil_scoped_release release;
        return forward(q, kl, cfg);
      },
      py::arg("q"), py::arg("kl"), py::arg("cfg") = SolverConfig{});
  m.def(
      "inverse",
      [](const ScatteringData& s, const Lattice& zl, const SolverConfig& cfg) {
        py::gil_scoped_release release;
        return inverse(s, zl, cfg);
      },
      py::arg("s"), py::arg("zl"), py::arg("cfg") = SolverConfig{});

  m.def("linear_propagate", &linear_propagate, py::arg("q0"), py::arg("t"));
  m.def(
      "evolve_direct",
      [](const ComplexField& q0, double t, double dt, const Lattice& kl, double coupling) {
        EvolutionConfig ec;
        ec.t_final = t;
        ec.dt = dt;
        ec.kl = kl;
        ec.coupling = coupling;
        py::gil_scoped_release release;
        auto [q, report] = evolve_direct(q0, t, ec);
        return std::make_tuple(q, report.times, report.mass);
      },
      py::arg("q0"), py::arg("t"), py::arg("dt"), py::arg("kl"), py::arg("coupling") = EvolutionConfig{}.coupling);

  m.def("set_threads", &set_thread_limit, py::arg("n"));
}
