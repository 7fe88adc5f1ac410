#include "nlft/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlft/errors.hpp"
#include "nlft/io.hpp"

namespace nlft {

namespace {

const char* const kinds[] = {"gaussian", "shifted_gaussian", "complex_gaussian", "two_bump", "ring", "file"};

}

PotentialSpec PotentialSpec::from_json(const nlohmann::json& j)
{
  if (!j.is_object()) throw std::invalid_argument("potential must be an object");
  PotentialSpec p;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      p.kind = value.get<std::string>();
    } else if (key == "amplitude") {
      p.amplitude = value.get<double>();
    } else if (key == "width") {
      p.width = value.get<double>();
    } else if (key == "center") {
      if (!value.is_array() || value.size() != 2) throw std::invalid_argument("potential.center must be [x, y]");
      p.centre = {value[0].get<double>(), value[1].get<double>()};
    } else if (key == "chirp") {
      p.chirp = value.get<double>();
    } else if (key == "radius") {
      p.radius = value.get<double>();
    } else if (key == "path") {
      p.path = value.get<std::string>();
    } else {
      throw std::invalid_argument("unknown key potential." + key);
    }
  }
  if (std::find(std::begin(kinds), std::end(kinds), p.kind) == std::end(kinds))
    throw std::invalid_argument("unknown potential kind '" + p.kind + "'");
  if (!std::isfinite(p.amplitude)) throw std::invalid_argument("potential.amplitude must be finite");
  if (!(p.width > 0.0) || !(p.radius > 0.0)) throw std::invalid_argument("potential width and radius must be positive");
  if (p.kind == "file" && p.path.empty()) throw std::invalid_argument("potential kind 'file' needs a path");
  return p;
}

nlohmann::json PotentialSpec::to_json() const
{
  nlohmann::json j = {{"kind", kind},
                      {"amplitude", amplitude},
                      {"width", width},
                      {"center", {centre.real(), centre.imag()}},
                      {"chirp", chirp},
                      {"radius", radius}};
  if (!path.empty()) j["path"] = path;
  return j;
}

ComplexField make_potential(const PotentialSpec& p, const Lattice& zl)
{
  const double a = p.amplitude, w2 = p.width * p.width;
  if (p.kind == "gaussian")
    return ComplexField::from_function(zl, [&](cplx z) { return cplx(a * std::exp(-std::norm(z) / w2)); });
  if (p.kind == "shifted_gaussian")
    return ComplexField::from_function(zl, [&](cplx z) { return cplx(a * std::exp(-std::norm(z - p.centre) / w2)); });
  if (p.kind == "complex_gaussian")
    return ComplexField::from_function(
        zl, [&](cplx z) { return a * std::exp(-std::norm(z) / w2) * std::polar(1.0, p.chirp * std::norm(z)); });
  if (p.kind == "two_bump") {
    const double peak = 1.0 + std::exp(-4.0 * std::norm(p.centre) / w2);
    return ComplexField::from_function(zl, [&](cplx z) {
      return cplx(a * (std::exp(-std::norm(z - p.centre) / w2) + std::exp(-std::norm(z + p.centre) / w2)) / peak);
    });
  }
  if (p.kind == "ring") {
    const double r2 = p.radius * p.radius;
    return ComplexField::from_function(
        zl, [&](cplx z) { return cplx(a * std::norm(z) / r2 * std::exp(1.0 - std::norm(z) / r2)); });
  }
  if (p.kind == "file") {
    ComplexField f = io::read_field(p.path);
    if (!f.lattice().same_geometry(zl))
      throw LatticeMismatch("potential file " + p.path + " has n = " + std::to_string(f.n()) +
                            ", h = " + std::to_string(f.lattice().spacing()) + ", which differs from the grid");
    return a * retag(f, Domain::position);
  }
  throw std::invalid_argument("unknown potential kind '" + p.kind + "'");
}

std::vector<PotentialSpec> shape_ensemble(double amplitude)
{
  std::vector<PotentialSpec> out;
  for (const char* kind : {"gaussian", "shifted_gaussian", "complex_gaussian", "two_bump", "ring"}) {
    PotentialSpec p;
    p.kind = kind;
    p.amplitude = amplitude;
    out.push_back(p);
  }
  return out;
}

}  // namespace nlft
