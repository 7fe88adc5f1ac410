#pragma once

#include <string>

#include "json.hpp"
#include "nlft/field.hpp"

namespace nlft {

/// Test potentials, each with unit peak modulus before scaling by `amplitude`.
///
///   gaussian          exp(-|z|^2 / width^2)
///   shifted_gaussian  exp(-|z - centre|^2 / width^2)
///   complex_gaussian  exp(-|z|^2 / width^2) exp(i chirp |z|^2)
///   two_bump          two gaussians at +-centre, scaled to unit value at the bumps
///   ring              (|z|/radius)^2 exp(1 - |z|^2/radius^2)
///   file              samples read from an NLF2 file on the requested lattice
struct PotentialSpec {
  std::string kind = "gaussian";
  double amplitude = 1.0;
  double width = 1.0;
  cplx centre{0.75, -0.5};
  double chirp = 0.5;
  double radius = 1.5;
  std::string path;

  /// Accepts {kind, amplitude, width, center: [x, y], chirp, radius, path};
  /// throws std::invalid_argument on unknown keys, kinds or bad values.
  static PotentialSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

ComplexField make_potential(const PotentialSpec& spec, const Lattice& zl);

/// The five shapes of the scattering ensemble at a common amplitude.
std::vector<PotentialSpec> shape_ensemble(double amplitude);

}  // namespace nlft
