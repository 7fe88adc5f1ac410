#pragma once

#include <cmath>
#include <filesystem>
#include <random>
#include <string>

#include "nlft/field.hpp"
#include "nlft/lattice.hpp"

namespace testing {

using nlft::cplx;
using nlft::pi;

inline nlft::Lattice grid(std::size_t n, double extent = 20.0) { return nlft::Lattice::position(n, extent / n); }

inline nlft::ComplexField gaussian(const nlft::Lattice& l, double a = 1.0, cplx c = 0.0)
{
  return nlft::ComplexField::from_function(l, [&](cplx z) { return cplx(a * std::exp(-std::norm(z - c))); });
}

inline std::filesystem::path scratch_dir(const std::string& tag)
{
  std::random_device rd;
  auto dir = std::filesystem::temp_directory_path() / ("nlft_" + tag + "_" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace testing
