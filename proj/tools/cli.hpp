#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlft/dbar_solver.hpp"
#include "nlft/lattice.hpp"
#include "nlft/potentials.hpp"

namespace nlft::cli {

enum ExitCode : int { ok = 0, failure = 1, config_error = 2, excessive_holes = 3, bad_input = 4 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvolutionSection {
  double t = 0.1;
  double dt = 1e-3;
  std::vector<double> times;
  std::string mode = "both";  // ist | direct | both | wave
  std::optional<std::size_t> output_n;
  double coupling = 8.0;
};

struct AuditSection {
  std::string which = "frac";  // frac | pdo | besov | pointwise | dbar
  double alpha = 1.0;
  double lambda = 1.0;
  double r = 0.5;
  double p = 3.0;
  std::size_t trials = 50;
  std::size_t stride = 4;
  std::string symbol = "smooth";  // smooth | jost
  std::size_t x_n = 16;
};

struct RunConfig {
  std::string command;
  std::size_t n = 256;
  double h = 20.0 / 256;
  std::size_t m = 64;
  double dk = pi / 20;
  PotentialSpec potential;
  SolverConfig solver;
  EvolutionSection evolution;
  AuditSection audit;
  std::vector<std::string> inputs;
  std::filesystem::path output_dir = "nlft_out";
  std::uint64_t seed = 0x5EED;

  Lattice grid() const { return Lattice::position(n, h); }
  Lattice kgrid() const { return Lattice::spectral(m, dk); }

  /// Strict parse: unknown keys, wrong types and bad values raise ConfigError.
  static RunConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Applies one "a.b.c=value" override; value is parsed as JSON when it
/// parses, otherwise taken as a string.
void apply_override(nlohmann::json& doc, const std::string& assignment);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes a parsed configuration for `command`.
int execute(const std::string& command, const RunConfig& cfg, std::ostream& out);

}  // namespace nlft::cli
