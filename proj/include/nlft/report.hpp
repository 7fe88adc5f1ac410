#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nlft/lattice.hpp"

namespace nlft {

/// Outcome of checking lhs <= C rhs numerically: the observed C = lhs/rhs.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double constant = 0.0;  // worst (largest) constant over trials
  double mean = 0.0;      // mean constant over trials
  bool degenerate = false;  // rhs == 0, so no constant is defined
  std::size_t grid_n = 0;
  double grid_h = 0.0;
  std::optional<std::uint64_t> seed;
  std::vector<double> per_trial;

  /// Records one trial; the worst trial sets lhs, rhs and constant.
  void add_trial(double trial_lhs, double trial_rhs);
  void set_grid(const Lattice& l);
  bool finite() const noexcept;

 private:
  std::size_t informative_trials_ = 0;
  double sum_ = 0.0;
};

nlohmann::json to_json(const InequalityReport& r);

/// |a - b| / |b| (or |a| when b == 0).
double relative_change(double a, double b) noexcept;

}  // namespace nlft
