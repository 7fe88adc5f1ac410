#include "nlft/report.hpp"

#include <cmath>
#include <limits>

namespace nlft {

void InequalityReport::add_trial(double trial_lhs, double trial_rhs)
{
  // A trial with rhs == 0 carries no constant; lhs > 0 there means the bound fails outright.
  double c = 0.0;
  if (trial_rhs > 0.0)
    c = trial_lhs / trial_rhs;
  else if (trial_lhs > 0.0)
    c = std::numeric_limits<double>::infinity();
  per_trial.push_back(c);
  const bool informative = trial_rhs > 0.0 || trial_lhs > 0.0;
  if (informative && (degenerate || per_trial.size() == 1 || c > constant)) {
    lhs = trial_lhs;
    rhs = trial_rhs;
    constant = c;
  }
  if (informative) {
    degenerate = false;
    ++informative_trials_;
    sum_ += c;
    mean = sum_ / static_cast<double>(informative_trials_);
  } else if (informative_trials_ == 0) {
    degenerate = true;
  }
}

void InequalityReport::set_grid(const Lattice& l)
{
  grid_n = l.n();
  grid_h = l.spacing();
}

bool InequalityReport::finite() const noexcept { return !degenerate && std::isfinite(constant); }

nlohmann::json to_json(const InequalityReport& r)
{
  nlohmann::json j = {{"name", r.name},
                      {"lhs", r.lhs},
                      {"rhs", r.rhs},
                      {"constant", r.degenerate ? nlohmann::json(nullptr) : nlohmann::json(r.constant)},
                      {"max", r.degenerate ? nlohmann::json(nullptr) : nlohmann::json(r.constant)},
                      {"mean", r.mean},
                      {"degenerate", r.degenerate},
                      {"grid", {{"n", r.grid_n}, {"h", r.grid_h}}},
                      {"seed", r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr)},
                      {"trials", r.per_trial.size()},
                      {"per_trial", r.per_trial}};
  return j;
}

double relative_change(double a, double b) noexcept
{
  return b != 0.0 ? std::abs(a - b) / std::abs(b) : std::abs(a);
}

}  // namespace nlft
