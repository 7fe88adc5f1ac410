#include "nlft/lattice.hpp"

#include <cmath>
#include <string>

#include "nlft/errors.hpp"

namespace nlft {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Lattice::Lattice(std::size_t n, double spacing, Domain domain)
    : n_(n), h_(spacing), domain_(domain)
{
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw std::invalid_argument("lattice spacing must be positive and finite");
  if (n < 8) throw std::invalid_argument("lattice needs at least 8 points per axis");
  if (domain == Domain::position && !is_power_of_two(n))
    throw std::invalid_argument("position lattice size must be a power of two, got " +
                                std::to_string(n));
  if (n % 2 != 0) throw std::invalid_argument("lattice size must be even");
}

}  // namespace nlft
