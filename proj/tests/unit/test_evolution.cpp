#include "common.hpp"
#include "doctest.h"
#include "nlft/errors.hpp"
#include "nlft/evolution.hpp"

using namespace nlft;
using testing::gaussian;
using testing::grid;

TEST_SUITE("evolution")
{
  TEST_CASE("linear propagator is unitary and invertible")
  {
    const ComplexField q = gaussian(grid(64), 1.0, cplx(0.5, 0.0));
    const ComplexField f = linear_propagate(q, 0.3);
    CHECK(l2(f) == doctest::Approx(l2(q)).epsilon(1e-13));
    CHECK(relative_l2(linear_propagate(f, -0.3), q) < 1e-13);
  }

  TEST_CASE("without coupling the split step is the linear flow")
  {
    EvolutionConfig ec;
    ec.coupling = 0.0;
    ec.dt = 5e-3;
    ec.kl = Lattice::spectral(32, pi / 20.0);
    const ComplexField q = gaussian(grid(64));
    const auto [qt, rep] = evolve_direct(q, 0.1, ec);
    CHECK(relative_l2(qt, linear_propagate(q, 0.1)) < 1e-12);
  }

  TEST_CASE("split step conserves mass")
  {
    EvolutionConfig ec;
    ec.dt = 5e-3;
    ec.kl = Lattice::spectral(32, pi / 20.0);
    const auto [qt, rep] = evolve_direct(gaussian(grid(64), 2.0), 0.1, ec);
    REQUIRE(rep.mass.size() >= 2);
    CHECK(std::abs(rep.mass.back() / rep.mass.front() - 1.0) < 1e-12);
    CHECK(rep.l4_accum.back() > 0.0);
  }

  TEST_CASE("split step is second order")
  {
    EvolutionConfig ec;
    ec.kl = Lattice::spectral(32, pi / 20.0);
    const ComplexField q = gaussian(grid(64), 2.0);
    ec.dt = 1e-3;
    const ComplexField ref = evolve_direct(q, 0.1, ec).first;
    ec.dt = 1e-2;
    const double e1 = relative_l2(evolve_direct(q, 0.1, ec).first, ref);
    ec.dt = 5e-3;
    const double e2 = relative_l2(evolve_direct(q, 0.1, ec).first, ref);
    CHECK(e1 / e2 > 3.0);
  }

  TEST_CASE("configuration checks")
  {
    EvolutionConfig ec;
    ec.dt = 1.0;
    CHECK_THROWS_AS(ec.validate(), CflViolation);
    ec.dt = -1.0;
    CHECK_THROWS_AS(ec.validate(), std::invalid_argument);
    ec.dt = 1e-3;
    ec.scheme = "euler";
    CHECK_THROWS_AS(ec.validate(), std::invalid_argument);
  }

  TEST_CASE("restriction needs an integer stride")
  {
    const ComplexField q = gaussian(grid(64));
    const ComplexField c = restrict_to(q, Lattice::position(32, 20.0 / 32));
    CHECK(c(16, 16) == q(32, 32));
    CHECK_THROWS_AS(restrict_to(q, Lattice::position(32, 0.5)), LatticeMismatch);
  }

  TEST_CASE("scattering phase keeps the modulus")
  {
    const ScatteringData s0(gaussian(Lattice::spectral(16, 0.2)));
    const ScatteringData s1 = evolve_scattering(s0, 0.7);
    for (std::size_t i = 0; i < s0.s.size(); ++i) CHECK(std::abs(s1.s[i]) == doctest::Approx(std::abs(s0.s[i])));
    CHECK(std::arg(s1.s(12, 8) / s0.s(12, 8)) ==
          doctest::Approx(std::remainder(4.0 * 0.7 * (std::pow(0.8, 2) - 0.0), 2 * pi)));
  }

  TEST_CASE("IST evolution of a small potential follows the linear flow")
  {
    EvolutionConfig ec;
    ec.kl = Lattice::spectral(32, pi / 20.0);
    ec.output = Lattice::position(32, 20.0 / 32);
    ec.dt = 5e-3;
    const ComplexField q = gaussian(grid(64), 0.05);
    const CrossValidation c = cross_validate(q, 0.1, ec);
    CHECK(c.discrepancy < 5e-3);
    CHECK(c.ist_vs_linear < 5e-3);
  }

  TEST_CASE("wave operator window is enforced")
  {
    EvolutionConfig ec;
    const ComplexField q = gaussian(grid(64), 0.5);
    const double w = dispersive_window(q);
    CHECK(w > 0.0);
    CHECK_THROWS_AS(wave_operator_check(q, {w * 2.0}, ec), WindowViolation);
    CHECK_THROWS_AS(wave_operator_check(q, {0.5, 0.2}, ec), std::invalid_argument);
  }
}
