#include "common.hpp"
#include "doctest.h"
#include "nlft/errors.hpp"
#include "nlft/scattering.hpp"
#include "nlft/spectral.hpp"

using namespace nlft;
using testing::gaussian;
using testing::grid;

namespace {

const Lattice kl = Lattice::spectral(32, pi / 20.0);
const Lattice wide = Lattice::spectral(48, pi / 20.0);

}

TEST_SUITE("scattering")
{
  TEST_CASE("zero potential has zero scattering data")
  {
    const ScatteringData s = forward(ComplexField(grid(64)), kl, SolverConfig{});
    CHECK(s.l2_norm == 0.0);
    CHECK(s.hole_count() == 0);
  }

  TEST_CASE("small potentials scatter to the conjugate linear transform")
  {
    const Lattice zl = grid(64);
    const double eps = 1e-2;
    const ComplexField q = gaussian(zl, eps, cplx(0.5, 0.25));
    const ScatteringData s = forward(q, kl, SolverConfig{});
    const ComplexField born = conj(ek_transform(q, kl, NyquistRule::strict));
    CHECK(relative_l2(s.s, born) < 1e-3);
  }

  TEST_CASE("forward transform preserves the L2 norm")
  {
    const ComplexField q = gaussian(grid(64), 0.5);
    const ScatteringData s = forward(q, wide, SolverConfig{});
    CHECK(s.hole_count() == 0);
    CHECK(s.truncated_fraction < 1e-3);
    CHECK(std::abs(s.l2_norm / s.source_norm - 1.0) < 1e-3);
  }

  TEST_CASE("inverse recovers the potential")
  {
    const Lattice zl = grid(64);
    const ComplexField q = gaussian(zl, 0.5, cplx(0.25, 0.0));
    const ScatteringData s = forward(q, wide, SolverConfig{});
    const ComplexField back = inverse(s, Lattice::position(32, 20.0 / 32), SolverConfig{});
    const ComplexField ref = gaussian(back.lattice(), 0.5, cplx(0.25, 0.0));
    CHECK(relative_l2(back, ref) < 1e-3);
  }

  TEST_CASE("scattering data survive save and load")
  {
    const ScatteringData s = forward(gaussian(grid(32), 0.3), Lattice::spectral(16, pi / 20.0), SolverConfig{});
    const auto dir = testing::scratch_dir("scat");
    save(s, dir / "s");
    const ScatteringData back = load_scattering(dir / "s");
    CHECK(relative_l2(back.s, s.s) == 0.0);
    CHECK(back.source_norm == s.source_norm);
    CHECK(back.hole_count() == s.hole_count());
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("starved solver produces holes and refuses to invert")
  {
    SolverConfig cfg;
    cfg.tol = 1e-14;
    cfg.max_iter = 1;
    cfg.restart = 1;
    const ScatteringData s = forward(gaussian(grid(32), 2.0), Lattice::spectral(16, pi / 20.0), cfg);
    REQUIRE(s.hole_count() > 0);
    CHECK(s.filled().size() == s.s.size());
    CHECK_THROWS_AS(inverse(s, grid(32), SolverConfig{}), ExcessiveHoles);
  }

  TEST_CASE("pointwise bound report is finite")
  {
    const ComplexField q = gaussian(grid(64), 1.0);
    const ScatteringData s = forward(q, kl, SolverConfig{});
    const auto [fwd, mirror] = pointwise_bound_report(q, s);
    CHECK(fwd.finite());
    CHECK(mirror.finite());
    CHECK(fwd.constant > 0.0);
  }
}
