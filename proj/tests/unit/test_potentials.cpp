#include "common.hpp"
#include "doctest.h"
#include "nlft/errors.hpp"
#include "nlft/io.hpp"
#include "nlft/norms.hpp"
#include "nlft/potentials.hpp"

using namespace nlft;
using testing::grid;

TEST_SUITE("potentials")
{
  TEST_CASE("strict specification parsing")
  {
    const auto spec = PotentialSpec::from_json({{"kind", "ring"}, {"amplitude", 2.0}, {"radius", 1.0}});
    CHECK(spec.kind == "ring");
    CHECK(spec.amplitude == 2.0);
    CHECK_THROWS_AS(PotentialSpec::from_json({{"kind", "ring"}, {"colour", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_potential(PotentialSpec::from_json({{"kind", "square"}}), grid(16)), std::invalid_argument);
    const auto round = PotentialSpec::from_json(spec.to_json());
    CHECK(round.radius == spec.radius);
  }

  TEST_CASE("shapes")
  {
    const Lattice l = grid(64);
    for (const PotentialSpec& s : shape_ensemble(1.0)) {
      const ComplexField q = make_potential(s, l);
      CAPTURE(s.kind);
      CHECK(norm(q, 2.0) > 0.1);
    }
    PotentialSpec ring;
    ring.kind = "ring";
    const ComplexField r = make_potential(ring, l);
    CHECK(std::abs(r(32, 32)) == 0.0);
    PotentialSpec two;
    two.kind = "two_bump";
    const ComplexField t = make_potential(two, l);
    CHECK(std::abs(t(32 + 8, 32 - 4) - t(32 - 8, 32 + 4)) < 1e-14);
  }

  TEST_CASE("file potentials")
  {
    const Lattice l = grid(16);
    const ComplexField q = ComplexField::from_function(l, [](cplx z) { return std::exp(-std::norm(z)) * z; });
    const auto dir = testing::scratch_dir("pot");
    io::write_field(dir / "q.nlf2", q);
    PotentialSpec s;
    s.kind = "file";
    s.path = (dir / "q.nlf2").string();
    s.amplitude = 2.0;
    CHECK(relative_l2(make_potential(s, l), cplx(2.0) * q) == 0.0);
    CHECK_THROWS_AS(make_potential(s, grid(32)), LatticeMismatch);
    std::filesystem::remove_all(dir);
  }
}
