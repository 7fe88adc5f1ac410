#include <fstream>

#include "common.hpp"
#include "doctest.h"
#include "nlft/cauchy.hpp"
#include "nlft/errors.hpp"
#include "nlft/io.hpp"
#include "nlft/norms.hpp"
#include "nlft/spectral.hpp"

using namespace nlft;
using testing::gaussian;
using testing::grid;

TEST_SUITE("field-grid")
{
  TEST_CASE("lattice coordinates are centred")
  {
    const Lattice l = Lattice::position(8, 0.5);
    CHECK(l.coord(4) == 0.0);
    CHECK(l.coord(0) == doctest::Approx(-2.0));
    CHECK(l.extent() == doctest::Approx(4.0));
    CHECK(l.index(3, 2) == 19);
    CHECK(l.point(19) == cplx(l.coord(3), l.coord(2)));
    CHECK_THROWS_AS(Lattice::position(6, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Lattice::position(8, -1.0), std::invalid_argument);
  }

  TEST_CASE("fields reject mismatched lattices and non-finite samples")
  {
    const ComplexField a = gaussian(grid(16));
    const ComplexField b = gaussian(grid(32));
    CHECK_THROWS_AS(a + b, LatticeMismatch);
    CVector bad(16 * 16, cplx(0.0));
    bad[3] = cplx(std::nan(""), 0.0);
    CHECK_THROWS(ComplexField(grid(16), bad));
  }

  TEST_CASE("discrete L2 norm of a Gaussian")
  {
    const ComplexField g = gaussian(grid(64));
    CHECK(l2(g) == doctest::Approx(std::sqrt(pi / 2.0)).epsilon(1e-12));
    CHECK(norm(g, 4.0) == doctest::Approx(std::pow(pi / 4.0, 0.25)).epsilon(1e-9));
    CHECK(norm(g, infinity) == doctest::Approx(1.0));
  }

  TEST_CASE("Cauchy transform recovers a Gaussian")
  {
    const Lattice l = grid(128);
    const ComplexField f = ComplexField::from_function(l, [](cplx z) { return -z * std::exp(-std::norm(z)); });
    const ComplexField u = dbar_inv(f);
    CHECK(relative_l2(u, gaussian(l)) < 1e-10);
    const ComplexField g = ComplexField::from_function(l, [](cplx z) { return -std::conj(z) * std::exp(-std::norm(z)); });
    CHECK(relative_l2(del_inv(g), gaussian(l)) < 1e-10);
  }

  TEST_CASE("Cauchy transform inverts the spectral d-bar")
  {
    const Lattice l = grid(128);
    const ComplexField u = ComplexField::from_function(l, [](cplx z) {
      return cplx(1.0, 0.5) * std::exp(-std::norm(z - cplx(1.0, -0.5))) + z * std::exp(-2.0 * std::norm(z));
    });
    CHECK(relative_l2(dbar_inv(spectral_dbar(u)), u) < 1e-9);
  }

  TEST_CASE("paper transform of a Gaussian")
  {
    const Lattice zl = grid(64);
    const Lattice kl = Lattice::spectral(32, pi / 20.0);
    const ComplexField qh = ek_transform(gaussian(zl), kl, NyquistRule::strict);
    const ComplexField exact =
        ComplexField::from_function(kl, [](cplx k) { return cplx(0.0, 1.0) * std::exp(-std::norm(k)); });
    CHECK(relative_l2(qh, exact) < 1e-12);
    CHECK(l2(qh) == doctest::Approx(l2(gaussian(zl))).epsilon(1e-5));
  }

  TEST_CASE("incommensurate spectral lattices are refused")
  {
    const Lattice zl = grid(64);
    CHECK_THROWS_AS(ek_transform(gaussian(zl), Lattice::spectral(32, 0.25), NyquistRule::strict),
                    IncommensurateLattices);
  }

  TEST_CASE("maximal function dominates and is exact at a radial peak")
  {
    const ComplexField g = gaussian(grid(32));
    const ComplexField m = maximal_function(g);
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(m[i].real() >= std::abs(g[i]) - 1e-15);
    CHECK(m(16, 16).real() == doctest::Approx(1.0));
  }

  TEST_CASE("Sobolev and Besov norms")
  {
    const ComplexField g = gaussian(grid(64));
    CHECK(sobolev_norm(g, 0.0) == doctest::Approx(l2(g)).epsilon(1e-10));
    // |grad e^{-|z|^2}|_2^2 = pi
    CHECK(sobolev_norm(g, 1.0) == doctest::Approx(std::sqrt(pi)).epsilon(1e-8));
    CHECK(besov_norm(g, 0.5, 2.0) > 0.0);
    CHECK(besov_norm(ComplexField(grid(64)), 0.5, 2.0) == 0.0);
  }

  TEST_CASE("NLF2 round trip and corruption")
  {
    const ComplexField g = ComplexField::from_function(grid(16), [](cplx z) { return z * std::exp(-std::norm(z)); });
    const auto bytes = io::encode(g);
    const ComplexField back = io::decode(bytes);
    CHECK(back.lattice().same_geometry(g.lattice()));
    CHECK(relative_l2(back, g) == 0.0);

    auto wrong_magic = bytes;
    wrong_magic[0] = 'X';
    CHECK_THROWS_AS(io::decode(wrong_magic), FormatError);
    auto truncated = bytes;
    truncated.resize(truncated.size() - 8);
    CHECK_THROWS_AS(io::decode(truncated), FormatError);

    const auto dir = testing::scratch_dir("io");
    io::write_field(dir / "g.nlf2", g);
    CHECK(relative_l2(io::read_field(dir / "g.nlf2"), g) == 0.0);
    CHECK_THROWS(io::read_field(dir / "missing.nlf2"));
    std::filesystem::remove_all(dir);
  }
}
