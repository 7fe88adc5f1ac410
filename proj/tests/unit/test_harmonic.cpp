#include "common.hpp"
#include "doctest.h"
#include "nlft/harmonic.hpp"
#include "nlft/norms.hpp"
#include "nlft/spectral.hpp"

using namespace nlft;
using testing::gaussian;
using testing::grid;

TEST_SUITE("harmonic-toolkit")
{
  TEST_CASE("second power of the frequency is minus the Laplacian")
  {
    const ComplexField g = gaussian(grid(64), 1.0, cplx(0.3, 0.1));
    const ComplexField lap = cplx(-4.0) * spectral_del(spectral_dbar(g));
    CHECK(relative_l2(frac_power(g, 2.0), lap) < 1e-8);
  }

  TEST_CASE("fractional Laplacian domain")
  {
    const ComplexField g = gaussian(grid(32));
    CHECK_THROWS_AS(frac_laplacian(g, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(frac_laplacian(g, 2.0), std::invalid_argument);
    cplx mean = 0.0;
    for (cplx v : g.samples()) mean += v / static_cast<double>(g.size());
    const ComplexField zero_mean = ComplexField::from_function(g.lattice(), [&](cplx z) { return std::exp(-std::norm(z)) - mean; });
    CHECK(relative_l2(frac_power(frac_laplacian(g, 1.0), 1.0), zero_mean) < 1e-12);
  }

  TEST_CASE("spectrum of a Gaussian")
  {
    const Lattice l = grid(64);
    const ComplexField f = spectrum_field(gaussian(l));
    CHECK(f.lattice().domain() == Domain::spectral);
    CHECK(f.lattice().spacing() == doctest::Approx(l.frequency_step()));
    CHECK(f(32, 32).real() == doctest::Approx(pi).epsilon(1e-12));
  }

  TEST_CASE("worst ratio")
  {
    const std::vector<double> top{1.0, 2.0, 3.0}, bottom{1.0, 1.0, 6.0};
    CHECK(worst_ratio(top, bottom) == std::pair{2.0, 1.0});
    const std::vector<double> zero_bottom{1.0, 0.0, 6.0};
    CHECK(worst_ratio(top, zero_bottom) == std::pair{2.0, 0.0});
    const std::vector<std::uint8_t> mask{1, 0, 1};
    CHECK(worst_ratio(top, zero_bottom, mask) == std::pair{1.0, 1.0});
  }

  TEST_CASE("fractional integral audit is finite")
  {
    const FractionalAudit a = audit_fractional_bound(gaussian(grid(64)), 1.0, 1.0);
    CHECK(a.form_a.finite());
    CHECK(a.form_b.finite());
  }

  TEST_CASE("bilinear estimate parameter domain")
  {
    const ComplexField g = gaussian(grid(32));
    CHECK_THROWS_AS(audit_bilinear_besov(g, g, 0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(audit_bilinear_besov(g, g, 0.5, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(audit_bilinear_besov(g, g, 1.0, 2.0), std::invalid_argument);
    CHECK(audit_bilinear_besov(g, g, 0.5, 3.0).finite());
  }

  TEST_CASE("pseudo-differential operator with a constant symbol is the identity")
  {
    const Lattice zl = grid(32);
    const Lattice xil = Lattice::spectral(32, zl.frequency_step());
    const SymbolField one = SymbolField::from_function(zl, xil, [](cplx, cplx) { return cplx(1.0); });
    const ComplexField f = gaussian(zl, 1.0, cplx(0.5, -0.5));
    CHECK(relative_l2(pdo_apply(one, f), f) < 1e-12);
  }

  TEST_CASE("pseudo-differential operator with an x-independent symbol is a multiplier")
  {
    const Lattice zl = grid(32);
    const Lattice xil = Lattice::spectral(32, zl.frequency_step());
    const SymbolField a = SymbolField::from_function(zl, xil, [](cplx, cplx xi) { return cplx(std::norm(xi)); });
    const ComplexField f = gaussian(zl);
    CHECK(relative_l2(pdo_apply(a, f), frac_power(f, 2.0)) < 1e-10);
  }

  TEST_CASE("Jost symbol reproduces the nonlinear part of the scattering integral")
  {
    const Lattice zl = grid(32);
    const ComplexField q = gaussian(zl, 1.0);
    const Lattice kl = Lattice::spectral(8, pi / 10.0);
    const SymbolField a = jost_symbol(q, kl, SolverConfig{});
    const CVector fhat = jost_symbol_spectrum(q);
    const ComplexField via_pdo = pdo_apply_spectral(a, fhat);
    for (std::size_t i = 0; i < kl.size(); ++i) {
      const cplx k = kl.point(i);
      const ComplexLinearSolution m = jost_solve_complexlinear(q, k, SolverConfig{});
      cplx direct = 0.0;
      for (std::size_t j = 0; j < zl.size(); ++j)
        direct += ek(zl.point(j), k) * std::conj(q[j]) * m.m1_minus_one[j];
      direct *= cplx(0.0, -1.0 / pi) * zl.cell_area();
      CHECK(std::abs(via_pdo[i] - direct) < 1e-8 * (1.0 + std::abs(direct)));
    }
  }

  TEST_CASE("random ensembles are reproducible")
  {
    const Lattice l = grid(32);
    const auto a = random_ensemble(3, 7);
    const auto b = random_ensemble(3, 7);
    const auto c = random_ensemble(3, 8);
    CHECK(relative_l2(a[2].sample(l), b[2].sample(l)) == 0.0);
    CHECK(relative_l2(a[2].sample(l), c[2].sample(l)) > 1e-3);
  }

  TEST_CASE("d-bar audit is finite")
  {
    const InequalityReport r = audit_dbar_bound(gaussian(grid(32)), Lattice::spectral(16, pi / 20.0), 4);
    CHECK(r.finite());
    CHECK(r.per_trial.size() == 1);
  }
}
