#include "common.hpp"
#include "doctest.h"
#include "nlft/dbar_solver.hpp"
#include "nlft/spectral.hpp"

using namespace nlft;
using testing::gaussian;
using testing::grid;

TEST_SUITE("dbar-solver")
{
  TEST_CASE("manufactured solution of the real-linear equation")
  {
    const Lattice l = grid(64);
    const ComplexField q = gaussian(l, 0.8, cplx(0.3, -0.2));
    const ComplexField u = ComplexField::from_function(l, [](cplx z) {
      return (cplx(1.0, 0.0) + cplx(0.0, 0.5) * z) * std::exp(-std::norm(z) / 2.0);
    });
    const ComplexField f = spectral_dbar(u) + q * conj(u);
    for (Method method : {Method::krylov, Method::neumann}) {
      SolverConfig cfg;
      cfg.method = method;
      cfg.tol = 1e-10;
      const LqSolution s = solve_lq(q, f, cfg);
      CAPTURE(to_string(method));
      CHECK(s.status == SolveStatus::converged);
      CHECK(relative_l2(s.u, u) <= 1e-5);
      CHECK(lq_residual(q, s.u, f) <= 1e-9);
    }
  }

  TEST_CASE("Jost functions satisfy the Lax pair")
  {
    const Lattice l = grid(128);
    const ComplexField q = gaussian(l, 1.0);
    SolverConfig cfg;
    for (cplx k : {cplx(0.0, 0.0), cplx(0.5, 0.3), cplx(-1.2, 0.7)}) {
      const JostTriple t = jost_solve(q, k, cfg);
      CAPTURE(k);
      REQUIRE(t.converged());
      CHECK(t.lax_residual_1 <= 100 * cfg.tol);
      CHECK(t.lax_residual_2 <= 100 * cfg.tol);
    }
  }

  TEST_CASE("real-linear and complex-linear formulations agree")
  {
    const Lattice l = grid(64);
    const ComplexField q = ComplexField::from_function(l, [](cplx z) {
      return cplx(0.6, 0.4) * std::exp(-std::norm(z - cplx(0.5, 0.0))) * std::polar(1.0, 0.5 * std::norm(z));
    });
    SolverConfig cfg;
    for (cplx k : {cplx(0.2, -0.4), cplx(1.5, 1.0)}) {
      const JostTriple t = jost_solve(q, k, cfg);
      const ComplexLinearSolution c = jost_solve_complexlinear(q, k, cfg);
      REQUIRE(t.converged());
      REQUIRE(c.status == SolveStatus::converged);
      const ComplexField one = ComplexField::from_function(l, [](cplx) { return cplx(1.0); });
      const ComplexField r = t.m1 - one;
      CHECK(l2(r - c.m1_minus_one) / l2(r) <= 10 * cfg.tol);
    }
  }

  TEST_CASE("zero potential gives trivial Jost functions")
  {
    const Lattice l = grid(32);
    const JostTriple t = jost_solve(ComplexField(l), cplx(0.3, 0.1), SolverConfig{});
    CHECK(t.converged());
    for (std::size_t i = 0; i < l.size(); ++i) {
      CHECK(std::abs(t.m1[i] - 1.0) < 1e-14);
      CHECK(std::abs(t.m2[i]) < 1e-14);
    }
  }

  TEST_CASE("active box covers the support")
  {
    const Lattice l = grid(64);
    const ComplexField g = gaussian(l);
    const ActiveBox b = active_box(g);
    CHECK(!b.empty());
    CHECK(b.size <= 64);
    CHECK(active_box(ComplexField(l)).empty());
  }

  TEST_CASE("solver configuration validation")
  {
    SolverConfig cfg;
    cfg.tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(parse_method("krylov") == Method::krylov);
    CHECK_THROWS_AS(parse_method("lu"), std::invalid_argument);
  }
}
