#include <doctest.h>

#include "oracles.hpp"
#include "tfreud/errors.hpp"
#include "tfreud/moments.hpp"
#include "tfreud/precision.hpp"

using namespace tfreud;

TEST_SUITE("moments") {
  TEST_CASE("closed form against quadrature") {
    PrecisionScope p(256);
    for (const char* zs : {"1", "0.25", "3"}) {
      const Real z(zs);
      for (int n = 0; n <= 9; ++n) CHECK(abs(moment(n, z) / oracle::moment(n, z) - 1) < Real("1e-60"));
    }
    CHECK(moment(3, Real(1)) == Real("0.25"));
    CHECK_THROWS_AS(moment(1, Real(0)), DomainError);
    CHECK_THROWS_AS(moment(-1, Real(1)), DomainError);
  }

  TEST_CASE("recurrence 4z mu_{n+4} = (n+1) mu_n") {
    const PrecisionContext ctx(256);
    auto s = ctx.scope();
    for (const char* zs : {"0.0625", "1", "16"}) {
      const MomentSequence m(Real(zs), 40);
      for (int n = 0; n + 4 <= 40; ++n) CHECK(moment_recurrence_residual(m, n).within(ctx));
    }
    const MomentSequence m(Real(1), 10);
    CHECK_THROWS_AS(m.at(11), IndexError);
    CHECK_THROWS_AS(moment_recurrence_residual(m, 7), IndexError);
  }

  TEST_CASE("recurrence check is not vacuous") {
    const PrecisionContext ctx(256);
    auto s = ctx.scope();
    const MomentSequence m(Real(1), 12);
    // Moments of a nearby z do not satisfy the relation for z = 1.
    const MomentSequence other(Real("1.0000001"), 12);
    const Residual r = Residual::between(Tracked::input(4 * m.z() * other[5]), Tracked::input(2 * other[1]));
    CHECK(!r.within(ctx));
  }

  TEST_CASE("z scaling of moments") {
    const PrecisionContext ctx(256);
    auto s = ctx.scope();
    for (const char* zs : {"0.0625", "0.25", "4", "16"}) {
      for (int n = 0; n <= 20; ++n) CHECK(moment_scaling_residual(n, Real(zs)).within(ctx));
    }
    // Derivative identity 4z d/dz mu_n = -(n+1) mu_n, central differences O(h^2).
    const Real e1 = abs(moment_dz_residual(5, Real(2), Real("1e-5")));
    const Real e2 = abs(moment_dz_residual(5, Real(2), Real("5e-6")));
    CHECK(e1 < Real("1e-8"));
    CHECK(abs(e1 / e2 - 4) < Real("0.1"));
  }

  TEST_CASE("Pearson data and class") {
    PrecisionScope p(128);
    const PearsonData pd = PearsonData::for_z(Real(2));
    CHECK(pd.phi.degree() == 1);
    CHECK(pd.psi.degree() == 4);
    CHECK(pd.psi.coeff(4) == Real(8));
    CHECK(pd.psi.coeff(0) == Real(-1));
    CHECK(pd.cls == 3);
    for (const char* zs : {"0.5", "1", "7"}) {
      const ClassCheck c = class_check(Real(zs));
      CHECK(c.cls == 3);
      CHECK(abs(c.product - 1) < Real("1e-30"));
    }
  }

  TEST_CASE("Stieltjes series: the ODE residual is exactly the tail") {
    PrecisionScope p(256);
    for (int N : {3, 7, 12, 20}) {
      for (const char* ts : {"2", "3.5", "-4"}) {
        const Real t(ts), z("1.5");
        const Real r = stieltjes_ode_residual(t, z, N);
        const Real tail = stieltjes_tail(t, z, N);
        CHECK(abs(r - tail) < Real("1e-60") * (1 + abs(4 * z * pow(t, 4L) * stieltjes_partial(t, z, N))));
      }
    }
    CHECK_THROWS_AS(stieltjes_partial(Real(0), Real(1), 4), DomainError);
    CHECK_THROWS_AS(stieltjes_ode_residual(Real(2), Real(1), 2), DomainError);
  }
}
