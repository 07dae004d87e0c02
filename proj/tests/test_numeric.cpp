#include <doctest.h>

#include "oracles.hpp"
#include "tfreud/errors.hpp"
#include "tfreud/polynomial.hpp"
#include "tfreud/precision.hpp"
#include "tfreud/special.hpp"
#include "tfreud/tracked.hpp"
#include "tfreud/tridiag.hpp"

using namespace tfreud;

TEST_SUITE("numeric-kernel") {
  TEST_CASE("precision policy") {
    CHECK(PrecisionContext::policy_bits(14) == 352);
    CHECK(PrecisionContext::for_degree(0).bits() == 128);
    CHECK_THROWS_AS(PrecisionContext(32), DomainError);
    const PrecisionContext ctx(256);
    CHECK(ctx.doubled().bits() == 512);
    CHECK(ctx.verify_tol(Real(1)) == ldexp(Real(1), 1 - 256 + 12));
    {
      auto s = ctx.scope();
      CHECK(working_precision() == 256);
      {
        PrecisionScope inner(128);
        CHECK(working_precision() == 128);
      }
      CHECK(working_precision() == 256);
    }
  }

  TEST_CASE("half-away rounding") {
    PrecisionScope p(128);
    // Exact binary ties go away from zero.
    CHECK(Real("0.125").to_fixed(2) == "0.13");
    CHECK(Real("-0.125").to_fixed(2) == "-0.13");
    CHECK(Real("2.5").to_fixed(0) == "3");
    CHECK(Real("0.01185").to_fixed(3) == "0.012");
    CHECK(Real(1).to_fixed(2) == "1.00");
  }

  TEST_CASE("gamma against the quadrature oracle") {
    PrecisionScope p(256);
    for (int m : {1, 2, 3, 4, 5, 8}) {
      const Real ref = oracle::gamma_inv(m);
      const Real got = gamma(Real(1) / m);
      CHECK(abs(got / ref - 1) < Real("1e-60"));
    }
    // Functional equation.
    const Real x("0.37");
    CHECK(abs(gamma(x + 1) - x * gamma(x)) < Real("1e-70"));
    CHECK_THROWS_AS(gamma(Real(0)), DomainError);
    CHECK_THROWS_AS(gamma(Real(-1.5)), DomainError);
  }

  TEST_CASE("hypergeometric series") {
    PrecisionScope p(192);
    // 2F1(1,1;2;w) = -ln(1-w)/w
    for (const char* ws : {"0.1", "0.5", "0.9", "-0.7"}) {
      const Real w(ws);
      CHECK(abs(hyp2f1_series(Real(1), Real(1), Real(2), w) + log(1 - w) / w) < Real("1e-50"));
    }
    // Terminating: 2F1(-2, b; c; w) is a quadratic.
    const Real b(3), c(5), w("0.4");
    const Real poly = 1 - 2 * b / c * w + b * (b + 1) / (c * (c + 1)) * w * w;
    CHECK(abs(hyp2f1_series(Real(-2), b, c, w) - poly) < Real("1e-55"));
    CHECK_THROWS_AS(hyp2f1_series(Real(1), Real(1), Real(2), Real(1)), ConvergenceError);
    CHECK_THROWS_AS(hyp2f1_series(Real(1), Real(1), Real(-2), Real("0.5")), DomainError);
  }

  TEST_CASE("tanh-sinh quadrature with endpoint singularities") {
    PrecisionScope p(192);
    const Real tol("1e-40");
    CHECK(abs(integrate([](const Real& x) { return 1 / sqrt(x); }, Real(0), Real(1), tol) - 2) < Real("1e-38"));
    CHECK(abs(integrate([](const Real& x) { return log(x); }, Real(0), Real(1), tol) + 1) < Real("1e-38"));
    CHECK(abs(integrate([](const Real& x) { return sqrt(1 - x * x); }, Real(-1), Real(1), tol) - pi() / 2) <
          Real("1e-38"));
    CHECK(abs(integrate([](const Real& x) { return exp(x); }, Real(0), Real(2), tol) - (exp(Real(2)) - 1)) <
          Real("1e-38"));
  }

  TEST_CASE("tridiagonal eigenvalues") {
    PrecisionScope p(256);
    // Constant-coefficient matrix: 2 + 2cos(k pi/(n+1)).
    const int n = 9;
    std::vector<Real> d(n, Real(2)), e(n - 1, Real(1));
    const auto ev = tridiag_eigenvalues(d, e);
    for (int k = 1; k <= n; ++k) {
      const Real exact = 2 + 2 * cos(Real(n + 1 - k) * pi() / (n + 1));
      CHECK(abs(ev[static_cast<size_t>(k - 1)] - exact) < Real("1e-70"));
    }
    CHECK(sturm_count(d, std::vector<Real>(n - 1, Real(1)), Real(2)) == 4);
    CHECK_THROWS_AS(tridiag_eigenvalues(d, std::vector<Real>(n - 1, Real(0))), ContractViolation);
    CHECK_THROWS_AS(tridiag_eigenvalues(d, std::vector<Real>(n, Real(1))), ContractViolation);
  }

  TEST_CASE("dense determinant agrees with the eigenvalues") {
    PrecisionScope p(256);
    std::vector<Real> b{Real("0.3"), Real("0.9"), Real("1.4"), Real("2.2")};
    std::vector<Real> a{Real(0), Real("0.2"), Real("0.35"), Real("0.5")};
    const auto ev = tridiag_eigenvalues_sq(b, std::vector<Real>(a.begin() + 1, a.end()));
    const auto ref = oracle::roots_by_scan([&](const Real& x) { return oracle::charpoly_dense(b, a, 4, x); },
                                           Real(-2), Real(4), 600);
    REQUIRE(ref.size() == 4);
    for (size_t k = 0; k < 4; ++k) CHECK(abs(ev[k] - ref[k]) < Real("1e-70"));
  }

  TEST_CASE("polynomials") {
    PrecisionScope p(128);
    const Poly x = Poly::monomial(1);
    const Poly q = (x - Poly::constant(Real(1))) * (x + Poly::constant(Real(2)));  // x^2 + x - 2
    CHECK(q.degree() == 2);
    CHECK(q.coeff(0) == Real(-2));
    CHECK(q.eval(Real(1)).is_zero());
    CHECK(poly_diff(q).coeff(0) == Real(1));
    CHECK((q - q).degree() == -1);
    CHECK_THROWS_AS(MonicPoly(Poly::constant(Real(2)) * x), ContractViolation);
    const MonicPoly m(q);
    CHECK(m.sigma() == Real(-1));
    CHECK(m.at_zero() == Real(-2));
    CHECK_THROWS_AS(RationalFn(q, Poly()), ContractViolation);
    const RationalFn r(Poly::constant(Real(1)), x);
    CHECK_THROWS_AS(r.eval(Real(0)), DomainError);
    CHECK(abs(r.derivative()(Real(2)) + Real("0.25")) < Real("1e-35"));
  }

  TEST_CASE("tracked scales expose cancellation") {
    PrecisionScope p(128);
    const Tracked a = Tracked::input(Real(1000));
    const Tracked b = Tracked::input(Real("999.5"));
    const Tracked d = a - b;
    CHECK(d.value == Real("0.5"));
    CHECK(d.scale == Real("1999.5"));
    const Residual r = Residual::of(d);
    CHECK(!r.within(PrecisionContext(128)));
    CHECK(Residual{Real(0), Real(0)}.ratio().is_zero());
  }
}
