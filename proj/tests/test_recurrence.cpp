#include <doctest.h>

#include "oracles.hpp"
#include "tfreud/errors.hpp"
#include "tfreud/recurrence.hpp"

using namespace tfreud;

namespace {

std::vector<Real> quadrature_moments(const Real& z, int N) {
  std::vector<Real> mu;
  for (int n = 0; n <= N; ++n) mu.push_back(oracle::moment(n, z));
  return mu;
}

}  // namespace

TEST_SUITE("recurrence") {
  TEST_CASE("coefficients against Gram-Schmidt on quadrature moments") {
    const PrecisionContext ctx(320);
    auto s = ctx.scope();
    for (const char* zs : {"1", "0.3"}) {
      const Real z(zs);
      const auto gs = oracle::gram_schmidt(quadrature_moments(z, 14), 6);
      const RecurrenceTable t = chebyshev_coeffs(z, 6, ctx);
      for (int n = 0; n <= 6; ++n) {
        CHECK(abs(t.b(n) / gs.b[static_cast<size_t>(n)] - 1) < Real("1e-40"));
        CHECK(abs(t.h(n) / gs.h[static_cast<size_t>(n)] - 1) < Real("1e-40"));
        if (n > 0) CHECK(abs(t.a(n) / gs.a[static_cast<size_t>(n)] - 1) < Real("1e-40"));
      }
    }
  }

  TEST_CASE("h_n as a ratio of Hankel determinants") {
    const PrecisionContext ctx(512);
    auto s = ctx.scope();
    const Real z(1);
    const auto mu = quadrature_moments(z, 24);
    const RecurrenceTable t = chebyshev_coeffs(z, 10, ctx);
    for (int n = 0; n <= 10; ++n) {
      const Real ref = oracle::hankel(mu, n + 1) / oracle::hankel(mu, n);
      CHECK(abs(t.h(n) / ref - 1) < Real("1e-60"));
    }
  }

  TEST_CASE("known leading values at z = 1") {
    const PrecisionContext ctx(256);
    auto s = ctx.scope();
    const RecurrenceTable t = chebyshev_coeffs(Real(1), 4, ctx);
    // b_0 = Gamma(1/2)/Gamma(1/4).
    CHECK(t.b(0).to_fixed(12) == "0.488870533723");
    CHECK(t.a(1).to_fixed(12) == "0.098994721291");
    CHECK(t.b(0).to_fixed(6) == "0.488871");
    CHECK(t.a(0).is_zero());
    CHECK(t.b(-1).is_zero());
    CHECK_THROWS_AS(t.a(5), IndexError);
  }

  TEST_CASE("Laguerre-Freud residuals vanish") {
    for (const char* zs : {"0.25", "1", "4"}) {
      const PrecisionContext ctx = PrecisionContext::for_degree(30);
      auto s = ctx.scope();
      const RecurrenceTable t = chebyshev_coeffs(Real(zs), 30, ctx);
      for (int n = 0; n <= 28; ++n) {
        CHECK(lf_residual_1(t, n).within(ctx));
        CHECK(lf_residual_2(t, n).within(ctx));
        CHECK(lf_residual_I(t, n).within(ctx));
      }
      CHECK_THROWS_AS(lf_residual_1(t, 29), IndexError);
    }
  }

  TEST_CASE("fault injection breaks the Laguerre-Freud residuals") {
    const PrecisionContext ctx = PrecisionContext::for_degree(14);
    auto s = ctx.scope();
    const RecurrenceTable t = chebyshev_coeffs(Real(1), 14, ctx).perturbed('a', 3, Real("1e-6"));
    bool any = false;
    for (int n = 0; n <= 12; ++n) any = any || !lf_residual_1(t, n).within(ctx) || !lf_residual_I(t, n).within(ctx);
    CHECK(any);
    CHECK_THROWS(chebyshev_coeffs(Real(1), 4, ctx).perturbed('c', 1, Real(1)));
  }

  TEST_CASE("precision exhaustion names the failing index") {
    const PrecisionContext ctx(352);
    auto s = ctx.scope();
    try {
      chebyshev_coeffs(Real(1), 14, ctx, 0);
      FAIL("expected PrecisionExhausted");
    } catch (const PrecisionExhausted& e) {
      CHECK(e.index() >= 1);
      CHECK(e.index() <= 14);
    }
    CHECK_NOTHROW(chebyshev_coeffs(Real(1), 14, ctx));
  }

  TEST_CASE("forward Laguerre-Freud recursion is unstable") {
    const PrecisionContext ctx(512);
    auto s = ctx.scope();
    const RecurrenceTable ref = chebyshev_coeffs(Real(1), 40, ctx);
    const ForwardResult fw = lf_forward(ref.b(0), ref.a(1), ref.b(1), Real(1), 40, ref, ctx);
    REQUIRE(fw.divergence_index.has_value());
    CHECK(*fw.divergence_index > 0);
    // Early terms still agree closely.
    CHECK(abs(fw.table.a(3) / ref.a(3) - 1) < Real("1e-100"));
    const ForwardResult bad = lf_forward(ref.b(0) + Real("1e-10"), ref.a(1), ref.b(1), Real(1), 40, ref, ctx);
    REQUIRE(bad.divergence_index.has_value());
    CHECK(*bad.divergence_index < *fw.divergence_index);
  }

  TEST_CASE("z scaling of coefficients and h_n") {
    const PrecisionContext ctx = PrecisionContext::for_degree(16);
    auto s = ctx.scope();
    const RecurrenceTable one = chebyshev_coeffs(Real(1), 16, ctx);
    for (const char* zs : {"0.0625", "0.25", "4", "16"}) {
      const RecurrenceTable t = chebyshev_coeffs(Real(zs), 16, ctx);
      for (int n = 0; n <= 16; ++n) {
        const auto [ea, eb] = scaling_check(t, one, n);
        CHECK(abs(ea) <= ctx.verify_tol(Real(1)));
        CHECK(abs(eb) <= ctx.verify_tol(Real(1)));
      }
    }
    const HScaling h = h_scaling_check(Real(4), 6, ctx);
    CHECK(abs(h.integrated) <= ctx.verify_tol(Real(1)));
    CHECK(abs(h.derivative_h) < ldexp(Real(1), -ctx.bits() / 4));
    // O(step^2): halving the step quarters the error.
    CHECK(abs(h.derivative_h / h.derivative_h2 - 4) < Real("0.05"));
  }

  TEST_CASE("asymptotic ratios approach 1") {
    const PrecisionContext ctx = PrecisionContext::for_degree(128);
    auto s = ctx.scope();
    const RecurrenceTable t = chebyshev_coeffs(Real(1), 128, ctx);
    Real prev_a(1), prev_b(1);
    for (int n : {16, 32, 64, 128}) {
      const auto [ra, rb] = asymptotic_ratio(t, n);
      CHECK(abs(ra - 1) < prev_a);
      CHECK(abs(rb - 1) < prev_b);
      prev_a = abs(ra - 1);
      prev_b = abs(rb - 1);
    }
    CHECK(prev_a < Real("0.1"));
    CHECK(prev_b < Real("0.1"));
  }

  TEST_CASE("limit constants in exact arithmetic") {
    const ConstantsCheck c = asymptotic_constants_check();
    CHECK(c.wq1);
    CHECK(c.wq1_reduced);
    CHECK(c.wq2);
    CHECK(c.a_from_b);
    CHECK(c.b4_positive_branch);
    CHECK(c.rejected_b4_num == -4);
    CHECK(c.rejected_b4_den == 5);
  }

  TEST_CASE("table helpers") {
    const PrecisionContext ctx(256);
    auto s = ctx.scope();
    const RecurrenceTable t = chebyshev_coeffs(Real(2), 8, ctx);
    CHECK(t.truncated(5).n_max() == 5);
    CHECK(t.rounded(64).b(3).precision() == 64);
    CHECK(t.perturbed('b', 2, Real(1)).b(2) == t.b(2) + 1);
    CHECK(t.R(3) == t.a(4) + t.b(3) * t.b(3) + t.a(3));
    CHECK(t.T(3) == t.a(3) * (t.b(3) + t.b(2)));
    CHECK_THROWS_AS(chebyshev_coeffs(Real(-1), 4, ctx), DomainError);
  }
}
