#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toric/errors.hpp"
#include "toric/whittaker.hpp"

using namespace toric;
using toric::testing::Gen;

namespace {

LaurentA cs(const Context& ctx) {
  return LaurentA::constant(ctx.field.one()) - LaurentA::monomial(ctx.q.inv(), 1, -1);
}

LaurentA y2k(int k, const Context& ctx) {
  return k < 0 ? LaurentA(ctx.field) : LaurentA::monomial(ctx.field.one(), 0, k);
}

PSVector sph_table(int p, int n) {
  PSVector::TableValues v;
  for (const auto& c : p1_enumerate(p, n)) v.emplace(c, LaurentA::constant(Field::rationals(), 1));
  return PSVector::table(p, n, Field::rationals(), std::move(v));
}

}  // namespace

TEST(Plan, Parameters) {
  const auto a = make_plan(2, 0, 1);
  EXPECT_EQ(a.u_refine, 2);
  EXPECT_EQ(a.cyclo_level, 1);
  EXPECT_EQ(a.a_refine, 1);
  const auto b = make_plan(2, -3, 1);
  EXPECT_EQ(b.u_refine, 3);
  EXPECT_EQ(b.cyclo_level, 4);
  EXPECT_EQ(b.a_refine, 4);
  const auto c = make_plan(1, 4, 5);
  EXPECT_EQ(c.cyclo_level, 1);
}

TEST(SphBigCell, Values) {
  const Context ctx = Context::symbolic();
  EXPECT_EQ(sph_big_cell_value(1, ctx), LaurentA::monomial(ctx.q.inv(), 1, -1));
  EXPECT_EQ(sph_big_cell_value(2, ctx), LaurentA::monomial(ctx.q.pow(-2), 2, -2));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      EXPECT_EQ(sph_big_cell_value(a + b, ctx), sph_big_cell_value(a, ctx) * sph_big_cell_value(b, ctx));
  EXPECT_THROW(sph_big_cell_value(0, ctx), Error);
}

TEST(CsFactor, ShellContributions) {
  const Context ctx = Context::symbolic();
  const auto shells = cs_factor_shells(ctx);
  ASSERT_GE(shells.size(), 3u);
  EXPECT_EQ(shells[0], LaurentA::constant(ctx.field.one()));
  EXPECT_EQ(shells[1], -LaurentA::monomial(ctx.q.inv(), 1, -1));
  for (std::size_t m = 2; m < shells.size(); ++m) EXPECT_TRUE(shells[m].is_zero());
  EXPECT_EQ(cs_factor_regularized(ctx), cs(ctx));
}

TEST(CsFactor, NumericTier2) {
  // Lambda(f^sph) by the regularized finite sum, with no closed forms.
  for (int p : {2, 3, 5}) {
    const Context ctx = Context::numeric(p);
    IntegrationPlan plan = make_plan(1, 0, 1);
    plan.torus_average = false;
    EXPECT_EQ(twisted_integral(PSVector::sph(), 0, plan, ctx), cs(ctx));
    EXPECT_EQ(cs_factor_regularized(ctx), cs(ctx));
  }
}

TEST(Shintani, Values) {
  const Context ctx = Context::symbolic();
  const Field f = ctx.field;
  EXPECT_EQ(shintani_sph(0, ctx), LaurentA::constant(f.one()));
  EXPECT_EQ(shintani_sph(1, ctx), LaurentA::monomial(f.one(), 1, 0) + LaurentA::monomial(f.one(), 0, 1));
  EXPECT_TRUE(shintani_sph(-1, ctx).is_zero());
  // sum h_k Z^k (1 - Y1 Z)(1 - Y2 Z) = 1 up to order 10
  const LaurentA e1 = LaurentA::monomial(f.one(), 1, 0) + LaurentA::monomial(f.one(), 0, 1);
  const LaurentA e2 = LaurentA::monomial(f.one(), 1, 1);
  for (int k = 1; k <= 10; ++k)
    EXPECT_TRUE((shintani_sph(k, ctx) - e1 * shintani_sph(k - 1, ctx) + e2 * shintani_sph(k - 2, ctx)).is_zero());
}

TEST(LambdaChi, Examples) {
  EXPECT_EQ(lambda_chi(PSVector::phi_w(), Context::symbolic()), LaurentA::constant(Context::symbolic().field.one()));
  for (int p : {2, 3, 5}) {
    const Context ctx = Context::numeric(p);
    EXPECT_EQ(lambda_chi(PSVector::phi_w(), ctx), LaurentA::constant(ctx.field.one()));
    EXPECT_EQ(lambda_chi(f0_table(p, 2), ctx), LaurentA::constant(ctx.field.one()));
    EXPECT_TRUE(lambda_chi(PSVector(), ctx).is_zero());
    EXPECT_THROW(lambda_chi(PSVector::sph(), ctx), NotBigCell);
    EXPECT_THROW(lambda_chi(random_table(p, 1, 3), ctx), NotBigCell);
  }
}

TEST(LambdaChi, ProjectedSphCrossCheck) {
  // Sph - (its value at 1) Sph vanishes identically; the projected vector
  // phi_w - f0_table has zero Whittaker functional as well.
  const Context ctx = Context::numeric(3);
  const auto split = big_cell_split(PSVector::sph(), ctx);
  EXPECT_TRUE(lambda_chi(split.f_w, ctx).is_zero());
  const PSVector diff = PSVector::lincomb({{LaurentA::constant(Field::rationals(), 1), PSVector::phi_w()},
                                          {LaurentA::constant(Field::rationals(), -1), f0_table(3, 1)}});
  EXPECT_TRUE(lambda_chi(diff, ctx).is_zero());
}

TEST(Coefficient, SymbolicClosedForms) {
  const Context ctx = Context::symbolic();
  EXPECT_EQ(whittaker_coefficient(PSVector::sph(), 0, ctx), cs(ctx));
  for (int k = -3; k <= 6; ++k) {
    EXPECT_EQ(whittaker_coefficient(PSVector::phi_w(), k, ctx), y2k(k, ctx)) << k;
    EXPECT_EQ(whittaker_coefficient(PSVector::sph(), k, ctx), cs(ctx) * shintani_sph(k, ctx)) << k;
  }
  EXPECT_THROW(whittaker_coefficient(PSVector::translate(PadicMatrix::diag(2, 2, 1), PSVector::sph()), 0, ctx),
               Error);
}

TEST(Coefficient, SphAtPrime3IndexTwo) {
  const Context ctx = Context::numeric(3);
  const LaurentA expected = cs(ctx) * shintani_sph(2, ctx);
  EXPECT_EQ(whittaker_coefficient_regularized(PSVector::sph(), 2, ctx), expected);
  EXPECT_EQ(whittaker_coefficient(sph_table(3, 2), 2, ctx), expected);
  EXPECT_TRUE(whittaker_coefficient_regularized(PSVector::sph(), -1, ctx).is_zero());
}

TEST(Coefficient, Tier1MatchesTier2) {
  for (int p : {2, 3})
    for (int n : {1, 2}) {
      const Context ctx = Context::numeric(p);
      const PSVector f0 = f0_table(p, n), s = sph_table(p, n);
      for (int k = -3; k <= 4; ++k) {
        EXPECT_EQ(whittaker_coefficient(f0, k, ctx), y2k(k, ctx)) << p << " " << n << " " << k;
        EXPECT_EQ(whittaker_coefficient_regularized(s, k, ctx), cs(ctx) * shintani_sph(k, ctx))
            << p << " " << n << " " << k;
      }
    }
}

TEST(Coefficient, MatchesCyclotomicBruteForce) {
  // Direct sum of f(w n(u)) psi^{-1}(a p^k u) in Q(zeta), element by element.
  Gen g(5);
  const int p = 3;
  const Context ctx = Context::numeric(p);
  for (int trial = 0; trial < 3; ++trial) {
    const PSVector f = big_cell_split(random_table(p, 1, g.raw()), ctx).f_w;
    for (int k : {-2, 0, 1}) {
      const IntegrationPlan plan = make_plan(1, k, 0);
      const int M = plan.cyclo_level, L = plan.u_refine, La = plan.a_refine;
      const HaarGrid grid{p, plan.support, L};
      std::map<Exponent, Cyclotomic> acc;
      std::int64_t units = 0;
      for (std::int64_t a = 1; a < int_pow(p, La); ++a) {
        if (a % p == 0) continue;
        ++units;
        for (std::int64_t j = 0; j < grid.size(); ++j) {
          const Rational u = grid.point(j);
          const LaurentA v = evaluate(f, PadicMatrix::weyl(p) * PadicMatrix::unipotent(p, u), ctx);
          const Cyclotomic chi = psi_eval(-Rational(static_cast<long>(a)) * Rational(p).pow(k) * u, p, M);
          for (const auto& [e, c] : v.terms()) {
            auto it = acc.try_emplace(e, Cyclotomic(p, M)).first;
            it->second = it->second + Cyclotomic(p, M, c.as_rational()) * chi;
          }
        }
      }
      LaurentA expected(ctx.field);
      const Rational w = grid.cell_measure() / Rational(static_cast<long>(units));
      for (const auto& [e, c] : acc) expected.add_term(Scalar(rational_part(c) * w), {e.e1, e.e2 + k});
      EXPECT_EQ(whittaker_coefficient(f, k, ctx), expected) << "k=" << k;
    }
  }
}

TEST(Coefficient, SplitAgreesWithRegularized) {
  Gen g(6);
  for (int p : {2, 3})
    for (int n : {1, 2}) {
      const Context ctx = Context::numeric(p);
      for (int t = 0; t < 3; ++t) {
        const PSVector f = random_table(p, n, g.raw());
        for (int k = -(n + 2); k <= n + 3; ++k)
          ASSERT_EQ(whittaker_coefficient(f, k, ctx), whittaker_coefficient_regularized(f, k, ctx))
              << p << " " << n << " k=" << k;
      }
    }
}

TEST(Coefficient, SignedWeylGivesSameValues) {
  Gen g(7);
  for (int p : {2, 3}) {
    const Context ctx = Context::numeric(p);
    const PadicMatrix ws = PadicMatrix::weyl_signed(p);
    for (const PSVector& f : {PSVector::sph(), PSVector::phi_w(), random_table(p, 2, g.raw())})
      for (int k = -2; k <= 3; ++k)
        EXPECT_EQ(whittaker_coefficient_regularized(f, k, ctx, &ws), whittaker_coefficient_regularized(f, k, ctx));
  }
}

TEST(Coefficient, LowTailAndRecurrence) {
  Gen g(8);
  for (int p : {2, 3, 5})
    for (int n : {1, 2}) {
      if (p == 5 && n == 2) continue;
      const Context ctx = Context::numeric(p);
      const PSVector f = random_table(p, n, g.raw());
      for (int k = -(n + 4); k < -(n + 1); ++k) EXPECT_TRUE(whittaker_coefficient(f, k, ctx).is_zero()) << k;
      const LaurentA e1 = LaurentA::monomial(ctx.field.one(), 1, 0) + LaurentA::monomial(ctx.field.one(), 0, 1);
      const LaurentA e2 = LaurentA::monomial(ctx.field.one(), 1, 1);
      std::map<int, LaurentA> c;
      for (int k = n; k <= n + 5; ++k) c[k] = whittaker_coefficient(f, k, ctx);
      for (int k = n + 2; k <= n + 5; ++k) EXPECT_EQ(c[k], e1 * c[k - 1] - e2 * c[k - 2]) << k;
    }
}

TEST(Coefficient, Linearity) {
  Gen g(9);
  const Context ctx = Context::numeric(3);
  const PSVector a = random_table(3, 2, g.raw()), b = random_table(3, 1, g.raw());
  const LaurentA alpha = LaurentA::monomial(Field::rationals(), Rational(2, 3), 1, -1);
  const LaurentA beta = LaurentA::constant(Field::rationals(), -5);
  const PSVector combo = PSVector::lincomb({{alpha, a}, {beta, b}});
  for (int k = -3; k <= 4; ++k)
    EXPECT_EQ(whittaker_coefficient(combo, k, ctx),
              alpha * whittaker_coefficient(a, k, ctx) + beta * whittaker_coefficient(b, k, ctx));
}

TEST(Coefficient, ContextChecks) {
  EXPECT_THROW(whittaker_coefficient(random_table(3, 1, 1), 0, Context::numeric(2)), FieldMismatch);
  IntegrationPlan bad = make_plan(1, -2, 0);
  bad.cyclo_level = 1;
  EXPECT_THROW(twisted_integral(PSVector::phi_w(), -2, bad, Context::numeric(3)), ConductorExceeded);
  EXPECT_THROW(twisted_integral(PSVector::phi_w(), 0, make_plan(1, 0, 0), Context::symbolic()), Error);
}
