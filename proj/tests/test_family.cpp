#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toric/errors.hpp"
#include "toric/family.hpp"

using namespace toric;
using toric::testing::Gen;

namespace {

const Field kQ = Field::rationals();

LaurentA mono(const Rational& c, int e1, int e2) { return LaurentA::monomial(kQ, c, e1, e2); }

std::vector<PSVector> sample_vectors(int p, Gen& g) {
  const PSVector t1 = random_table(p, 1, g.raw());
  const PSVector t2 = random_table(p, 2, g.raw());
  return {PSVector::sph(),
          PSVector::phi_w(),
          t1,
          t2,
          PSVector::translate(PadicMatrix::diag(p, p, 1), t1),
          PSVector::translate(g.matrix(p, -1, 1), t2),
          PSVector::lincomb({{mono(2, 1, 0), t1}, {mono(Rational(-1, 3), 0, -1), PSVector::phi_w()}})};
}

}  // namespace

TEST(ChiDelta, Examples) {
  const Context sym = Context::symbolic();
  const Field f = sym.field;
  EXPECT_EQ(chi_delta_value(0, 0, sym), LaurentA::constant(f.one()));
  EXPECT_EQ(chi_delta_value(1, 0, sym), LaurentA::monomial(f.one(), 1, 0));
  EXPECT_EQ(chi_delta_value(1, 1, sym), LaurentA::monomial(sym.q, 1, 1));
  EXPECT_EQ(chi_delta_value(2, -1, sym) * chi_delta_value(-1, 3, sym), chi_delta_value(1, 2, sym));
  EXPECT_EQ(chi_delta_value(0, 1, Context::numeric(5)), mono(5, 0, 1));
}

TEST(Evaluate, Examples) {
  const Context ctx = Context::numeric(3);
  EXPECT_EQ(evaluate(PSVector::sph(), PadicMatrix::diag(3, 3, 1), ctx), mono(1, 1, 0));
  EXPECT_TRUE(evaluate(PSVector::phi_w(), PadicMatrix::identity(3), ctx).is_zero());
  EXPECT_EQ(evaluate(PSVector::phi_w(), PadicMatrix::weyl(3), ctx), mono(1, 0, 0));
  EXPECT_TRUE(evaluate(PSVector(), PadicMatrix::weyl(3), ctx).is_zero());
}

TEST(Evaluate, TablePrimeAndFieldChecked) {
  const PSVector t = random_table(3, 1, 5);
  EXPECT_THROW(evaluate(t, PadicMatrix::identity(2), Context::numeric(2)), FieldMismatch);
  EXPECT_THROW(evaluate(t, PadicMatrix::identity(3), Context::symbolic()), FieldMismatch);
}

TEST(Table, CoverageIsExact) {
  PSVector::TableValues values;
  for (const auto& c : p1_enumerate(3, 1)) values.emplace(c, LaurentA(kQ));
  EXPECT_NO_THROW(PSVector::table(3, 1, kQ, values));
  auto missing = values;
  missing.erase(missing.begin());
  EXPECT_THROW(PSVector::table(3, 1, kQ, missing), ClassCoverageError);
  auto extra = values;
  extra.emplace(P1Class::affine(3, 2, 4), LaurentA(kQ));
  EXPECT_THROW(PSVector::table(3, 1, kQ, extra), ClassCoverageError);
  auto wrong_field = values;
  wrong_field.begin()->second = LaurentA(Field::rational_functions());
  EXPECT_THROW(PSVector::table(3, 1, kQ, wrong_field), FieldMismatch);
}

TEST(F0Table, ZeroPattern) {
  auto zeros = [](int p, int n) {
    std::vector<P1Class> z;
    const PSVector t = f0_table(p, n);
    for (const auto& [c, v] : t.table_values())
      if (v.is_zero()) z.push_back(c);
    return z;
  };
  EXPECT_EQ(zeros(3, 1), std::vector<P1Class>{P1Class::affine(3, 1, 0)});
  EXPECT_EQ(zeros(2, 2), (std::vector<P1Class>{P1Class::affine(2, 2, 0), P1Class::affine(2, 2, 2)}));
  for (int p : {2, 3, 5})
    EXPECT_EQ(f0_table(p, 2).table_values().at(p1_class_of(PadicMatrix::weyl(p), 2)), mono(1, 0, 0));
}

TEST(F0Table, AgreesWithPhiW) {
  Gen g(12);
  for (int p : {2, 3, 5})
    for (int n : {1, 2}) {
      const Context ctx = Context::numeric(p);
      const PSVector table = f0_table(p, n);
      for (const auto& c : p1_enumerate(p, n)) {
        const PadicMatrix k = p1_representative(c);
        EXPECT_EQ(evaluate(table, k, ctx), evaluate(PSVector::phi_w(), k, ctx)) << c.str();
      }
      for (int t = 0; t < 30; ++t) {
        const PadicMatrix m = g.matrix(p);
        EXPECT_EQ(evaluate(table, m, ctx), evaluate(PSVector::phi_w(), m, ctx)) << m.str();
      }
    }
}

TEST(BigCellSplit, Examples) {
  const Context ctx = Context::numeric(3);
  const auto s = big_cell_split(PSVector::sph(), ctx);
  EXPECT_EQ(s.a_f, mono(1, 0, 0));
  EXPECT_TRUE(s.f_w.is_zero_combination());
  const auto w = big_cell_split(PSVector::phi_w(), ctx);
  EXPECT_TRUE(w.a_f.is_zero());
  EXPECT_EQ(simplify(w.f_w).terms().size(), 1u);
  EXPECT_EQ(simplify(w.f_w).terms()[0].second.kind(), PSVector::Kind::IwahoriPhiW);
  const PSVector t = random_table(3, 2, 77);
  EXPECT_EQ(big_cell_split(t, ctx).a_f, t.table_values().at(P1Class::affine(3, 2, 0)));
}

TEST(BigCellSplit, VanishesOnBorel) {
  Gen g(13);
  for (int p : {2, 3}) {
    const Context ctx = Context::numeric(p);
    for (const auto& f : sample_vectors(p, g)) {
      const auto s = big_cell_split(f, ctx);
      EXPECT_TRUE(evaluate(s.f_w, PadicMatrix::identity(p), ctx).is_zero());
      for (int t = 0; t < 10; ++t) EXPECT_TRUE(evaluate(s.f_w, g.upper_triangular(p), ctx).is_zero());
    }
  }
}

TEST(Family, Cocycle) {
  Gen g(14);
  for (int p : {2, 3, 5}) {
    const Context ctx = Context::numeric(p);
    for (const auto& f : sample_vectors(p, g))
      for (int t = 0; t < 15; ++t) {
        const PadicMatrix b = g.upper_triangular(p);
        const PadicMatrix x = g.matrix(p);
        const LaurentA factor = chi_delta_value(*valuation(b.a(), p), *valuation(b.d(), p), ctx);
        ASSERT_EQ(evaluate(f, b * x, ctx), factor * evaluate(f, x, ctx)) << f.describe();
      }
  }
}

TEST(Family, RightInvariance) {
  Gen g(15);
  for (int p : {2, 3, 5}) {
    const Context ctx = Context::numeric(p);
    for (const auto& f : sample_vectors(p, g)) {
      const int n = std::max(1, f.level());
      for (int t = 0; t < 15; ++t) {
        const PadicMatrix x = g.matrix(p);
        ASSERT_EQ(evaluate(f, x * g.congruence(p, n), ctx), evaluate(f, x, ctx)) << f.describe();
      }
    }
  }
}

TEST(Family, SymbolicSphIsSpherical) {
  Gen g(16);
  const Context ctx = Context::symbolic();
  for (int t = 0; t < 50; ++t) {
    const PadicMatrix k = g.matrix(2, 0, 2);
    if (!k.in_maximal_compact()) continue;
    EXPECT_EQ(evaluate(PSVector::sph(), k, ctx), LaurentA::constant(ctx.field.one()));
  }
}

TEST(Family, Levels) {
  EXPECT_EQ(PSVector::sph().level(), 0);
  EXPECT_EQ(PSVector::phi_w().level(), 1);
  const PSVector t = random_table(3, 2, 1);
  EXPECT_EQ(t.level(), 2);
  EXPECT_EQ(PSVector::translate(PadicMatrix::diag(3, 3, 1), t).level(), 3);
  EXPECT_EQ(PSVector::translate(PadicMatrix::diag(3, 3, 1), PSVector::sph()).level(), 1);
  EXPECT_EQ(PSVector::translate(PadicMatrix::identity(3), t).prime(), 3);
}

TEST(RandomTable, Deterministic) {
  const PSVector a = random_table(3, 1, 42), b = random_table(3, 1, 42);
  EXPECT_EQ(a.table_values(), b.table_values());
  EXPECT_EQ(a.table_values().size(), 4u);
  EXPECT_NE(random_table(3, 2, 42).table_values(), random_table(3, 2, 43).table_values());
  const PSVector c = random_table(5, 2, 9);
  for (const auto& [cls, v] : c.table_values()) {
    EXPECT_LE(v.size(), 3u);
    for (const auto& [e, coeff] : v.terms()) {
      EXPECT_LE(std::abs(e.e1), 2);
      EXPECT_LE(std::abs(e.e2), 2);
    }
  }
  const PSVector z = random_table(3, 2, 42, {true});
  for (const auto& [cls, v] : z.table_values()) EXPECT_TRUE(v.is_zero());
}
