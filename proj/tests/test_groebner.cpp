#include <gtest/gtest.h>

#include "test_util.hpp"
#include "toric/errors.hpp"
#include "toric/groebner.hpp"

using namespace toric;
using toric::testing::Gen;

namespace {

const Field kQq = Field::rational_functions();

Poly var(Field f, int i) {
  Mono m{0, 0, 0};
  m[static_cast<std::size_t>(i)] = 1;
  return Poly::term(f.one(), m);
}
Poly constant(Field f, const Scalar& c) { return Poly::term(c, {0, 0, 0}); }

struct Setting {
  Field field;
  Scalar q;
};

std::vector<Setting> settings() {
  std::vector<Setting> s{{kQq, Scalar(RationalFunction::q())}};
  for (long q : {2, 3, 4, 5}) s.push_back({Field::rationals(), Scalar(Rational(q))});
  return s;
}

LaurentA one(Field f) { return LaurentA::constant(f.one()); }

// (1 - Y1, 1 - q^{-1} Y1 Y2^{-1})
IdealPresentation theorem_pair(const Setting& s) {
  return IdealPresentation(s.field, {one(s.field) - LaurentA::monomial(s.field.one(), 1, 0),
                                     one(s.field) - LaurentA::monomial(s.q.inv(), 1, -1)});
}
IdealPresentation alternate_pair(const Setting& s) {
  return IdealPresentation(s.field, {one(s.field) - LaurentA::monomial(s.q, 0, 1),
                                     one(s.field) - LaurentA::monomial(s.q.inv(), 1, -1)});
}

}  // namespace

TEST(Buchberger, AlreadyBasis) {
  const Field f = Field::rationals();
  const auto gb = buchberger({var(f, 0), var(f, 1)});
  ASSERT_EQ(gb.basis.size(), 2u);
  EXPECT_TRUE(is_groebner_basis(gb));
  EXPECT_FALSE(gb.is_unit_ideal());
  EXPECT_TRUE(gb.reduce(var(f, 0) * var(f, 1) + var(f, 1)).is_zero());
}

TEST(Buchberger, UnitIdeal) {
  const Field f = Field::rationals();
  const auto gb = buchberger({constant(f, Rational(1))});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_TRUE(gb.is_unit_ideal());
  // Y1 and 1 - Y1 generate the unit ideal, with tracked cofactors
  const auto gb2 = buchberger({var(f, 0), constant(f, Rational(1)) - var(f, 0)});
  EXPECT_TRUE(gb2.is_unit_ideal());
}

TEST(Buchberger, CommonZeroMeansProper) {
  const Field f = Field::rationals();
  for (long c : {2, -3, 7}) {
    const Poly g1 = constant(f, Rational(1)) - var(f, 0);
    const Poly g2 = constant(f, Rational(1)) - Scalar(Rational(c)) * var(f, 1);
    const auto gb = buchberger({g1, g2});
    EXPECT_TRUE(is_groebner_basis(gb));
    EXPECT_FALSE(gb.reduce(constant(f, Rational(1))).is_zero());
    // the common zero (1, 1/c) kills every basis element
    for (const auto& b : gb.basis) {
      const Scalar v = b.to_laurent().evaluate(Rational(1), Rational(c).inv());
      EXPECT_TRUE(v.is_zero());
    }
  }
}

TEST(Buchberger, CofactorsReproduceBasis) {
  Gen g(21);
  const Field f = Field::rationals();
  for (int t = 0; t < 25; ++t) {
    std::vector<Poly> gens;
    for (int i = 0; i < 2; ++i) {
      Poly p(f);
      for (int j = 0; j < 3; ++j)
        p.add_term(g.nonzero_rational(), {static_cast<int>(g.integer(0, 2)), static_cast<int>(g.integer(0, 2)),
                                          static_cast<int>(g.integer(0, 1))});
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    for (auto order : {TermOrder::GrevLex, TermOrder::Lex}) {
      const auto gb = buchberger(gens, order);
      EXPECT_TRUE(is_groebner_basis(gb));
      for (std::size_t i = 0; i < gb.basis.size(); ++i) {
        Poly sum(f);
        for (std::size_t j = 0; j < gens.size(); ++j) sum += gb.cofactors[i][j] * gens[j];
        EXPECT_EQ(sum, gb.basis[i]);
      }
      for (const auto& gen : gens) EXPECT_TRUE(gb.reduce(gen).is_zero());
      // reduce() tracks a quotient: f = rem + sum c_j g_j
      const Poly probe = var(f, 0) * var(f, 1) * var(f, 1) + var(f, 2) + constant(f, Rational(3));
      std::vector<Poly> cof;
      const Poly rem = gb.reduce(probe, &cof);
      Poly back = rem;
      for (std::size_t j = 0; j < gens.size(); ++j) back += cof[j] * gens[j];
      EXPECT_EQ(back, probe);
    }
  }
}

TEST(Buchberger, TheoremIdealReducedBasis) {
  for (const auto& s : settings()) {
    const LaurentIdeal ideal(theorem_pair(s));
    const auto& basis = ideal.basis().basis;
    ASSERT_EQ(basis.size(), 3u) << s.q.str();
    // Y1 - 1, Y2 - 1/q, u - q in some order
    const Scalar vals[3] = {s.field.one(), s.q.inv(), s.q};
    for (const auto& b : basis) {
      EXPECT_EQ(b.size(), 2u);
      const auto [m, c] = b.leading(TermOrder::GrevLex);
      EXPECT_TRUE(c.is_one());
      const int idx = m[0] ? 0 : (m[1] ? 1 : 2);
      EXPECT_EQ(b.terms().at({0, 0, 0}), -vals[idx]);
    }
  }
}

TEST(Membership, GeneratorsHaveTrivialCertificates) {
  for (const auto& s : settings()) {
    const auto ideal = theorem_pair(s);
    for (std::size_t i = 0; i < 2; ++i) {
      const auto cert = laurent_membership(ideal.gens()[i], ideal);
      ASSERT_TRUE(cert);
      EXPECT_EQ(cert->cofactors[i], one(s.field));
      EXPECT_TRUE(cert->cofactors[1 - i].is_zero());
    }
  }
}

TEST(Membership, AlternateGenerator) {
  for (const auto& s : settings()) {
    const auto ideal = theorem_pair(s);
    const LaurentA h = one(s.field) - LaurentA::monomial(s.q, 0, 1);
    // The documented certificate verifies...
    const LaurentA c = LaurentA::monomial(s.q, -1, 1);
    EXPECT_TRUE(verify_certificate(h, ideal, {{c, -c}}));
    // ...and the engine returns a certificate of its own that verifies too.
    const auto cert = laurent_membership(h, ideal);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(verify_certificate(h, ideal, *cert));
  }
}

TEST(Membership, OneIsNotMember) {
  for (const auto& s : settings()) {
    EXPECT_FALSE(laurent_membership(one(s.field), theorem_pair(s)).has_value()) << s.q.str();
    EXPECT_TRUE(LaurentIdeal(theorem_pair(s)).is_proper());
    // soundness anchor: both generators vanish at (1, 1/q)
    const auto ideal = theorem_pair(s);
    for (const auto& g : ideal.gens()) EXPECT_TRUE(g.evaluate(s.field.one(), s.q.inv()).is_zero());
  }
}

TEST(Membership, ZeroIsMember) {
  const Setting s = settings()[0];
  const auto cert = laurent_membership(LaurentA(s.field), theorem_pair(s));
  ASSERT_TRUE(cert);
  EXPECT_TRUE(verify_certificate(LaurentA(s.field), theorem_pair(s), *cert));
}

TEST(Membership, CompletenessOnRandomCombinations) {
  Gen g(33);
  for (const auto& s : {settings()[0], settings()[2]}) {
    const auto ideal = theorem_pair(s);
    const LaurentIdeal prepared(ideal);
    for (int t = 0; t < 100; ++t) {
      const LaurentA r1 = g.laurent(s.field, 3), r2 = g.laurent(s.field, 3);
      const LaurentA h = r1 * ideal.gens()[0] + r2 * ideal.gens()[1];
      const auto cert = prepared.membership(h);
      ASSERT_TRUE(cert) << h.str();
      EXPECT_TRUE(verify_certificate(h, ideal, *cert));
      // adding a monomial unit escapes the ideal: it is nonzero at (1, 1/q)
      const LaurentA off = h + LaurentA::monomial(s.field.one(), 1, 2);
      EXPECT_FALSE(prepared.membership(off).has_value());
    }
  }
}

TEST(Membership, VerifierRejectsWrongCofactors) {
  const Setting s = settings()[0];
  const auto ideal = theorem_pair(s);
  EXPECT_FALSE(verify_certificate(one(s.field), ideal, {{one(s.field), one(s.field)}}));
  EXPECT_FALSE(verify_certificate(ideal.gens()[0], ideal, {{one(s.field)}}));
}

TEST(IdealEqual, TheoremPresentations) {
  for (const auto& s : settings()) {
    const auto cmp = ideal_equal(theorem_pair(s), alternate_pair(s));
    EXPECT_TRUE(cmp.equal);
    ASSERT_EQ(cmp.second_in_first.size() + cmp.first_in_second.size(), 4u);
    for (const auto* side : {&cmp.second_in_first, &cmp.first_in_second})
      for (const auto& c : *side) EXPECT_TRUE(c.has_value());
  }
}

TEST(IdealEqual, PaddedAndUnit) {
  const Field f = Field::rationals();
  const LaurentA y1 = LaurentA::monomial(f.one(), 1, 0);
  EXPECT_TRUE(ideal_equal(IdealPresentation(f, {y1}), IdealPresentation(f, {y1, LaurentA(f)})).equal);
  const Setting s = settings()[0];
  EXPECT_FALSE(ideal_equal(theorem_pair(s), IdealPresentation(s.field, {one(s.field)})).equal);
}

TEST(Principal, Examples) {
  for (const auto& s : settings()) EXPECT_FALSE(is_principal_pair(theorem_pair(s))) << s.q.str();
  const Field f = Field::rationals();
  const LaurentA g1 = one(f) - LaurentA::monomial(f.one(), 1, 0);
  const LaurentA g2 = g1 * (one(f) - LaurentA::monomial(f.one(), 0, 1));
  EXPECT_TRUE(is_principal_pair(IdealPresentation(f, {g1, g2})));
  const LaurentA y1 = LaurentA::monomial(f.one(), 1, 0);
  EXPECT_TRUE(is_principal_pair(IdealPresentation(f, {y1, y1})));
  // coprime generators with no common zero: the unit ideal is principal
  EXPECT_TRUE(is_principal_pair(IdealPresentation(f, {g1, g1 + LaurentA::constant(f, Rational(2))})));
}

TEST(BivariateGcd, RecoversCommonFactor) {
  Gen g(44);
  const Field f = Field::rationals();
  for (int t = 0; t < 30; ++t) {
    const LaurentA a = g.laurent(f, 3, 2), b = g.laurent(f, 3, 2);
    const LaurentA common = one(f) - LaurentA::monomial(f.embed(g.nonzero_rational()), 1, 1);
    if (a.is_zero() || b.is_zero()) continue;
    const Poly pa = Poly::from_laurent(a * common), pb = Poly::from_laurent(b * common);
    const Poly d = bivariate_gcd(pa, pb);
    EXPECT_TRUE(divide_exact(d.to_laurent(), common).has_value()) << d.str();
    EXPECT_TRUE(divide_exact(a * common, d.to_laurent()).has_value());
    EXPECT_TRUE(divide_exact(b * common, d.to_laurent()).has_value());
  }
}
