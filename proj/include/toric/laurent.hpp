#pragma once

// Laurent polynomials in Y1, Y2 (Y_i = q^{-1/2} X_i), series in Z = q^{1/2} X
// with Laurent-polynomial coefficients, and fractions of Laurent polynomials.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "toric/scalars.hpp"

namespace toric {

struct Exponent {
  int e1 = 0;
  int e2 = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

class LaurentA {
 public:
  using TermMap = std::map<Exponent, Scalar>;

  explicit LaurentA(Field field = Field::rationals()) : field_(field) {}

  static LaurentA constant(const Scalar& c);
  static LaurentA monomial(const Scalar& c, int e1, int e2);
  static LaurentA constant(Field f, const Rational& c) { return constant(f.embed(c)); }
  static LaurentA monomial(Field f, const Rational& c, int e1, int e2) { return monomial(f.embed(c), e1, e2); }

  Field field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(int e1, int e2) const;

  /// Adds c * Y1^e1 Y2^e2, dropping the term if it cancels.
  void add_term(const Scalar& c, Exponent e);

  LaurentA operator-() const;
  LaurentA& operator+=(const LaurentA& o);
  LaurentA& operator-=(const LaurentA& o);
  friend LaurentA operator+(LaurentA a, const LaurentA& b) { return a += b; }
  friend LaurentA operator-(LaurentA a, const LaurentA& b) { return a -= b; }
  friend LaurentA operator*(const LaurentA& a, const LaurentA& b);
  friend LaurentA operator*(const Scalar& s, const LaurentA& a);
  friend bool operator==(const LaurentA& a, const LaurentA& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  /// Multiplies by Y1^e1 Y2^e2.
  LaurentA shifted(int e1, int e2) const;
  LaurentA pow(int e) const;

  /// Componentwise minimum / maximum exponents; (0,0) for zero.
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  /// Substitutes values for Y1, Y2 (both nonzero when exponents are negative).
  Scalar evaluate(const Scalar& y1, const Scalar& y2) const;

  /// Internal-coordinate rendering, e.g. "1 - (1/q)*Y1*Y2^-1".
  std::string str() const;

 private:
  void check_field(const LaurentA& o) const;

  Field field_;
  TermMap terms_;
};

/// Units of A are the nonzero monomials.
bool is_unit(const LaurentA& a);

/// Quotient h/d when d divides h in the Laurent ring, otherwise nullopt.
std::optional<LaurentA> divide_exact(const LaurentA& h, const LaurentA& d);

/// Prints c q^e Y1^a Y2^b as c q^{e-(a+b)/2} X1^a X2^b.
std::string to_X_display(const LaurentA& a);

/// Finite series sum_k c_k Z^k with a declared window [kmin, kmax].
class ZPoly {
 public:
  ZPoly(Field field, int kmin, int kmax);

  Field field() const { return field_; }
  int kmin() const { return kmin_; }
  int kmax() const { return kmax_; }
  const std::map<int, LaurentA>& coeffs() const { return coef_; }

  /// Zero outside the window or where unset.
  LaurentA coeff(int k) const;
  void set(int k, const LaurentA& c);
  bool is_zero() const { return coef_.empty(); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const Scalar& s, const ZPoly& a);
  friend bool operator==(const ZPoly& a, const ZPoly& b);

  std::string str() const;

 private:
  Field field_;
  int kmin_;
  int kmax_;
  std::map<int, LaurentA> coef_;
};

/// Multiplies I(Z) by (1 - Y1 Z)(1 - Y2 Z) and keeps exponents <= bound.
/// Coefficients of the product are known exactly for k <= kmax; every one in
/// (bound, kmax] must vanish, otherwise TailViolation. Requires
/// kmax >= bound + 2.
ZPoly zpoly_mul_clear(const ZPoly& series, int bound);

/// Sum of all coefficients (Z = 1).
LaurentA eval_Z1(const ZPoly& poly);

/// Element of Q(A) as an unreduced pair.
class FractionA {
 public:
  FractionA(LaurentA num, LaurentA den);

  const LaurentA& num() const { return num_; }
  const LaurentA& den() const { return den_; }

  /// The value as an element of A, if it lies there.
  std::optional<LaurentA> in_A() const { return divide_exact(num_, den_); }

  friend bool operator==(const FractionA& a, const FractionA& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str() const;

 private:
  LaurentA num_;
  LaurentA den_;
};

}  // namespace toric
