#pragma once

// Exact coefficient fields: Q, Q(q) with q a formal symbol, and the
// cyclotomic fields Q(zeta_{p^M}) as Q[t]/Phi_{p^M}(t).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace toric {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& get() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inv() const;
  Rational pow(int e) const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

 private:
  mpq_class v_;
};

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& lead() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly scaled(const Rational& s) const;
  UPoly monic() const;
  Rational eval(const Rational& x) const;

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
  /// Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(const UPoly& a, const UPoly& b);
  /// Returns g = gcd(a, b) (monic) and s, t with s*a + t*b = g.
  static UPoly ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t);

  std::string str(std::string_view var) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Element of Q(q): reduced fraction with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(UPoly num, UPoly den);

  static RationalFunction q() { return RationalFunction(UPoly::monomial(Rational(1), 1), UPoly(Rational(1))); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction inv() const;
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Substitutes q = x; throws DivisionByZero at a pole.
  Rational eval(const Rational& x) const;
  std::string str() const;

 private:
  UPoly num_;
  UPoly den_;
};

/// Residue class modulo Phi_{p^M}(t) in dense coordinates.
class Cyclotomic {
 public:
  Cyclotomic(int p, int M);  // zero
  Cyclotomic(int p, int M, const Rational& c);
  /// Reduces an arbitrary polynomial in t modulo Phi_{p^M}.
  Cyclotomic(int p, int M, const UPoly& rep);

  int p() const { return p_; }
  int level() const { return M_; }
  /// p^{M-1}(p-1).
  int degree() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;

  static UPoly modulus(int p, int M);
  /// Reduces coefficients given for t^0..t^{n-1} (any n) in place; the
  /// result has exactly deg Phi coordinates.
  static std::vector<Rational> reduce(int p, int M, std::vector<Rational> coeffs);

  Cyclotomic inv() const;
  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.p_ == b.p_ && a.M_ == b.M_ && a.coords_ == b.coords_;
  }

  UPoly as_poly() const { return UPoly(coords_); }
  std::string str() const;

 private:
  Cyclotomic(int p, int M, std::vector<Rational> coords, bool /*reduced*/)
      : p_(p), M_(M), coords_(std::move(coords)) {}
  void check_same(const Cyclotomic& o) const;

  int p_;
  int M_;
  std::vector<Rational> coords_;
};

/// zeta_{p^M}^e, with e taken mod p^M.
Cyclotomic zeta_power(int p, int M, std::int64_t e);

/// The constant coordinate when all others vanish; NotRational otherwise.
Rational rational_part(const Cyclotomic& x);

class Scalar;

/// Which exact field a scalar lives in.
struct Field {
  enum class Kind { Q, Qq, Cyclotomic };
  Kind kind = Kind::Q;
  int p = 0;
  int M = 0;

  static Field rationals() { return {Kind::Q, 0, 0}; }
  static Field rational_functions() { return {Kind::Qq, 0, 0}; }
  static Field cyclotomic(int p, int M) { return {Kind::Cyclotomic, p, M}; }

  Scalar zero() const;
  Scalar one() const;
  Scalar embed(const Rational& r) const;
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// Tagged union over the three exact fields. Binary operations require both
/// operands to come from the same field.
class Scalar {
 public:
  using Repr = std::variant<Rational, RationalFunction, Cyclotomic>;

  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}            // NOLINT
  Scalar(RationalFunction r) : v_(std::move(r)) {}    // NOLINT
  Scalar(Cyclotomic c) : v_(std::move(c)) {}          // NOLINT

  Field field() const;
  const Repr& repr() const { return v_; }
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;
  const RationalFunction& as_rational_function() const;
  const Cyclotomic& as_cyclotomic() const;

  Scalar inv() const;
  Scalar pow(int e) const;
  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  Repr v_;
};

}  // namespace toric
