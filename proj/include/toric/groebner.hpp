#pragma once

// Groebner bases in k[Y1, Y2, u] and two-generator membership in the
// Laurent ring k[Y1^{+-1}, Y2^{+-1}] = k[Y1, Y2, u]/(1 - u Y1 Y2).

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/laurent.hpp"
#include "toric/scalars.hpp"

namespace toric {

using Mono = std::array<int, 3>;  // exponents of Y1, Y2, u

enum class TermOrder {
  Lex,          // Y1 > Y2 > u
  GrevLex,      // Y1 > Y2 > u
  Elimination,  // u-degree first, grevlex on Y1, Y2 to break ties
};

/// Returns true when a is strictly greater than b.
bool mono_greater(TermOrder order, const Mono& a, const Mono& b);

class Poly {
 public:
  explicit Poly(Field field = Field::rationals()) : field_(field) {}
  static Poly term(const Scalar& c, const Mono& m);

  /// Y^{-min} a, i.e. the polynomial obtained by clearing the monomial
  /// content; shift receives min_exponents(a).
  static Poly from_laurent(const LaurentA& a, Exponent* shift = nullptr);
  /// Substitutes u = (Y1 Y2)^{-1}.
  LaurentA to_laurent() const;

  Field field() const { return field_; }
  const std::map<Mono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Leading monomial and coefficient; requires a nonzero polynomial.
  std::pair<Mono, Scalar> leading(TermOrder order) const;

  void add_term(const Scalar& c, const Mono& m);
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& s, const Poly& a);
  Poly times_term(const Scalar& c, const Mono& m) const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.terms_ == b.terms_; }

  std::string str() const;

 private:
  Field field_;
  std::map<Mono, Scalar> terms_;
};

/// Reduced Groebner basis with, for every element, cofactors expressing it in
/// terms of the input generators.
struct GroebnerBasis {
  TermOrder order = TermOrder::GrevLex;
  Field field;
  std::size_t num_generators = 0;
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;  // basis[i] = sum_j cofactors[i][j] * gens[j]

  /// Remainder of f after full reduction; if quotient is given it receives
  /// cofactors c_j with f = remainder + sum_j c_j * gens[j].
  Poly reduce(const Poly& f, std::vector<Poly>* cofactors_out = nullptr) const;
  bool is_unit_ideal() const;
};

GroebnerBasis buchberger(const std::vector<Poly>& gens, TermOrder order = TermOrder::GrevLex);

/// Every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const GroebnerBasis& gb);

/// Laurent-ring ideal given by a list of generators (zero generators dropped).
class IdealPresentation {
 public:
  IdealPresentation(Field field, std::vector<LaurentA> gens);
  Field field() const { return field_; }
  const std::vector<LaurentA>& gens() const { return gens_; }
  std::string str() const;

 private:
  Field field_;
  std::vector<LaurentA> gens_;
};

/// Cofactors with h = sum_i cofactors[i] * gens[i].
struct MembershipCertificate {
  std::vector<LaurentA> cofactors;
};

/// Direct expansion check of a certificate; shares no code with the
/// Groebner path.
bool verify_certificate(const LaurentA& h, const IdealPresentation& ideal, const MembershipCertificate& cert);

/// Prepared membership test for one ideal; the Groebner basis of the
/// polynomialized, saturated ideal is computed once.
class LaurentIdeal {
 public:
  explicit LaurentIdeal(IdealPresentation ideal);

  const IdealPresentation& presentation() const { return ideal_; }
  const GroebnerBasis& basis() const { return gb_; }
  bool is_proper() const { return !gb_.is_unit_ideal(); }

  /// Certificate when h lies in the ideal, nullopt otherwise. Every returned
  /// certificate has been re-verified by expansion (CertificateCheckFailed).
  std::optional<MembershipCertificate> membership(const LaurentA& h) const;

 private:
  IdealPresentation ideal_;
  std::vector<Exponent> shifts_;
  GroebnerBasis gb_;
};

std::optional<MembershipCertificate> laurent_membership(const LaurentA& h, const IdealPresentation& ideal);

struct IdealComparison {
  bool equal = false;
  /// certificates for each generator of the second ideal in the first, then
  /// each generator of the first in the second; nullopt where membership fails.
  std::vector<std::optional<MembershipCertificate>> second_in_first;
  std::vector<std::optional<MembershipCertificate>> first_in_second;
};

IdealComparison ideal_equal(const IdealPresentation& a, const IdealPresentation& b);

/// gcd in k[Y1, Y2] of two polynomials, up to a nonzero scalar.
Poly bivariate_gcd(const Poly& a, const Poly& b);

/// True iff the ideal is generated by a single element. Computes the gcd of
/// the polynomialized generators and tests whether it lies in the ideal.
bool is_principal_pair(const IdealPresentation& ideal);

}  // namespace toric
