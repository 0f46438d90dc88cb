#pragma once

// Q_p modelled inside Q: valuations, 2x2 matrices over Z[1/p] (and Z_(p)),
// Iwasawa decomposition, the flag space P^1(Z/p^n), the additive character
// psi of conductor Z_p, and Haar integrals of locally constant functions.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/scalars.hpp"

namespace toric {

/// p-adic valuation; nullopt stands for +infinity (x = 0).
std::optional<int> valuation(const Rational& x, int p);
int valuation(const mpz_class& x, int p);

std::int64_t int_pow(int p, int e);

/// x mod p^n for p-integral x (NotIntegral otherwise), in [0, p^n).
std::int64_t residue(const Rational& x, int p, int n);

class PadicMatrix {
 public:
  PadicMatrix(int p, Rational a, Rational b, Rational c, Rational d);

  static PadicMatrix identity(int p);
  /// The Weyl representative [[0,1],[1,0]].
  static PadicMatrix weyl(int p);
  /// [[0,1],[-1,0]], the signed alternative.
  static PadicMatrix weyl_signed(int p);
  static PadicMatrix unipotent(int p, const Rational& x);  // [[1,x],[0,1]]
  static PadicMatrix diag(int p, const Rational& t1, const Rational& t2);

  int prime() const { return p_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational det() const { return a_ * d_ - b_ * c_; }
  PadicMatrix inverse() const;
  /// Smallest valuation among the entries.
  int min_valuation() const;
  /// Entries in Z_p and determinant a unit.
  bool in_maximal_compact() const;
  /// Congruent to the identity modulo p^n.
  bool in_congruence_subgroup(int n) const;

  friend PadicMatrix operator*(const PadicMatrix& x, const PadicMatrix& y);
  friend bool operator==(const PadicMatrix&, const PadicMatrix&) = default;

  std::string str() const;

 private:
  int p_;
  Rational a_, b_, c_, d_;
};

/// g = b k with b upper triangular and k in GL_2(Z_p); a1, a2 are the
/// valuations of the diagonal of b.
struct IwasawaFactors {
  int a1 = 0;
  int a2 = 0;
  PadicMatrix borel;
  PadicMatrix compact;
};

IwasawaFactors iwasawa_decompose(const PadicMatrix& g);

/// A point of P^1(Z/p^n) in bottom-row coordinates: Affine(u) is (u : 1),
/// Infinity(v) is (1 : v) with p | v.
struct P1Class {
  enum class Branch { Affine, Infinity };
  int p = 2;
  int n = 1;
  Branch branch = Branch::Affine;
  std::int64_t value = 0;

  static P1Class affine(int p, int n, std::int64_t u);
  static P1Class infinity(int p, int n, std::int64_t v);

  /// "[u:1]" or "[1:v]".
  std::string str() const;
  /// Parses the str() form at the given prime and level.
  static P1Class parse(const std::string& text, int p, int n);

  friend auto operator<=>(const P1Class&, const P1Class&) = default;
};

/// Class of k in B(Z_p)\GL_2(Z_p)/K_n via the bottom row.
P1Class p1_class_of(const PadicMatrix& k, int n);

/// All p^n + p^{n-1} classes: affine points in order, then infinity points.
std::vector<P1Class> p1_enumerate(int p, int n);

/// A matrix in GL_2(Z_p) lying in the given class.
PadicMatrix p1_representative(const P1Class& c);

/// Exponent e with psi(x) = zeta_{p^M}^e; ConductorExceeded if v(x) < -M.
std::int64_t psi_exponent(const Rational& x, int p, int M);
Cyclotomic psi_eval(const Rational& x, int p, int M);

/// Integral of psi(c x) over p^j Z_p for v(c) = vc, with vol(Z_p) = 1:
/// q^{-j} when vc + j >= 0 and 0 otherwise. The value of q is passed in so
/// the result is symbolic (Q(q)) or numeric (Q).
Scalar ball_character_integral(int j, int vc, const Scalar& q);

/// Integral of psi over the shell v(x) = m.
Scalar shell_character_integral(int m, const Scalar& q);

/// The points u = j / p^R for j in [0, p^{R+L}) representing
/// p^{-R} Z_p / p^L Z_p; each cell has measure p^{-L}.
struct HaarGrid {
  int p;
  int R;
  int L;

  std::int64_t size() const { return int_pow(p, R + L); }
  Rational point(std::int64_t j) const;
  Rational cell_measure() const;
};

/// Integral of a function that is constant on the grid cells and supported
/// inside p^{-R} Z_p.
template <typename Fn>
Rational haar_integral(const HaarGrid& grid, Fn&& fn) {
  Rational acc(0);
  const std::int64_t n = grid.size();
  for (std::int64_t j = 0; j < n; ++j) acc += fn(grid.point(j));
  return acc * grid.cell_measure();
}

}  // namespace toric
