#include "toric/localfield.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

std::int64_t int_pow(int p, int e) {
  if (e < 0) throw Error("negative exponent in int_pow");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

int valuation(const mpz_class& x, int p) {
  if (x == 0) throw Error("valuation of zero integer");
  mpz_class y = x;
  int v = 0;
  while (mpz_divisible_ui_p(y.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(y.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

std::optional<int> valuation(const Rational& x, int p) {
  if (x.is_zero()) return std::nullopt;
  return valuation(x.num(), p) - valuation(x.den(), p);
}

std::int64_t residue(const Rational& x, int p, int n) {
  if (x.is_zero()) return 0;
  if (*valuation(x, p) < 0) throw NotIntegral(x.str() + " at p=" + std::to_string(p));
  const mpz_class mod = static_cast<long>(int_pow(p, n));
  mpz_class num = x.num() % mod;
  mpz_class den_inv;
  mpz_class den = x.den();
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0 && n > 0)
    throw NotIntegral("denominator not invertible");
  mpz_class r = (num * den_inv) % mod;
  if (r < 0) r += mod;
  return r.get_si();
}

// ------------------------------------------------------------ PadicMatrix

PadicMatrix::PadicMatrix(int p, Rational a, Rational b, Rational c, Rational d)
    : p_(p), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw SingularMatrix();
}

PadicMatrix PadicMatrix::identity(int p) { return {p, 1, 0, 0, 1}; }
PadicMatrix PadicMatrix::weyl(int p) { return {p, 0, 1, 1, 0}; }
PadicMatrix PadicMatrix::weyl_signed(int p) { return {p, 0, 1, -1, 0}; }
PadicMatrix PadicMatrix::unipotent(int p, const Rational& x) { return {p, 1, x, 0, 1}; }
PadicMatrix PadicMatrix::diag(int p, const Rational& t1, const Rational& t2) { return {p, t1, 0, 0, t2}; }

PadicMatrix PadicMatrix::inverse() const {
  const Rational di = det().inv();
  return {p_, d_ * di, -b_ * di, -c_ * di, a_ * di};
}

int PadicMatrix::min_valuation() const {
  std::optional<int> m;
  for (const Rational* x : {&a_, &b_, &c_, &d_}) {
    auto v = valuation(*x, p_);
    if (v && (!m || *v < *m)) m = v;
  }
  return *m;  // nonzero determinant guarantees a nonzero entry
}

bool PadicMatrix::in_maximal_compact() const {
  return min_valuation() >= 0 && *valuation(det(), p_) == 0;
}

bool PadicMatrix::in_congruence_subgroup(int n) const {
  for (const Rational& x : {a_ - Rational(1), b_, c_, d_ - Rational(1)}) {
    auto v = valuation(x, p_);
    if (v && *v < n) return false;
  }
  return true;
}

PadicMatrix operator*(const PadicMatrix& x, const PadicMatrix& y) {
  if (x.p_ != y.p_) throw FieldMismatch("matrices at different primes");
  return {x.p_, x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
          x.c_ * y.b_ + x.d_ * y.d_};
}

std::string PadicMatrix::str() const {
  return "[[" + a_.str() + "," + b_.str() + "],[" + c_.str() + "," + d_.str() + "]]";
}

IwasawaFactors iwasawa_decompose(const PadicMatrix& g) {
  const int p = g.prime();
  const auto vc = valuation(g.c(), p);
  const auto vd = valuation(g.d(), p);
  // nullopt is +infinity
  const bool clear_lower = vd && (!vc || *vc >= *vd);
  if (clear_lower) {
    const Rational t = g.c() / g.d();
    PadicMatrix k(p, 1, 0, t, 1);
    PadicMatrix b(p, g.a() - g.b() * t, g.b(), 0, g.d());
    return {*valuation(b.a(), p), *valuation(b.d(), p), b, k};
  }
  const Rational t = g.d() / g.c();
  PadicMatrix k(p, 0, 1, 1, t);
  PadicMatrix b(p, g.b() - g.a() * t, g.a(), 0, g.c());
  return {*valuation(b.a(), p), *valuation(b.d(), p), b, k};
}

// ---------------------------------------------------------------- P1Class

P1Class P1Class::affine(int p, int n, std::int64_t u) {
  const std::int64_t m = int_pow(p, n);
  u %= m;
  if (u < 0) u += m;
  return {p, n, Branch::Affine, u};
}

P1Class P1Class::infinity(int p, int n, std::int64_t v) {
  const std::int64_t m = int_pow(p, n);
  v %= m;
  if (v < 0) v += m;
  if (v % p != 0) throw Error("infinity branch value must be divisible by p");
  return {p, n, Branch::Infinity, v};
}

std::string P1Class::str() const {
  if (branch == Branch::Affine) return "[" + std::to_string(value) + ":1]";
  return "[1:" + std::to_string(value) + "]";
}

P1Class P1Class::parse(const std::string& text, int p, int n) {
  auto fail = [&](const std::string& why) { return ParseError("class '" + text + "': " + why); };
  if (text.size() < 5 || text.front() != '[' || text.back() != ']') throw fail("expected [u:1] or [1:v]");
  const std::string body = text.substr(1, text.size() - 2);
  const auto colon = body.find(':');
  if (colon == std::string::npos || body.find(':', colon + 1) != std::string::npos) throw fail("expected one ':'");
  const std::string lhs = body.substr(0, colon), rhs = body.substr(colon + 1);
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) throw fail("bad residue '" + s + "'");
    const std::int64_t v = std::stoll(s);
    if (v >= int_pow(p, n)) throw fail("residue out of range for p^n");
    return v;
  };
  if (rhs == "1" && lhs != "1") return affine(p, n, number(lhs));
  if (lhs == "1" && rhs != "1") {
    const std::int64_t v = number(rhs);
    if (v % p != 0) throw fail("infinity residue must be divisible by p");
    return infinity(p, n, v);
  }
  if (lhs == "1" && rhs == "1") return affine(p, n, 1);
  throw fail("one coordinate must be 1");
}

P1Class p1_class_of(const PadicMatrix& k, int n) {
  if (!k.in_maximal_compact()) throw NotIntegral(k.str() + " is not in GL2(Z_p)");
  const int p = k.prime();
  const auto vd = valuation(k.d(), p);
  if (vd && *vd == 0) return P1Class::affine(p, n, residue(k.c() / k.d(), p, n));
  return P1Class::infinity(p, n, residue(k.d() / k.c(), p, n));
}

std::vector<P1Class> p1_enumerate(int p, int n) {
  if (n < 1) throw Error("p1_enumerate needs n >= 1");
  std::vector<P1Class> out;
  const std::int64_t m = int_pow(p, n);
  for (std::int64_t u = 0; u < m; ++u) out.push_back(P1Class::affine(p, n, u));
  for (std::int64_t v = 0; v < m; v += p) out.push_back(P1Class::infinity(p, n, v));
  return out;
}

PadicMatrix p1_representative(const P1Class& c) {
  const long x = static_cast<long>(c.value);
  if (c.branch == P1Class::Branch::Affine) return {c.p, 1, 0, x, 1};
  return {c.p, 0, 1, 1, x};
}

// -------------------------------------------------------------------- psi

std::int64_t psi_exponent(const Rational& x, int p, int M) {
  if (x.is_zero()) return 0;
  const int v = *valuation(x, p);
  if (v >= 0) return 0;
  if (v < -M) throw ConductorExceeded(x.str() + " needs level " + std::to_string(-v));
  return residue(x * Rational(static_cast<long>(int_pow(p, M))), p, M);
}

Cyclotomic psi_eval(const Rational& x, int p, int M) { return zeta_power(p, M, psi_exponent(x, p, M)); }

Scalar ball_character_integral(int j, int vc, const Scalar& q) {
  if (vc + j < 0) return q.field().zero();
  return q.pow(-j);
}

Scalar shell_character_integral(int m, const Scalar& q) {
  return ball_character_integral(m, 0, q) - ball_character_integral(m + 1, 0, q);
}

Rational HaarGrid::point(std::int64_t j) const {
  return Rational(mpq_class(mpz_class(static_cast<long>(j)), mpz_class(static_cast<long>(int_pow(p, R)))));
}

Rational HaarGrid::cell_measure() const { return Rational(static_cast<long>(p)).pow(-L); }

}  // namespace toric
