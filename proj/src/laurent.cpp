#include "toric/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

LaurentA LaurentA::constant(const Scalar& c) { return monomial(c, 0, 0); }

LaurentA LaurentA::monomial(const Scalar& c, int e1, int e2) {
  LaurentA r(c.field());
  r.add_term(c, {e1, e2});
  return r;
}

Scalar LaurentA::coeff(int e1, int e2) const {
  auto it = terms_.find({e1, e2});
  return it == terms_.end() ? field_.zero() : it->second;
}

void LaurentA::add_term(const Scalar& c, Exponent e) {
  if (c.field() != field_) throw FieldMismatch(c.field().name() + " term in " + field_.name() + " polynomial");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void LaurentA::check_field(const LaurentA& o) const {
  if (field_ != o.field_) throw FieldMismatch(field_.name() + " vs " + o.field_.name());
}

LaurentA LaurentA::operator-() const {
  LaurentA r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentA& LaurentA::operator+=(const LaurentA& o) {
  check_field(o);
  for (const auto& [e, c] : o.terms_) add_term(c, e);
  return *this;
}

LaurentA& LaurentA::operator-=(const LaurentA& o) {
  check_field(o);
  for (const auto& [e, c] : o.terms_) add_term(-c, e);
  return *this;
}

LaurentA operator*(const LaurentA& a, const LaurentA& b) {
  a.check_field(b);
  LaurentA r(a.field_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ca * cb, {ea.e1 + eb.e1, ea.e2 + eb.e2});
  return r;
}

LaurentA operator*(const Scalar& s, const LaurentA& a) {
  if (s.field() != a.field_) throw FieldMismatch(s.field().name() + " scalar on " + a.field_.name());
  LaurentA r(a.field_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
  return r;
}

LaurentA LaurentA::shifted(int e1, int e2) const {
  LaurentA r(field_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(Exponent{e.e1 + e1, e.e2 + e2}, c);
  return r;
}

LaurentA LaurentA::pow(int e) const {
  if (e < 0) {
    if (!is_unit(*this)) throw DivisionByZero();
    const auto& [ex, c] = *terms_.begin();
    return monomial(c.inv(), -ex.e1, -ex.e2).pow(-e);
  }
  LaurentA r = constant(field_.one());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Exponent LaurentA::min_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) m = {std::min(m.e1, e.e1), std::min(m.e2, e.e2)};
  return m;
}

Exponent LaurentA::max_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) m = {std::max(m.e1, e.e1), std::max(m.e2, e.e2)};
  return m;
}

Scalar LaurentA::evaluate(const Scalar& y1, const Scalar& y2) const {
  Scalar acc = field_.zero();
  for (const auto& [e, c] : terms_) acc += c * y1.pow(e.e1) * y2.pow(e.e2);
  return acc;
}

namespace {

// A sign, product or quotient outside exponent parentheses.
bool is_compound(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (depth == 0 && std::string_view("+-*/ ").find(s[i]) != std::string_view::npos) return true;
  }
  return false;
}

std::string var_power(const char* name, int e) {
  std::string s = name;
  if (e == 1) return s;
  if (e < 0) return s + "^(" + std::to_string(e) + ")";
  return s + "^" + std::to_string(e);
}

}  // namespace

std::string LaurentA::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool neg = false;
    if (!is_compound(cs) && cs[0] == '-') {
      neg = true;
      cs.erase(cs.begin());
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    const bool unit_coeff = cs == "1";
    bool wrote = false;
    if (!unit_coeff || (e.e1 == 0 && e.e2 == 0)) {
      os << (is_compound(cs) ? "(" + cs + ")" : cs);
      wrote = true;
    }
    if (e.e1 != 0) {
      os << (wrote ? "*" : "") << var_power("Y1", e.e1);
      wrote = true;
    }
    if (e.e2 != 0) os << (wrote ? "*" : "") << var_power("Y2", e.e2);
  }
  return os.str();
}

bool is_unit(const LaurentA& a) { return a.size() == 1; }

namespace {

// Exact division of polynomials (all exponents >= 0) under lex order.
std::optional<LaurentA> divide_polynomial(LaurentA h, const LaurentA& d) {
  const auto lead_d = std::prev(d.terms().end());
  const Scalar lead_inv = lead_d->second.inv();
  LaurentA quot(h.field());
  while (!h.is_zero()) {
    const auto lead_h = std::prev(h.terms().end());
    const int s1 = lead_h->first.e1 - lead_d->first.e1;
    const int s2 = lead_h->first.e2 - lead_d->first.e2;
    if (s1 < 0 || s2 < 0) return std::nullopt;
    const LaurentA t = LaurentA::monomial(lead_h->second * lead_inv, s1, s2);
    quot += t;
    h -= t * d;
  }
  return quot;
}

}  // namespace

std::optional<LaurentA> divide_exact(const LaurentA& h, const LaurentA& d) {
  if (d.is_zero()) throw DivisionByZero();
  if (h.field() != d.field()) throw FieldMismatch(h.field().name() + " vs " + d.field().name());
  if (h.is_zero()) return LaurentA(h.field());
  const Exponent mh = h.min_exponents();
  const Exponent md = d.min_exponents();
  auto q = divide_polynomial(h.shifted(-mh.e1, -mh.e2), d.shifted(-md.e1, -md.e2));
  if (!q) return std::nullopt;
  return q->shifted(mh.e1 - md.e1, mh.e2 - md.e2);
}

namespace {

// Splits a coefficient into (c, e) with coefficient == c * q^e when the
// coefficient is a monomial in q; otherwise e = 0 and c is the whole thing.
std::pair<std::string, Rational> split_q_power(const Scalar& c) {
  if (c.field().kind != Field::Kind::Qq) return {c.str(), Rational(0)};
  const auto& rf = c.as_rational_function();
  const auto& num = rf.num().coeffs();
  const auto& den = rf.den().coeffs();
  int nz_num = 0, nz_den = 0, dn = 0, dd = 0;
  for (std::size_t i = 0; i < num.size(); ++i)
    if (!num[i].is_zero()) ++nz_num, dn = static_cast<int>(i);
  for (std::size_t i = 0; i < den.size(); ++i)
    if (!den[i].is_zero()) ++nz_den, dd = static_cast<int>(i);
  if (nz_num == 1 && nz_den == 1) return {num[static_cast<std::size_t>(dn)].str(), Rational(dn - dd)};
  return {c.str(), Rational(0)};
}

std::string q_power(const Rational& e) {
  if (e.is_zero()) return "";
  if (e.is_one()) return "q";
  return "q^(" + e.str() + ")";
}

}  // namespace

std::string to_X_display(const LaurentA& a) {
  if (a.is_zero()) return "0";
  std::vector<std::pair<Exponent, Scalar>> terms(a.terms().begin(), a.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int dx = std::abs(x.first.e1) + std::abs(x.first.e2);
    const int dy = std::abs(y.first.e1) + std::abs(y.first.e2);
    if (dx != dy) return dx < dy;
    return std::make_pair(-x.first.e1, -x.first.e2) < std::make_pair(-y.first.e1, -y.first.e2);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    auto [cs, qe] = split_q_power(c);
    qe -= Rational(e.e1 + e.e2, 2);
    bool neg = false;
    if (!is_compound(cs) && cs[0] == '-') {
      neg = true;
      cs.erase(cs.begin());
    }
    if (first) os << (neg ? "-" : "");
    else os << (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    const std::string qs = q_power(qe);
    const bool bare = qs.empty() && e.e1 == 0 && e.e2 == 0;
    if (cs != "1" || bare) factors.push_back(is_compound(cs) ? "(" + cs + ")" : cs);
    if (!qs.empty()) factors.push_back(qs);
    if (e.e1 != 0) factors.push_back(var_power("X1", e.e1));
    if (e.e2 != 0) factors.push_back(var_power("X2", e.e2));
    for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "·" : "") << factors[i];
  }
  return os.str();
}

// ------------------------------------------------------------------- ZPoly

ZPoly::ZPoly(Field field, int kmin, int kmax) : field_(field), kmin_(kmin), kmax_(kmax) {
  if (kmin > kmax) throw Error("ZPoly window is empty");
}

LaurentA ZPoly::coeff(int k) const {
  auto it = coef_.find(k);
  return it == coef_.end() ? LaurentA(field_) : it->second;
}

void ZPoly::set(int k, const LaurentA& c) {
  if (k < kmin_ || k > kmax_) throw Error("ZPoly exponent " + std::to_string(k) + " outside window");
  if (c.field() != field_) throw FieldMismatch("ZPoly coefficient field");
  if (c.is_zero()) coef_.erase(k);
  else coef_.insert_or_assign(k, c);
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("ZPoly fields");
  ZPoly r(a.field_, std::max(a.kmin_, b.kmin_), std::min(a.kmax_, b.kmax_));
  for (int k = r.kmin_; k <= r.kmax_; ++k) r.set(k, a.coeff(k) + b.coeff(k));
  return r;
}

ZPoly operator*(const Scalar& s, const ZPoly& a) {
  ZPoly r(a.field_, a.kmin_, a.kmax_);
  for (const auto& [k, c] : a.coef_) r.set(k, s * c);
  return r;
}

bool operator==(const ZPoly& a, const ZPoly& b) { return a.field_ == b.field_ && a.coef_ == b.coef_; }

std::string ZPoly::str() const {
  if (coef_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : coef_) {
    os << (first ? "" : " + ") << "(" << c.str() << ")*Z^" << k;
    first = false;
  }
  return os.str();
}

ZPoly zpoly_mul_clear(const ZPoly& series, int bound) {
  if (series.kmax() < bound + 2)
    throw TailViolation("window top " + std::to_string(series.kmax()) + " leaves fewer than two guard coefficients above " +
                        std::to_string(bound));
  const Field f = series.field();
  const LaurentA e1 = LaurentA::monomial(f, Rational(1), 1, 0) + LaurentA::monomial(f, Rational(1), 0, 1);
  const LaurentA e2 = LaurentA::monomial(f, Rational(1), 1, 1);
  ZPoly out(f, series.kmin(), bound);
  for (int k = series.kmin(); k <= series.kmax(); ++k) {
    // Coefficients below kmin are taken as zero; callers choose kmin inside
    // the vanishing range.
    LaurentA c = series.coeff(k) - e1 * series.coeff(k - 1) + e2 * series.coeff(k - 2);
    if (k <= bound) {
      out.set(k, c);
    } else if (!c.is_zero()) {
      throw TailViolation("coefficient of Z^" + std::to_string(k) + " is " + c.str());
    }
  }
  return out;
}

LaurentA eval_Z1(const ZPoly& poly) {
  LaurentA acc(poly.field());
  for (const auto& [k, c] : poly.coeffs()) acc += c;
  return acc;
}

// --------------------------------------------------------------- FractionA

FractionA::FractionA(LaurentA num, LaurentA den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.field() != den_.field()) throw FieldMismatch("fraction parts");
}

std::string FractionA::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

}  // namespace toric
