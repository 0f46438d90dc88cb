#include "toric/scalars.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

// ---------------------------------------------------------------- Rational

Rational::Rational(long n, long d) {
  if (d == 0) throw DivisionByZero();
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& x) {
    while (!x.empty() && (x.front() == ' ')) x.erase(x.begin());
    while (!x.empty() && (x.back() == ' ')) x.pop_back();
  };
  strip(s);
  auto valid_int = [](const std::string& x) {
    if (x.empty()) return false;
    std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
    if (i == x.size()) return false;
    for (; i < x.size(); ++i)
      if (x[i] < '0' || x[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  strip(ns);
  strip(ds);
  if (!valid_int(ns) || !valid_int(ds)) throw ParseError("invalid rational '" + s + "'");
  if (ns[0] == '+') ns.erase(ns.begin());
  if (ds[0] == '+') ds.erase(ds.begin());
  mpz_class n(ns, 10), d(ds, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class v(n, d);
  v.canonicalize();
  return Rational(v);
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ------------------------------------------------------------------- UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

UPoly UPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<std::size_t>(i)];
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& s) const {
  if (s.is_zero()) return {};
  UPoly r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return scaled(lead().inv());
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Rational> r = a.c_;
  const int db = b.degree();
  const Rational lead_inv = b.lead().inv();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int d = a.degree(); d >= db; --d) {
    const Rational c = r[static_cast<std::size_t>(d)] * lead_inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(d - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(d - db + j)] -= c * b.c_[static_cast<std::size_t>(j)];
  }
  quot = UPoly(std::move(q));
  rem = UPoly(std::move(r));
}

UPoly UPoly::gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly UPoly::ext_gcd(const UPoly& a, const UPoly& b, UPoly& s, UPoly& t) {
  UPoly r0 = a, r1 = b;
  UPoly s0(Rational(1)), s1, t0, t1(Rational(1));
  while (!r1.is_zero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = UPoly();
    t = UPoly();
    return r0;
  }
  const Rational li = r0.lead().inv();
  s = s0.scaled(li);
  t = t0.scaled(li);
  return r0.scaled(li);
}

namespace {

// sum c_d var^(d + shift), highest power first.
std::string power_sum(const std::vector<Rational>& c_, int shift, std::string_view var) {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(c_.size()) - 1; d >= 0; --d) {
    Rational c = c_[static_cast<std::size_t>(d)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    if (c.sign() < 0) c = -c;
    first = false;
    const int e = d + shift;
    if (e == 0) {
      os << c.str();
      continue;
    }
    if (!c.is_one()) os << c.str() << "*";
    os << var;
    if (e < 0) os << "^(" << e << ")";
    else if (e > 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace

std::string UPoly::str(std::string_view var) const { return power_sum(c_, 0, var); }

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = UPoly::gcd(num, den);
  UPoly qn, qd, r;
  UPoly::divmod(num, g, qn, r);
  UPoly::divmod(den, g, qd, r);
  const Rational li = qd.lead().inv();
  num_ = qn.scaled(li);
  den_ = qd.scaled(li);
}

RationalFunction RationalFunction::inv() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inv(); }

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero();
  return num_.eval(x) / d;
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return num_.str("q");
  if (den_ == UPoly::monomial(Rational(1), den_.degree())) return power_sum(num_.coeffs(), -den_.degree(), "q");
  return "(" + num_.str("q") + ")/(" + den_.str("q") + ")";
}

// -------------------------------------------------------------- Cyclotomic

namespace {

std::int64_t ipow(int p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

void check_params(int p, int M) {
  if (p < 2 || M < 1) throw Error("cyclotomic field needs p >= 2 and M >= 1");
}

}  // namespace

UPoly Cyclotomic::modulus(int p, int M) {
  check_params(p, M);
  const std::int64_t s = ipow(p, M - 1);
  std::vector<Rational> c(static_cast<std::size_t>((p - 1) * s + 1));
  for (int j = 0; j < p; ++j) c[static_cast<std::size_t>(j * s)] = Rational(1);
  return UPoly(std::move(c));
}

std::vector<Rational> Cyclotomic::reduce(int p, int M, std::vector<Rational> c) {
  check_params(p, M);
  const std::int64_t s = ipow(p, M - 1);
  const std::int64_t D = (p - 1) * s;
  for (std::int64_t d = static_cast<std::int64_t>(c.size()) - 1; d >= D; --d) {
    const Rational x = c[static_cast<std::size_t>(d)];
    if (x.is_zero()) continue;
    // t^D = -(1 + t^s + ... + t^{(p-2)s})
    for (int j = 0; j <= p - 2; ++j) c[static_cast<std::size_t>(d - D + j * s)] -= x;
    c[static_cast<std::size_t>(d)] = Rational(0);
  }
  c.resize(static_cast<std::size_t>(D));
  return c;
}

Cyclotomic::Cyclotomic(int p, int M) : p_(p), M_(M) {
  check_params(p, M);
  coords_.assign(static_cast<std::size_t>((p - 1) * ipow(p, M - 1)), Rational(0));
}

Cyclotomic::Cyclotomic(int p, int M, const Rational& c) : Cyclotomic(p, M) { coords_[0] = c; }

Cyclotomic::Cyclotomic(int p, int M, const UPoly& rep) : p_(p), M_(M) {
  coords_ = reduce(p, M, rep.coeffs());
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : coords_)
    if (!x.is_zero()) return false;
  return true;
}

void Cyclotomic::check_same(const Cyclotomic& o) const {
  if (p_ != o.p_ || M_ != o.M_) throw FieldMismatch("cyclotomic levels differ");
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.coords_) x = -x;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  Cyclotomic r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same(b);
  const UPoly prod = a.as_poly() * b.as_poly();
  return Cyclotomic(a.p_, a.M_, prod);
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw DivisionByZero();
  UPoly s, t;
  UPoly g = UPoly::ext_gcd(as_poly(), modulus(p_, M_), s, t);
  if (g.degree() != 0) throw Error("cyclotomic inverse: modulus not coprime (internal)");
  return Cyclotomic(p_, M_, s);
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }

std::string Cyclotomic::str() const {
  return UPoly(coords_).str("z" + std::to_string(ipow(p_, M_)));
}

Cyclotomic zeta_power(int p, int M, std::int64_t e) {
  check_params(p, M);
  const std::int64_t n = ipow(p, M);
  const std::int64_t s = n / p;
  const std::int64_t D = n - s;
  e %= n;
  if (e < 0) e += n;
  std::vector<Rational> c(static_cast<std::size_t>(D));
  if (e < D) {
    c[static_cast<std::size_t>(e)] = Rational(1);
  } else {
    for (int j = 0; j <= p - 2; ++j) c[static_cast<std::size_t>(e - D + j * s)] = Rational(-1);
  }
  return Cyclotomic(p, M, UPoly(std::move(c)));
}

Rational rational_part(const Cyclotomic& x) {
  const auto& c = x.coords();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) throw NotRational(x.str());
  return c.empty() ? Rational(0) : c[0];
}

// ------------------------------------------------------------------ Field

Scalar Field::zero() const { return embed(Rational(0)); }
Scalar Field::one() const { return embed(Rational(1)); }

Scalar Field::embed(const Rational& r) const {
  switch (kind) {
    case Kind::Q: return Scalar(r);
    case Kind::Qq: return Scalar(RationalFunction(r));
    case Kind::Cyclotomic: return Scalar(Cyclotomic(p, M, r));
  }
  return Scalar(r);
}

std::string Field::name() const {
  switch (kind) {
    case Kind::Q: return "Q";
    case Kind::Qq: return "Q(q)";
    case Kind::Cyclotomic: return "Q(zeta_" + std::to_string(ipow(p, M)) + ")";
  }
  return "?";
}

// ----------------------------------------------------------------- Scalar

Field Scalar::field() const {
  if (std::holds_alternative<Rational>(v_)) return Field::rationals();
  if (std::holds_alternative<RationalFunction>(v_)) return Field::rational_functions();
  const auto& c = std::get<Cyclotomic>(v_);
  return Field::cyclotomic(c.p(), c.level());
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_one() const { return *this == field().one(); }

const Rational& Scalar::as_rational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  throw FieldMismatch("expected Q, have " + field().name());
}

const RationalFunction& Scalar::as_rational_function() const {
  if (auto* r = std::get_if<RationalFunction>(&v_)) return *r;
  throw FieldMismatch("expected Q(q), have " + field().name());
}

const Cyclotomic& Scalar::as_cyclotomic() const {
  if (auto* r = std::get_if<Cyclotomic>(&v_)) return *r;
  throw FieldMismatch("expected cyclotomic field, have " + field().name());
}

namespace {

template <typename Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
  if (a.repr().index() != b.repr().index())
    throw FieldMismatch(a.field().name() + " vs " + b.field().name());
  return std::visit(
      [&](const auto& x) -> Scalar {
        using T = std::decay_t<decltype(x)>;
        return Scalar(op(x, std::get<T>(b.repr())));
      },
      a.repr());
}

}  // namespace

Scalar Scalar::inv() const {
  return std::visit([](const auto& x) { return Scalar(x.inv()); }, v_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = field().one(), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  return binary(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return a.v_ == b.v_;
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

}  // namespace toric
