#include "toric/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

bool mono_greater(TermOrder order, const Mono& a, const Mono& b) {
  switch (order) {
    case TermOrder::Lex:
      return a > b;
    case TermOrder::GrevLex: {
      const int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
      if (da != db) return da > db;
      for (int i = 2; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)])
          return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)];
      return false;
    }
    case TermOrder::Elimination: {
      if (a[2] != b[2]) return a[2] > b[2];
      const int da = a[0] + a[1], db = b[0] + b[1];
      if (da != db) return da > db;
      return a[1] < b[1];
    }
  }
  return false;
}

// -------------------------------------------------------------------- Poly

Poly Poly::term(const Scalar& c, const Mono& m) {
  Poly r(c.field());
  r.add_term(c, m);
  return r;
}

Poly Poly::from_laurent(const LaurentA& a, Exponent* shift) {
  const Exponent m = a.min_exponents();
  if (shift) *shift = m;
  Poly r(a.field());
  for (const auto& [e, c] : a.terms()) r.add_term(c, {e.e1 - m.e1, e.e2 - m.e2, 0});
  return r;
}

LaurentA Poly::to_laurent() const {
  LaurentA r(field_);
  for (const auto& [m, c] : terms_) r.add_term(c, {m[0] - m[2], m[1] - m[2]});
  return r;
}

std::pair<Mono, Scalar> Poly::leading(TermOrder order) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (mono_greater(order, it->first, best->first)) best = it;
  return *best;
}

void Poly::add_term(const Scalar& c, const Mono& m) {
  if (c.field() != field_) throw FieldMismatch("polynomial term field");
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw Error("negative exponent in polynomial ring");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly Poly::operator-() const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.field_ != field_) throw FieldMismatch("polynomial fields");
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.field_ != field_) throw FieldMismatch("polynomial fields");
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.field_ != b.field_) throw FieldMismatch("polynomial fields");
  Poly r(a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ca * cb, {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]});
  return r;
}

Poly operator*(const Scalar& s, const Poly& a) {
  Poly r(a.field_);
  if (s.is_zero()) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
  return r;
}

Poly Poly::times_term(const Scalar& c, const Mono& mono) const {
  Poly r(field_);
  if (c.is_zero()) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(Mono{m[0] + mono[0], m[1] + mono[1], m[2] + mono[2]}, c * x);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[] = {"Y1", "Y2", "u"};
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << "(" << it->second.str() << ")";
    for (int i = 0; i < 3; ++i)
      if (it->first[static_cast<std::size_t>(i)]) os << "*" << names[i] << "^" << it->first[static_cast<std::size_t>(i)];
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------- Buchberger

namespace {

bool divides(const Mono& a, const Mono& b) { return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]; }
Mono mono_div(const Mono& b, const Mono& a) { return {b[0] - a[0], b[1] - a[1], b[2] - a[2]}; }
Mono mono_lcm(const Mono& a, const Mono& b) {
  return {std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2])};
}

struct Element {
  Poly p;
  std::vector<Poly> cof;
  Mono lm{};
  Scalar lc;
};

void refresh(Element& e, TermOrder order) {
  if (e.p.is_zero()) return;
  auto [m, c] = e.p.leading(order);
  e.lm = m;
  e.lc = c;
}

// Fully reduces f by the given elements. With sign = -1 the invariant is
// rem + rest = sum cof * gens (an element being reduced to normal form);
// with sign = +1 it is f = rem + rest + sum cof * gens (a membership query).
Poly reduce_impl(const Poly& f, const std::vector<const Element*>& by, TermOrder order, std::vector<Poly>* cof,
                 int sign) {
  Poly rem(f.field());
  Poly rest = f;
  while (!rest.is_zero()) {
    auto [lm, lc] = rest.leading(order);
    const Element* hit = nullptr;
    for (const Element* g : by)
      if (divides(g->lm, lm)) {
        hit = g;
        break;
      }
    if (!hit) {
      rem.add_term(lc, lm);
      rest.add_term(-lc, lm);
      continue;
    }
    const Scalar t = lc / hit->lc;
    const Mono tm = mono_div(lm, hit->lm);
    rest -= hit->p.times_term(t, tm);
    if (cof) {
      const Scalar st = sign > 0 ? t : -t;
      for (std::size_t j = 0; j < cof->size(); ++j) (*cof)[j] += hit->cof[j].times_term(st, tm);
    }
  }
  return rem;
}

std::vector<const Element*> pointers(const std::vector<Element>& v, std::size_t skip = static_cast<std::size_t>(-1)) {
  std::vector<const Element*> r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != skip && !v[i].p.is_zero()) r.push_back(&v[i]);
  return r;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, TermOrder order) {
  if (gens.empty()) throw Error("buchberger: empty generator list");
  const Field field = gens.front().field();
  const std::size_t ng = gens.size();
  std::vector<Element> g;
  for (std::size_t i = 0; i < ng; ++i) {
    if (gens[i].field() != field) throw FieldMismatch("generators over different fields");
    if (gens[i].is_zero()) continue;
    Element e{gens[i], std::vector<Poly>(ng, Poly(field)), {}, field.zero()};
    e.cof[i] = Poly::term(field.one(), {0, 0, 0});
    refresh(e, order);
    g.push_back(std::move(e));
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  auto lcm_degree = [&](const std::pair<std::size_t, std::size_t>& pr) {
    const Mono l = mono_lcm(g[pr.first].lm, g[pr.second].lm);
    return l[0] + l[1] + l[2];
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(),
                               [&](const auto& a, const auto& b) { return lcm_degree(a) < lcm_degree(b); });
    const auto [i, j] = *it;
    pairs.erase(it);
    const Element& a = g[i];
    const Element& b = g[j];
    const Mono l = mono_lcm(a.lm, b.lm);
    // Product criterion: coprime leading monomials give a zero S-polynomial.
    if (l == Mono{a.lm[0] + b.lm[0], a.lm[1] + b.lm[1], a.lm[2] + b.lm[2]}) continue;
    const Mono ma = mono_div(l, a.lm), mb = mono_div(l, b.lm);
    const Scalar ca = a.lc.inv(), cb = b.lc.inv();
    Element s{a.p.times_term(ca, ma) - b.p.times_term(cb, mb), std::vector<Poly>(ng, Poly(field)), {}, field.zero()};
    for (std::size_t k = 0; k < ng; ++k) s.cof[k] = a.cof[k].times_term(ca, ma) - b.cof[k].times_term(cb, mb);
    s.p = reduce_impl(s.p, pointers(g), order, &s.cof, -1);
    if (s.p.is_zero()) continue;
    refresh(s, order);
    const std::size_t idx = g.size();
    g.push_back(std::move(s));
    for (std::size_t k = 0; k < idx; ++k)
      if (!g[k].p.is_zero()) pairs.emplace_back(k, idx);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].p.is_zero()) {
      keep[i] = false;
      continue;
    }
    for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
      if (i == j || !keep[j] || g[j].p.is_zero()) continue;
      if (divides(g[j].lm, g[i].lm) && (g[j].lm != g[i].lm || j < i)) keep[i] = false;
    }
  }
  std::vector<Element> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(g[i]));

  // Interreduce and normalize to monic.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Element& e = minimal[i];
    e.p = reduce_impl(e.p, pointers(minimal, i), order, &e.cof, -1);
    refresh(e, order);
    const Scalar inv = e.lc.inv();
    e.p = inv * e.p;
    for (auto& c : e.cof) c = inv * c;
    refresh(e, order);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Element& x, const Element& y) { return mono_greater(order, y.lm, x.lm); });

  GroebnerBasis gb;
  gb.order = order;
  gb.field = field;
  gb.num_generators = ng;
  for (auto& e : minimal) {
    gb.basis.push_back(std::move(e.p));
    gb.cofactors.push_back(std::move(e.cof));
  }
  return gb;
}

Poly GroebnerBasis::reduce(const Poly& f, std::vector<Poly>* cofactors_out) const {
  std::vector<Element> elems;
  elems.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Element e{basis[i], cofactors[i], {}, field.zero()};
    refresh(e, order);
    elems.push_back(std::move(e));
  }
  if (cofactors_out) cofactors_out->assign(num_generators, Poly(field));
  return reduce_impl(f, pointers(elems), order, cofactors_out, +1);
}

bool GroebnerBasis::is_unit_ideal() const {
  for (const auto& b : basis)
    if (b.size() == 1 && b.terms().begin()->first == Mono{0, 0, 0}) return true;
  return false;
}

bool is_groebner_basis(const GroebnerBasis& gb) {
  std::vector<Element> elems;
  for (const auto& b : gb.basis) {
    Element e{b, {}, {}, gb.field.zero()};
    refresh(e, gb.order);
    elems.push_back(std::move(e));
  }
  const auto ptrs = pointers(elems);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const Mono l = mono_lcm(elems[i].lm, elems[j].lm);
      Poly s = elems[i].p.times_term(elems[i].lc.inv(), mono_div(l, elems[i].lm)) -
               elems[j].p.times_term(elems[j].lc.inv(), mono_div(l, elems[j].lm));
      if (!reduce_impl(s, ptrs, gb.order, nullptr, -1).is_zero()) return false;
    }
  return true;
}

// ------------------------------------------------------- Laurent membership

IdealPresentation::IdealPresentation(Field field, std::vector<LaurentA> gens) : field_(field) {
  for (auto& g : gens) {
    if (g.field() != field) throw FieldMismatch("ideal generator over " + g.field().name());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::string IdealPresentation::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
  return s + ")";
}

bool verify_certificate(const LaurentA& h, const IdealPresentation& ideal, const MembershipCertificate& cert) {
  if (cert.cofactors.size() != ideal.gens().size()) return false;
  LaurentA sum(ideal.field());
  for (std::size_t i = 0; i < cert.cofactors.size(); ++i) sum += cert.cofactors[i] * ideal.gens()[i];
  return sum == h;
}

namespace {

std::vector<Poly> saturated_generators(const IdealPresentation& ideal, std::vector<Exponent>& shifts) {
  const Field f = ideal.field();
  std::vector<Poly> polys;
  for (const auto& g : ideal.gens()) {
    Exponent s;
    polys.push_back(Poly::from_laurent(g, &s));
    shifts.push_back(s);
  }
  // 1 - u*Y1*Y2 makes Y1 and Y2 invertible.
  Poly rel = Poly::term(f.one(), {0, 0, 0});
  rel.add_term(-f.one(), {1, 1, 1});
  polys.push_back(std::move(rel));
  return polys;
}

}  // namespace

LaurentIdeal::LaurentIdeal(IdealPresentation ideal)
    : ideal_(std::move(ideal)), gb_(buchberger(saturated_generators(ideal_, shifts_), TermOrder::GrevLex)) {}

std::optional<MembershipCertificate> LaurentIdeal::membership(const LaurentA& h) const {
  const Field f = ideal_.field();
  if (h.field() != f) throw FieldMismatch("membership query over " + h.field().name());
  const std::size_t n = ideal_.gens().size();
  MembershipCertificate cert{std::vector<LaurentA>(n, LaurentA(f))};
  if (h.is_zero()) return cert;

  for (std::size_t i = 0; i < n; ++i) {
    if (auto q = divide_exact(h, ideal_.gens()[i])) {
      cert.cofactors[i] = *q;
      if (!verify_certificate(h, ideal_, cert)) throw CertificateCheckFailed("exact-division path");
      return cert;
    }
  }

  Exponent hs;
  const Poly hp = Poly::from_laurent(h, &hs);
  std::vector<Poly> cof;
  const Poly rem = gb_.reduce(hp, &cof);
  if (!rem.is_zero()) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    cert.cofactors[i] = cof[i].to_laurent().shifted(hs.e1 - shifts_[i].e1, hs.e2 - shifts_[i].e2);
  if (!verify_certificate(h, ideal_, cert)) throw CertificateCheckFailed(h.str());
  return cert;
}

std::optional<MembershipCertificate> laurent_membership(const LaurentA& h, const IdealPresentation& ideal) {
  return LaurentIdeal(ideal).membership(h);
}

IdealComparison ideal_equal(const IdealPresentation& a, const IdealPresentation& b) {
  IdealComparison out;
  const LaurentIdeal ia(a), ib(b);
  out.equal = true;
  for (const auto& g : b.gens()) {
    out.second_in_first.push_back(ia.membership(g));
    out.equal = out.equal && out.second_in_first.back().has_value();
  }
  for (const auto& g : a.gens()) {
    out.first_in_second.push_back(ib.membership(g));
    out.equal = out.equal && out.first_in_second.back().has_value();
  }
  return out;
}

// ------------------------------------------------------------ bivariate gcd

namespace {

int degree_in(const Poly& p, int var) {
  int d = -1;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[static_cast<std::size_t>(var)]);
  return d;
}

// Coefficient of var^j, as a polynomial with var removed.
Poly coeff_in(const Poly& p, int var, int j) {
  Poly r(p.field());
  for (const auto& [m, c] : p.terms())
    if (m[static_cast<std::size_t>(var)] == j) {
      Mono mm = m;
      mm[static_cast<std::size_t>(var)] = 0;
      r.add_term(c, mm);
    }
  return r;
}

Poly times_var(const Poly& p, int var, int e) {
  Mono m{0, 0, 0};
  m[static_cast<std::size_t>(var)] = e;
  return p.times_term(p.field().one(), m);
}

// Division by a single polynomial under lex; returns remainder.
Poly divide_lex(const Poly& a, const Poly& b, Poly* quot) {
  Element e{b, {}, {}, b.field().zero()};
  refresh(e, TermOrder::Lex);
  Poly rem(a.field()), rest = a;
  if (quot) *quot = Poly(a.field());
  while (!rest.is_zero()) {
    auto [lm, lc] = rest.leading(TermOrder::Lex);
    if (divides(e.lm, lm)) {
      const Scalar t = lc / e.lc;
      const Mono tm = mono_div(lm, e.lm);
      rest -= b.times_term(t, tm);
      if (quot) quot->add_term(t, tm);
    } else {
      rem.add_term(lc, lm);
      rest.add_term(-lc, lm);
    }
  }
  return rem;
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  Poly q;
  if (!divide_lex(a, b, &q).is_zero()) throw Error("bivariate gcd: inexact division (internal)");
  return q;
}

Poly monic_lex(const Poly& p) {
  if (p.is_zero()) return p;
  return p.leading(TermOrder::Lex).second.inv() * p;
}

// gcd in k[Y1] (polynomials in variable 0 only).
Poly univariate_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divide_lex(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  return monic_lex(a);
}

Poly content_y2(const Poly& p) {
  Poly g(p.field());
  for (int j = 0; j <= degree_in(p, 1); ++j) {
    Poly c = coeff_in(p, 1, j);
    if (!c.is_zero()) g = univariate_gcd(g, c);
  }
  return g;
}

Poly primitive_y2(const Poly& p) { return exact_quotient(p, content_y2(p)); }

Poly pseudo_remainder_y2(Poly a, const Poly& b) {
  const int db = degree_in(b, 1);
  const Poly lb = coeff_in(b, 1, db);
  while (!a.is_zero() && degree_in(a, 1) >= db) {
    const int da = degree_in(a, 1);
    const Poly la = coeff_in(a, 1, da);
    a = lb * a - times_var(la * b, 1, da - db);
  }
  return a;
}

}  // namespace

Poly bivariate_gcd(const Poly& a, const Poly& b) {
  for (const Poly* p : {&a, &b})
    for (const auto& [m, c] : p->terms())
      if (m[2] != 0) throw Error("bivariate_gcd: polynomial involves u");
  if (a.is_zero()) return monic_lex(b);
  if (b.is_zero()) return monic_lex(a);
  const Poly c = univariate_gcd(content_y2(a), content_y2(b));
  Poly f = primitive_y2(a), g = primitive_y2(b);
  if (degree_in(f, 1) < degree_in(g, 1)) std::swap(f, g);
  while (true) {
    if (degree_in(g, 1) == 0) return monic_lex(c);  // primitive of Y2-degree 0 is a scalar
    Poly r = pseudo_remainder_y2(f, g);
    if (r.is_zero()) return monic_lex(c * g);
    if (degree_in(r, 1) == 0) return monic_lex(c);
    f = std::move(g);
    g = primitive_y2(r);
  }
}

bool is_principal_pair(const IdealPresentation& ideal) {
  if (ideal.gens().size() < 2) return true;
  Poly d(ideal.field());
  for (const auto& g : ideal.gens()) d = bivariate_gcd(d, Poly::from_laurent(g));
  return LaurentIdeal(ideal).membership(d.to_laurent()).has_value();
}

}  // namespace toric
