#include "toric/family.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

Context Context::symbolic() {
  return {Field::rational_functions(), Scalar(RationalFunction::q()), std::nullopt};
}

Context Context::numeric(int p) { return {Field::rationals(), Scalar(Rational(p)), p}; }

LaurentA chi_delta_value(int a1, int a2, const Context& ctx) {
  return LaurentA::monomial(ctx.q.pow(a2), a1, a2);
}

struct PSVector::Node {
  Kind kind = Kind::LinComb;
  // Table
  int p = 0;
  int n = 0;
  Field field;
  TableValues values;
  // Translate
  std::optional<PadicMatrix> g;
  std::optional<PSVector> inner;
  // LinComb
  Terms terms;
};

PSVector::PSVector() : node_(std::make_shared<Node>()) {}

PSVector PSVector::sph() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sph;
  return PSVector(n);
}

PSVector PSVector::phi_w() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::IwahoriPhiW;
  return PSVector(n);
}

PSVector PSVector::table(int p, int n, Field field, TableValues values) {
  if (n < 1) throw Error("table level must be >= 1");
  const auto classes = p1_enumerate(p, n);
  for (const auto& c : classes) {
    auto it = values.find(c);
    if (it == values.end()) throw ClassCoverageError("missing class " + c.str());
    if (it->second.field() != field) throw FieldMismatch("table value at " + c.str());
  }
  if (values.size() != classes.size()) throw ClassCoverageError("classes outside P^1(Z/p^n)");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Table;
  node->p = p;
  node->n = n;
  node->field = field;
  node->values = std::move(values);
  return PSVector(node);
}

PSVector PSVector::translate(const PadicMatrix& g, PSVector inner) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Translate;
  node->g = g;
  node->inner = std::move(inner);
  return PSVector(node);
}

PSVector PSVector::lincomb(Terms terms) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::LinComb;
  node->terms = std::move(terms);
  return PSVector(node);
}

PSVector::Kind PSVector::kind() const { return node_->kind; }

bool PSVector::is_zero_combination() const {
  if (node_->kind != Kind::LinComb) return false;
  for (const auto& [c, v] : node_->terms)
    if (!c.is_zero() && !v.is_zero_combination()) return false;
  return true;
}

int PSVector::level() const {
  switch (node_->kind) {
    case Kind::Sph: return 0;
    case Kind::IwahoriPhiW: return 1;
    case Kind::Table: return node_->n;
    case Kind::Translate: {
      // h^{-1} (1 + p^N X) h = 1 + p^N h^{-1} X h
      const int shift = node_->g->min_valuation() + node_->g->inverse().min_valuation();
      return std::max(0, node_->inner->level() - shift);
    }
    case Kind::LinComb: {
      int l = 0;
      for (const auto& [c, v] : node_->terms) l = std::max(l, v.level());
      return l;
    }
  }
  return 0;
}

std::optional<int> PSVector::prime() const {
  switch (node_->kind) {
    case Kind::Sph:
    case Kind::IwahoriPhiW: return std::nullopt;
    case Kind::Table: return node_->p;
    case Kind::Translate: return node_->g->prime();
    case Kind::LinComb:
      for (const auto& [c, v] : node_->terms)
        if (auto p = v.prime()) return p;
      return std::nullopt;
  }
  return std::nullopt;
}

int PSVector::table_prime() const { return node_->p; }
int PSVector::table_level() const { return node_->n; }
Field PSVector::table_field() const { return node_->field; }
const PSVector::TableValues& PSVector::table_values() const { return node_->values; }
const PadicMatrix& PSVector::translate_matrix() const { return *node_->g; }
const PSVector& PSVector::translate_inner() const { return *node_->inner; }
const PSVector::Terms& PSVector::terms() const { return node_->terms; }

std::string PSVector::describe() const {
  switch (node_->kind) {
    case Kind::Sph: return "sph";
    case Kind::IwahoriPhiW: return "phi_w";
    case Kind::Table:
      return "table(p=" + std::to_string(node_->p) + ",n=" + std::to_string(node_->n) + ")";
    case Kind::Translate: return "translate(" + node_->g->str() + "," + node_->inner->describe() + ")";
    case Kind::LinComb: {
      std::string s = "lincomb(";
      for (std::size_t i = 0; i < node_->terms.size(); ++i)
        s += (i ? ", " : "") + ("(" + node_->terms[i].first.str() + ")*" + node_->terms[i].second.describe());
      return s + ")";
    }
  }
  return "?";
}

PSVector operator*(const LaurentA& c, const PSVector& f) { return PSVector::lincomb({{c, f}}); }

LaurentA evaluate(const PSVector& f, const PadicMatrix& g, const Context& ctx) {
  using Kind = PSVector::Kind;
  switch (f.kind()) {
    case Kind::Sph: {
      const auto iw = iwasawa_decompose(g);
      return chi_delta_value(iw.a1, iw.a2, ctx);
    }
    case Kind::IwahoriPhiW: {
      // k lies in B(Z_p) w I exactly when its bottom-left entry is a unit.
      const auto iw = iwasawa_decompose(g);
      const auto v = valuation(iw.compact.c(), g.prime());
      if (v && *v == 0) return chi_delta_value(iw.a1, iw.a2, ctx);
      return LaurentA(ctx.field);
    }
    case Kind::Table: {
      if (g.prime() != f.table_prime()) throw FieldMismatch("matrix prime differs from table prime");
      if (f.table_field() != ctx.field) throw FieldMismatch("table over " + f.table_field().name());
      const auto iw = iwasawa_decompose(g);
      const P1Class cls = p1_class_of(iw.compact, f.table_level());
      const LaurentA& v = f.table_values().at(cls);
      if (v.is_zero()) return v;
      return ctx.q.pow(iw.a2) * v.shifted(iw.a1, iw.a2);
    }
    case Kind::Translate:
      return evaluate(f.translate_inner(), g * f.translate_matrix(), ctx);
    case Kind::LinComb: {
      LaurentA acc(ctx.field);
      for (const auto& [c, v] : f.terms()) {
        if (c.is_zero()) continue;
        const LaurentA x = evaluate(v, g, ctx);
        if (!x.is_zero()) acc += c * x;
      }
      return acc;
    }
  }
  return LaurentA(ctx.field);
}

PSVector f0_table(int p, int n) {
  const Field q = Field::rationals();
  PSVector::TableValues values;
  for (const auto& c : p1_enumerate(p, n)) {
    const bool zero = c.branch == P1Class::Branch::Affine && c.value % p == 0;
    values.emplace(c, zero ? LaurentA(q) : LaurentA::constant(q, Rational(1)));
  }
  return PSVector::table(p, n, q, std::move(values));
}

namespace {

void flatten(const PSVector& f, const LaurentA* coeff, std::optional<LaurentA>& sph, std::optional<LaurentA>& phi,
             PSVector::Terms& rest) {
  auto accumulate = [&](std::optional<LaurentA>& slot, const LaurentA& c) {
    if (slot) *slot += c;
    else slot = c;
  };
  switch (f.kind()) {
    case PSVector::Kind::Sph:
      accumulate(sph, *coeff);
      return;
    case PSVector::Kind::IwahoriPhiW:
      accumulate(phi, *coeff);
      return;
    case PSVector::Kind::LinComb:
      for (const auto& [c, v] : f.terms()) {
        if (c.is_zero()) continue;
        const LaurentA cc = coeff ? *coeff * c : c;
        flatten(v, &cc, sph, phi, rest);
      }
      return;
    default:
      rest.emplace_back(*coeff, f);
  }
}

}  // namespace

PSVector simplify(const PSVector& f) {
  if (f.kind() != PSVector::Kind::LinComb) return f;
  std::optional<LaurentA> sph, phi;
  PSVector::Terms rest, out;
  flatten(f, nullptr, sph, phi, rest);
  if (sph && !sph->is_zero()) out.emplace_back(*sph, PSVector::sph());
  if (phi && !phi->is_zero()) out.emplace_back(*phi, PSVector::phi_w());
  for (auto& t : rest)
    if (!t.first.is_zero()) out.push_back(std::move(t));
  return PSVector::lincomb(std::move(out));
}

BigCellSplit big_cell_split(const PSVector& f, const Context& ctx) {
  const int p = f.prime().value_or(ctx.working_prime());
  LaurentA a_f = evaluate(f, PadicMatrix::identity(p), ctx);
  PSVector f_w = simplify(PSVector::lincomb(
      {{LaurentA::constant(ctx.field.one()), f}, {-a_f, PSVector::sph()}}));
  return {std::move(a_f), std::move(f_w)};
}

namespace {

// splitmix64; std distributions are not portable across standard libraries.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

PSVector random_table(int p, int n, std::uint64_t seed, RandomTableOptions opts) {
  static const Rational kCoefficients[] = {Rational(1),  Rational(-1),    Rational(2),    Rational(-2),
                                           Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3)};
  const Field q = Field::rationals();
  std::mt19937_64 rng(mix(seed));
  auto draw = [&](std::uint64_t bound) { return rng() % bound; };
  PSVector::TableValues values;
  for (const auto& c : p1_enumerate(p, n)) {
    LaurentA v(q);
    if (!opts.all_zero) {
      const auto terms = draw(4);
      for (std::uint64_t t = 0; t < terms; ++t) {
        const Rational& coeff = kCoefficients[draw(8)];
        const int e1 = static_cast<int>(draw(5)) - 2;
        const int e2 = static_cast<int>(draw(5)) - 2;
        v.add_term(q.embed(coeff), {e1, e2});
      }
    }
    values.emplace(c, std::move(v));
  }
  return PSVector::table(p, n, q, std::move(values));
}

}  // namespace toric
