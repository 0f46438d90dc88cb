#include "toric/whittaker.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "toric/errors.hpp"

namespace toric {

IntegrationPlan make_plan(int level, int k, int support) {
  IntegrationPlan plan;
  plan.level = std::max(1, level);
  plan.support = support;
  plan.u_refine = std::max(plan.level, -k);
  plan.cyclo_level = std::max(1, support - k);
  plan.a_refine = std::max(1, support - k);
  return plan;
}

LaurentA sph_big_cell_value(int m, const Context& ctx) {
  if (m < 1) throw Error("sph_big_cell_value needs m >= 1");
  const int p = ctx.working_prime();
  const Rational x = Rational(p).pow(-m);
  const auto iw = iwasawa_decompose(PadicMatrix::weyl(p) * PadicMatrix::unipotent(p, x));
  return chi_delta_value(iw.a1, iw.a2, ctx);
}

std::vector<LaurentA> cs_factor_shells(const Context& ctx, int max_shell) {
  std::vector<LaurentA> out;
  // v(x) >= 0: w n(x) lies in GL2(Z_p), so f^sph is 1 there.
  const int p = ctx.working_prime();
  const auto iw0 = iwasawa_decompose(PadicMatrix::weyl(p) * PadicMatrix::unipotent(p, Rational(0)));
  out.push_back(ball_character_integral(0, 0, ctx.q) * chi_delta_value(iw0.a1, iw0.a2, ctx));
  for (int m = 1; m <= max_shell; ++m)
    out.push_back(shell_character_integral(-m, ctx.q) * sph_big_cell_value(m, ctx));
  return out;
}

LaurentA cs_factor_regularized(const Context& ctx) {
  LaurentA acc(ctx.field);
  for (const auto& s : cs_factor_shells(ctx)) acc += s;
  return acc;
}

LaurentA shintani_sph(int k, const Context& ctx) {
  LaurentA h(ctx.field);
  for (int i = 0; i <= k; ++i) h.add_term(ctx.field.one(), {i, k - i});
  return h;
}

namespace {

void check_numeric(const PSVector& f, const Context& ctx) {
  if (ctx.is_symbolic()) throw Error("Tier-2 integration needs a numeric context");
  if (auto fp = f.prime(); fp && *fp != *ctx.prime)
    throw FieldMismatch("vector at p=" + std::to_string(*fp) + " in context p=" + std::to_string(*ctx.prime));
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

}  // namespace

LaurentA twisted_integral(const PSVector& f, int k, const IntegrationPlan& plan, const Context& ctx,
                          const PadicMatrix* weyl) {
  check_numeric(f, ctx);
  const int p = *ctx.prime;
  const int R = plan.support, L = plan.u_refine, n = plan.level, M = plan.cyclo_level;
  if (L < n || L < -k) throw Error("u-refinement below the invariance level");
  if (M < R - k || M < 1) throw ConductorExceeded("cyclotomic level " + std::to_string(M) + " below " +
                                                  std::to_string(R - k));
  if (plan.torus_average && plan.a_refine < std::max(1, R - k)) throw Error("a-refinement too coarse");
  LaurentA result(ctx.field);
  if (f.is_zero_combination()) return result;

  const PadicMatrix w = weyl ? *weyl : PadicMatrix::weyl(p);
  const std::int64_t pM = int_pow(p, M);
  const std::int64_t key_mod = int_pow(p, R + n);
  const std::int64_t reps = int_pow(p, L - n);
  const std::int64_t mult = (k - R + M >= M) ? 0 : int_pow(p, k - R + M);
  const Rational denom(static_cast<long>(int_pow(p, R)));

  // With the torus average, sum_a zeta^{-a b} depends only on v(b), so each
  // key contributes a histogram over valuation classes 0..M.
  auto val_class = [&](std::int64_t b) {
    int v = 0;
    if (b == 0) return M;
    while (b % p == 0) b /= p, ++v;
    return v;
  };

  // Per monomial: weights over valuation classes, or over exponents mod p^M.
  std::map<Exponent, std::vector<Rational>> acc;
  const std::size_t bins = plan.torus_average ? static_cast<std::size_t>(M + 1) : static_cast<std::size_t>(pM);
  std::vector<std::int64_t> hist(bins);

  for (std::int64_t key = 0; key < key_mod; ++key) {
    const Rational u = Rational(static_cast<long>(key)) / denom;
    const LaurentA value = evaluate(f, w * PadicMatrix::unipotent(p, u), ctx);
    if (value.is_zero()) continue;
    std::fill(hist.begin(), hist.end(), 0);
    for (std::int64_t t = 0; t < reps; ++t) {
      const std::int64_t j = key + t * key_mod;
      const std::int64_t base = mod((j % pM) * mult, pM);
      if (plan.torus_average) ++hist[val_class(base)];
      else ++hist[mod(-base, pM)];
    }
    for (const auto& [e, c] : value.terms()) {
      auto& slot = acc[e];
      if (slot.empty()) slot.assign(bins, Rational(0));
      for (std::size_t i = 0; i < bins; ++i)
        if (hist[i]) slot[i] += c.as_rational() * Rational(static_cast<long>(hist[i]));
    }
  }

  // Project each group-ring sum to Q(zeta_{p^M}) and then to Q.
  std::vector<Rational> class_value;
  Rational weight = Rational(p).pow(-L);
  if (plan.torus_average) {
    const std::int64_t pA = int_pow(p, plan.a_refine);
    const std::int64_t units = pA - pA / p;
    weight *= Rational(static_cast<long>(units)).inv();
    for (int v = 0; v <= M; ++v) {
      const std::int64_t b = v == M ? 0 : int_pow(p, v);
      std::vector<Rational> sum(static_cast<std::size_t>(pM), Rational(0));
      for (std::int64_t a = 1; a < pA; ++a)
        if (a % p) sum[mod(-a * b, pM)] += Rational(1);
      class_value.push_back(rational_part(Cyclotomic(p, M, UPoly(Cyclotomic::reduce(p, M, std::move(sum))))));
    }
  }

  for (auto& [e, slot] : acc) {
    Rational total(0);
    if (plan.torus_average) {
      for (std::size_t v = 0; v < bins; ++v)
        if (!slot[v].is_zero()) total += slot[v] * class_value[v];
    } else {
      total = rational_part(Cyclotomic(p, M, UPoly(Cyclotomic::reduce(p, M, slot))));
    }
    if (!total.is_zero()) result.add_term(Scalar(total * weight), {e.e1, e.e2 + k});
  }
  return result;
}

LaurentA lambda_chi(const PSVector& f_w, const Context& ctx) {
  const int p = f_w.prime().value_or(ctx.working_prime());
  if (!evaluate(f_w, PadicMatrix::identity(p), ctx).is_zero())
    throw NotBigCell("f(1) != 0 for " + f_w.describe());
  if (ctx.is_symbolic()) {
    const PSVector s = simplify(PSVector::lincomb({{LaurentA::constant(ctx.field.one()), f_w}}));
    LaurentA acc(ctx.field);
    for (const auto& [c, v] : s.terms()) {
      if (v.kind() != PSVector::Kind::IwahoriPhiW)
        throw Error("symbolic lambda_chi supports phi_w combinations only");
      // phi_w(w n(x)) = [x in Z_p]
      acc += ball_character_integral(0, 0, ctx.q) * c;
    }
    return acc;
  }
  const int n = std::max(1, f_w.level());
  IntegrationPlan plan = make_plan(n, 0, n - 1);
  plan.torus_average = false;
  return twisted_integral(f_w, 0, plan, ctx);
}

namespace {

LaurentA symbolic_coefficient(const PSVector& f, int k, const Context& ctx) {
  const PSVector s = simplify(PSVector::lincomb({{LaurentA::constant(ctx.field.one()), f}}));
  LaurentA acc(ctx.field);
  for (const auto& [c, v] : s.terms()) {
    if (c.field() != ctx.field) throw FieldMismatch("coefficient over " + c.field().name());
    switch (v.kind()) {
      case PSVector::Kind::Sph:
        acc += c * cs_factor_regularized(ctx) * shintani_sph(k, ctx);
        break;
      case PSVector::Kind::IwahoriPhiW: {
        // phi_w(w n(u)) = [u in Z_p]; integral of psi^{-1}(a p^k u) over Z_p.
        const Scalar ball = ball_character_integral(0, k, ctx.q);
        if (!ball.is_zero()) acc += c * LaurentA::monomial(ball, 0, k);
        break;
      }
      default:
        throw Error("symbolic coefficients support Sph and phi_w only, got " + v.describe());
    }
  }
  return acc;
}

void spot_check_support(const PSVector& f_w, int n, const Context& ctx) {
  const int p = *ctx.prime;
  for (int m : {n, n + 1})
    for (long c : {1L, static_cast<long>(p) - 1L, static_cast<long>(p) + 1L}) {
      const Rational x = Rational(c) * Rational(p).pow(-m);
      if (!evaluate(f_w, PadicMatrix::weyl(p) * PadicMatrix::unipotent(p, x), ctx).is_zero())
        throw Error("big-cell part does not vanish at v(u) = -" + std::to_string(m));
    }
}

}  // namespace

LaurentA whittaker_coefficient(const PSVector& f, int k, const Context& ctx) {
  if (ctx.is_symbolic()) return symbolic_coefficient(f, k, ctx);
  check_numeric(f, ctx);
  const auto split = big_cell_split(f, ctx);
  LaurentA out = split.a_f * cs_factor_regularized(ctx) * shintani_sph(k, ctx);
  if (split.f_w.is_zero_combination()) return out;
  const int n = std::max(1, split.f_w.level());
  spot_check_support(split.f_w, n, ctx);
  IntegrationPlan plan = make_plan(n, k, n - 1);
  try {
    out += twisted_integral(split.f_w, k, plan, ctx);
  } catch (const ConductorExceeded&) {
    ++plan.cyclo_level;
    plan.a_refine = std::max(plan.a_refine, plan.cyclo_level);
    out += twisted_integral(split.f_w, k, plan, ctx);
  }
  return out;
}

LaurentA whittaker_coefficient_regularized(const PSVector& f, int k, const Context& ctx, const PadicMatrix* weyl) {
  check_numeric(f, ctx);
  const int n = std::max(1, f.level());
  // Shells v(u) = -m with m >= max(n, k + 2) carry a constant value against a
  // character that integrates to zero there.
  const int R = std::max(n - 1, k + 1);
  return twisted_integral(f, k, make_plan(n, k, R), ctx, weyl);
}

}  // namespace toric
