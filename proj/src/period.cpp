#include "toric/period.hpp"

#include <chrono>

#include "toric/errors.hpp"
#include "toric/whittaker.hpp"

namespace toric {

ZPoly zeta_window(const PSVector& f, int kmin, int kmax, const Context& ctx) {
  ZPoly series(ctx.field, kmin, kmax);
  for (int k = kmin; k <= kmax; ++k) series.set(k, whittaker_coefficient(f, k, ctx));
  return series;
}

PeriodWindow default_window(int level) { return {-(level + 2), level + 4, level + 2}; }

LaurentA period_lA(const PSVector& f, const Context& ctx, PeriodWindow window) {
  for (int attempt = 0;; ++attempt) {
    try {
      const ZPoly series = zeta_window(f, window.kmin, window.kmax, ctx);
      if (!series.coeff(window.kmin).is_zero())
        throw TailViolation("c_" + std::to_string(window.kmin) + " does not vanish");
      return eval_Z1(zpoly_mul_clear(series, window.bound));
    } catch (const TailViolation&) {
      if (attempt > 0) throw;
      window.kmin -= 4;
      window.kmax += 4;
      window.bound += 4;
    }
  }
}

LaurentA period_lA(const PSVector& f, const Context& ctx) {
  return period_lA(f, ctx, default_window(f.level()));
}

namespace {

LaurentA cs_generator(const Context& ctx) {
  return LaurentA::constant(ctx.field.one()) - LaurentA::monomial(ctx.q.inv(), 1, -1);
}

}  // namespace

PeriodL1 period_l1(const PSVector& f, const Context& ctx) {
  FractionA value(period_lA(f, ctx), cs_generator(ctx));
  auto q = value.in_A();
  return {std::move(value), std::move(q)};
}

std::pair<IdealPresentation, IdealPresentation> theorem_ideal(const Context& ctx) {
  const LaurentA one = LaurentA::constant(ctx.field.one());
  const LaurentA cs = cs_generator(ctx);
  IdealPresentation first(ctx.field, {one - LaurentA::monomial(ctx.field.one(), 1, 0), cs});
  IdealPresentation second(ctx.field, {one - LaurentA::monomial(ctx.q, 0, 1), cs});
  return {std::move(first), std::move(second)};
}

PeriodReport verify_image(const PSVector& f, const Context& ctx, const LaurentIdeal* ideal) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<LaurentIdeal> own;
  if (!ideal) ideal = &own.emplace(theorem_ideal(ctx).first);

  PeriodReport report;
  report.descriptor = f.describe();
  report.lA = period_lA(f, ctx);
  report.lA_display_X = to_X_display(report.lA);
  report.rational = true;
  for (const auto& [e, c] : report.lA.terms())
    if (c.field() != ctx.field) report.rational = false;
  report.certificate = ideal->membership(report.lA);
  report.member = report.certificate.has_value();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace toric
