#pragma once

// The formal zeta integral I(W_f, Z) = sum_k c_k(f) Z^k, its L-factor
// clearing, and the periods l_A (value at Z = 1) and l_1 = l_A / l_A(f^sph).

#include <optional>
#include <string>
#include <utility>

#include "toric/family.hpp"
#include "toric/groebner.hpp"
#include "toric/laurent.hpp"

namespace toric {

/// sum_{k = kmin}^{kmax} c_k(f) Z^k.
ZPoly zeta_window(const PSVector& f, int kmin, int kmax, const Context& ctx);

struct PeriodWindow {
  int kmin = 0;
  int kmax = 0;
  int bound = 0;  // clearing bound d
};

/// [-(n+2), n+4] with d = n+2 for a level-n vector.
PeriodWindow default_window(int level);

/// I(W_f, Z)(1 - Y1 Z)(1 - Y2 Z) at Z = 1. A tail that fails to vanish
/// triggers one retry with the window widened by 4 on both sides, then
/// TailViolation.
LaurentA period_lA(const PSVector& f, const Context& ctx);
LaurentA period_lA(const PSVector& f, const Context& ctx, PeriodWindow window);

struct PeriodL1 {
  FractionA value;
  std::optional<LaurentA> in_A;  // the quotient when it lies in A
};

PeriodL1 period_l1(const PSVector& f, const Context& ctx);

/// (1 - Y1, 1 - q^{-1} Y1 Y2^{-1}) and (1 - q Y2, 1 - q^{-1} Y1 Y2^{-1}).
std::pair<IdealPresentation, IdealPresentation> theorem_ideal(const Context& ctx);

struct PeriodReport {
  std::string descriptor;
  LaurentA lA;
  std::string lA_display_X;
  bool member = false;
  std::optional<MembershipCertificate> certificate;
  bool rational = false;
  double elapsed_ms = 0;
};

/// l_A(f) checked against the first presentation of the theorem ideal. The
/// prepared ideal may be passed in to share its Groebner basis across calls;
/// it must be the first presentation for ctx.
PeriodReport verify_image(const PSVector& f, const Context& ctx, const LaurentIdeal* ideal = nullptr);

}  // namespace toric
