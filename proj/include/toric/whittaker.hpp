#pragma once

// Whittaker functional Lambda(f) = int_N f(w n) psi^{-1}(n) dn and the torus
// averaged coefficients c_k(f) = int_{O^x} W_f(diag(a p^k, 1)) d^x a.
//
// Tier 1 works symbolically in q for combinations of f^sph and phi_w using
// shell and ball character integrals. Tier 2 is an exact finite sum over a
// grid of p-adic cosets with values in Q(zeta_{p^M}), projected back to Q.

#include <cstdint>
#include <vector>

#include "toric/family.hpp"
#include "toric/laurent.hpp"

namespace toric {

/// Finite data for one Tier-2 integral: u runs over p^{-R} Z_p / p^{L_u} Z_p,
/// a over (Z/p^{L_a})^x, values in Q(zeta_{p^M}).
struct IntegrationPlan {
  int support = 0;     // R
  int u_refine = 1;    // L_u
  int a_refine = 1;    // L_a
  int cyclo_level = 1; // M
  int level = 1;       // invariance level n of the integrand
  bool torus_average = true;  // average over a; false fixes a = 1
};

/// Plan for the twisted integral at index k of a level-n integrand whose
/// u-support lies in p^{-R} Z_p.
IntegrationPlan make_plan(int level, int k, int support);

/// f^sph(w n(x)) for v(x) = -m, m >= 1, read off the Iwasawa decomposition.
LaurentA sph_big_cell_value(int m, const Context& ctx);

/// Contribution of each shell to Lambda(f^sph): entry 0 is v(x) >= 0, entry m
/// is v(x) = -m.
std::vector<LaurentA> cs_factor_shells(const Context& ctx, int max_shell = 4);

/// Lambda(f^sph), assembled from the shell contributions.
LaurentA cs_factor_regularized(const Context& ctx);

/// Complete homogeneous symmetric polynomial h_k(Y1, Y2); zero for k < 0.
LaurentA shintani_sph(int k, const Context& ctx);

/// Y2^k * int_{O^x} int f(w n(u)) psi^{-1}(a p^k u) du d^x a for a numeric
/// context, over the plan's finite grid. The integrand must have u-support in
/// p^{-R} Z_p with R = plan.support.
LaurentA twisted_integral(const PSVector& f, int k, const IntegrationPlan& plan, const Context& ctx,
                          const PadicMatrix* weyl = nullptr);

/// Lambda(f_w) for a vector vanishing on B(Q_p) (NotBigCell otherwise).
LaurentA lambda_chi(const PSVector& f_w, const Context& ctx);

/// c_k(f) = a_f (cs factor) h_k + Y2^k int int f_w(w n(u)) psi^{-1}(a p^k u).
/// Symbolic contexts accept combinations of Sph and IwahoriPhiW; numeric
/// contexts accept any vector.
LaurentA whittaker_coefficient(const PSVector& f, int k, const Context& ctx);

/// c_k(f) computed without the big-cell split: the integral over v(u) >= -R
/// with R large enough that every further shell contributes zero. Numeric
/// contexts only; independent of the closed forms.
LaurentA whittaker_coefficient_regularized(const PSVector& f, int k, const Context& ctx,
                                           const PadicMatrix* weyl = nullptr);

}  // namespace toric
