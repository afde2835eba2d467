#pragma once

#include <string_view>

#include "sostree/boundary_laws.hpp"
#include "sostree/channel.hpp"
#include "sostree/coupling.hpp"

namespace sostree {

enum class Verdict { NonExtreme, Extreme, Undetermined };

[[nodiscard]] std::string_view to_string(Verdict verdict) noexcept;

/// Outcome of the Kesten-Stigum test (eta > 0 => non-extreme) and the
/// Martinelli-Sinclair-Weitz test (u = 2 kappa gamma - 1 < 0 => extreme) for
/// one measure at one coupling.
struct ExtremalityReport {
  int branch = 1;
  double theta = 1.0;
  double eta = 0.0;
  double kappa = 0.0;
  double gamma_bound = 0.0;
  double u = 0.0;
  Verdict verdict = Verdict::Undetermined;
};

/// |1 - theta^2| / (1 + theta^2), an upper bound on the upward disagreement
/// rate gamma valid for every boundary law.
[[nodiscard]] double gamma_upper_bound(Coupling theta) noexcept;

/// p^0(0) - p^2(0) as a function of t = p_0, u = p_2. Requires t, u >= 0 and
/// t + u <= 1.
[[nodiscard]] double disagreement_f(double t, double u, Coupling theta, const BoundaryLaw& law);
/// p^2(2) - p^0(2) as a function of t = p_0, u = p_2.
[[nodiscard]] double disagreement_g(double t, double u, Coupling theta, const BoundaryLaw& law);

/// Distribution of a site given its free marginal (p0, p1, p2) and the spin
/// of one neighbour fixed to parent_spin.
[[nodiscard]] Prob3 conditional_spin_probs(double p0, double p1, double p2, int parent_spin, Coupling theta,
                                           const BoundaryLaw& law);

/// Three-term closed expression for half the maximal row L1 distance of the
/// reduced transition matrix.
[[nodiscard]] double kappa_general(Coupling theta, const BoundaryLaw& law) noexcept;

/// Per-branch closed forms: branch 1 uses |1-theta^2| / (1+theta^2+theta y^2);
/// branches 4..7 use the sign-resolved expressions for theta < 1; branches
/// 2, 3 have no closed form and fall back to kappa_general.
[[nodiscard]] double kappa_closed_form(Coupling theta, int branch);
[[nodiscard]] double kappa_closed_form(Coupling theta, const BoundaryLaw& law);

/// u = 2 * kappa_closed_form * gamma_upper_bound - 1 (binary tree, k = 2).
/// Negative values certify extremality.
[[nodiscard]] double msw_indicator(Coupling theta, int branch);

/// Same as msw_indicator but with kappa_general in place of the closed forms.
[[nodiscard]] double msw_indicator_general(Coupling theta, int branch);

/// Branch-1 indicator with the numerator 2(1 - theta)^2 in place of
/// 2(1 - theta^2)^2; kept only for side-by-side auditing.
[[nodiscard]] double msw_indicator_u1_printed(Coupling theta);

/// Kesten-Stigum indicator eta = 2 lambda_max^2 - 1.
[[nodiscard]] double ks_indicator(Coupling theta, int branch);

[[nodiscard]] ExtremalityReport classify_measure(Coupling theta, int branch);
[[nodiscard]] ExtremalityReport classify_measure(Coupling theta, const BoundaryLaw& law);

/// Grid maximum of |f| and |g| over the simplex {t, u >= 0, t + u <= 1}
/// with spacing 1 / grid, compared against gamma_upper_bound.
struct GammaGridReport {
  int grid = 0;
  double bound = 0.0;
  double max_abs_f = 0.0;
  double f_argmax_t = 0.0;
  double f_argmax_u = 0.0;
  double max_abs_g = 0.0;
  double g_argmax_t = 0.0;
  double g_argmax_u = 0.0;
  // Where both maxima are attained according to the boundary analysis:
  // (1 / (1 + x^2), x^2 / (1 + x^2)).
  double reference_t = 0.0;
  double reference_u = 0.0;
  bool pass = false;  // both maxima <= bound + 1e-9
};

[[nodiscard]] GammaGridReport verify_gamma_bound(Coupling theta, const BoundaryLaw& law, int grid);

}  // namespace sostree
