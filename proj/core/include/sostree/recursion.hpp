#pragma once

#include <vector>

#include "sostree/coupling.hpp"

namespace sostree {

/// Boundary field (h_0, ..., h_{m-1}); each entry is the log-weight of a spin
/// value relative to the top value m.
struct BoundaryField {
  std::vector<double> h;
};

/// Translation-invariant boundary law z_i = exp(h_i) for an m+1 state SOS
/// model on the Cayley tree of order k.
struct TiLaw {
  std::vector<double> z;
  int k = 2;

  [[nodiscard]] int m() const noexcept { return static_cast<int>(z.size()); }
};

/// One step of the compatibility recursion for a single child:
///   F_i = ln( (sum_j theta^|i-j| e^{h_j} + theta^{m-i}) / (sum_j theta^{m-j} e^{h_j} + 1) ).
/// Evaluated as a difference of log-sum-exps so large fields do not overflow.
[[nodiscard]] BoundaryField recursion_F(const BoundaryField& field, int m, Coupling theta);

/// Right-hand side of the translation-invariant fixed-point system,
/// z_i <- (ratio_i)^k.
[[nodiscard]] TiLaw ti_fixed_point_map(const TiLaw& law, Coupling theta);

/// The spin-flip image z_i -> z_{m-i} / z_0 (with z_m = 1).
[[nodiscard]] TiLaw mirror_ti_law(const TiLaw& law);

struct FixedPointOptions {
  double damping = 0.5;
  double tol = 1e-12;
  int max_iter = 10000;
};

struct FixedPointResult {
  TiLaw law;
  bool converged = false;
  int iterations = 0;
  double last_step = 0.0;  // max |h_new - h_old| of the final iteration
  double residual = 0.0;   // max |ln map(z) - ln z| at the returned law
};

/// Damped iteration h <- (1 - d) h + d * k F(h) in log coordinates. Finds
/// attracting fixed points only; failure to converge is reported, not thrown.
[[nodiscard]] FixedPointResult iterate_to_fixed_point(const TiLaw& start, Coupling theta,
                                                      const FixedPointOptions& options = {});

}  // namespace sostree
