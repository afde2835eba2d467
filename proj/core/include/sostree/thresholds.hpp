#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sostree/boundary_laws.hpp"
#include "sostree/coupling.hpp"
#include "sostree/extremality.hpp"

namespace sostree {

inline constexpr double kThresholdScanStep = 1e-3;
inline constexpr double kThresholdTol = 1e-10;

struct Threshold {
  std::string name;
  std::string indicator;  // function whose sign change defines the value
  double value = 0.0;
  double residual = 0.0;  // |indicator(value)|
  std::pair<double, double> bracket{0.0, 0.0};
};

struct ThresholdSet {
  Threshold theta_c;
  Threshold theta_c_prime;
  Threshold theta_star;
  Threshold theta_double_star;
  Threshold theta_bar;
  Threshold theta_double_bar;

  [[nodiscard]] std::vector<const Threshold*> all() const {
    return {&theta_c, &theta_c_prime, &theta_star, &theta_double_star, &theta_bar, &theta_double_bar};
  }
  /// theta_c < theta* < theta** < theta_c' < 1 < theta_bar < theta_double_bar.
  [[nodiscard]] bool ordered() const noexcept;
};

/// Sign scan of f over [lo, hi] with `step`, then bisection to `tol`.
/// Throws BracketError naming `indicator` when no sign change is found.
[[nodiscard]] Threshold locate_threshold(const std::string& name, const std::string& indicator,
                                         const std::function<double(double)>& f, double lo, double hi,
                                         double step = kThresholdScanStep, double tol = kThresholdTol);

/// theta* from eta_5, theta** from u_5, theta_bar from u_1, theta_double_bar
/// from eta_1. The six searches run concurrently.
[[nodiscard]] ThresholdSet find_all_thresholds();

/// theta_min + i (theta_max - theta_min) / (steps - 1). A single point is
/// allowed when theta_min == theta_max and steps == 1.
[[nodiscard]] std::vector<double> theta_grid(double theta_min, double theta_max, int steps);

struct PhaseRow {
  double theta = 1.0;
  Regime regime = Regime::Unique;
  std::vector<BoundaryLaw> laws;
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::vector<ExtremalityReport> reports;
  [[nodiscard]] std::size_t count() const noexcept { return laws.size(); }
};

/// Full per-branch table on theta_grid(theta_min, theta_max, steps), rows in
/// ascending theta regardless of how the work was scheduled.
[[nodiscard]] std::vector<PhaseRow> phase_diagram(double theta_min, double theta_max, int steps);
[[nodiscard]] std::vector<PhaseRow> phase_diagram(const std::vector<double>& thetas);
[[nodiscard]] PhaseRow phase_row(Coupling theta);

}  // namespace sostree
