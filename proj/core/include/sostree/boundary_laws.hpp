#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "sostree/coupling.hpp"

namespace sostree {

/// Tolerance on |theta - theta_c| and |theta - theta_c'| inside which theta
/// is treated as sitting exactly on the critical value.
inline constexpr double kCriticalThetaTol = 1e-9;
/// Largest residual of the fixed-point system accepted for a boundary law.
inline constexpr double kLawResidualTol = 1e-9;

/// A translation-invariant boundary law in the variables x = sqrt(z0),
/// y = sqrt(z1), tagged with its branch id 1..7.
///
/// Branches 1-3 are the mirror-symmetric laws (x = 1) with y1 > y2 > y3.
/// Branches 4, 5 have x < 1 and their mirror partners 7, 6 have x > 1.
struct BoundaryLaw {
  double x = 1.0;
  double y = 1.0;
  int branch = 1;
};

enum class Regime {
  Unique,         // theta > theta_c'
  AtThetaCPrime,  // theta == theta_c'
  Five,           // theta_c < theta < theta_c'
  AtThetaC,       // theta == theta_c
  Seven,          // theta < theta_c
};

[[nodiscard]] std::string_view to_string(Regime regime) noexcept;
[[nodiscard]] int expected_law_count(Regime regime) noexcept;
[[nodiscard]] std::vector<int> expected_branches(Regime regime);

struct SolutionCatalog {
  Coupling theta;
  Regime regime = Regime::Unique;
  std::vector<BoundaryLaw> laws;  // sorted by branch

  [[nodiscard]] bool has(int branch) const noexcept;
  /// Throws DomainError when the branch does not exist at this theta.
  [[nodiscard]] const BoundaryLaw& at(int branch) const;
  [[nodiscard]] std::vector<int> branches() const;
};

/// Regime of theta relative to theta_c and theta_c'.
[[nodiscard]] Regime classify_regime(Coupling theta);

/// Both solutions of x + 1/x = xi, smaller first. Their product is 1 up to
/// rounding. Throws DomainError if xi < 2.
[[nodiscard]] std::pair<double, double> x_pair_from_xi(double xi);

/// y = sqrt(((1 - theta^2) x - theta^2 (x^2 + 1)) / theta). Throws
/// DomainError when the radicand is not positive.
[[nodiscard]] double y_from_x(Coupling theta, double x);

/// All translation-invariant boundary laws of the m = k = 2 system.
[[nodiscard]] SolutionCatalog enumerate_tisgms(Coupling theta);

/// (x - RHS_a, y - RHS_b) of the fixed-point system in (x, y).
[[nodiscard]] std::pair<double, double> system_residual(Coupling theta, double x, double y) noexcept;
[[nodiscard]] double max_system_residual(Coupling theta, const BoundaryLaw& law) noexcept;

/// Branch id of the mirror partner: 4 <-> 7, 5 <-> 6, 1..3 fixed.
[[nodiscard]] int mirror_branch(int branch);

/// The spin-flip image (1/x, y/x) of a law.
[[nodiscard]] BoundaryLaw mirror_image(const BoundaryLaw& law);

}  // namespace sostree
