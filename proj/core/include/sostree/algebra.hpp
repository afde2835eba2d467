#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sostree/coupling.hpp"
#include "sostree/errors.hpp"

namespace sostree {

/// Roots closer than this (relative) are reported as one double root.
inline constexpr double kDoubleRootRelTol = 1e-6;
/// Cardano roots whose imaginary part is below this are treated as real.
inline constexpr double kImagTol = 1e-10;
/// Relative residual every returned polynomial root must satisfy.
inline constexpr double kRootResidualTol = 1e-10;
inline constexpr int kBisectMaxIter = 200;

/// Ascending real roots plus a parallel flag marking double roots.
struct RootSet {
  std::vector<double> roots;
  std::vector<bool> double_root;

  [[nodiscard]] std::size_t size() const noexcept { return roots.size(); }
  [[nodiscard]] bool empty() const noexcept { return roots.empty(); }
};

// theta*y^3 - y^2 + (theta^2+1)*y - 2*theta, the x = 1 reduction of the
// boundary-law system.
[[nodiscard]] double cubic_y(double theta, double y) noexcept;
[[nodiscard]] double cubic_y_derivative(double theta, double y) noexcept;
/// Classical cubic discriminant; positive iff three distinct real roots.
[[nodiscard]] double cubic_y_discriminant(double theta) noexcept;

/// All three (complex) roots of the cubic from Cardano's formula, each
/// polished with up to three guarded Newton steps. Unordered.
[[nodiscard]] std::array<std::complex<double>, 3> cubic_y_complex_roots(Coupling theta);

/// Positive real roots of the cubic, ascending; 3, 2 (one double) or 1 of them.
[[nodiscard]] RootSet solve_cubic_y(Coupling theta);

/// The unique theta in (0, 1) where the cubic discriminant vanishes (~0.1414).
[[nodiscard]] Coupling cubic_critical_theta();

/// D = theta^2 (theta - 1)(theta^3 + theta^2 + 3 theta - 1), the discriminant
/// of the quadratic in xi = x + 1/x.
[[nodiscard]] double xi_discriminant(double theta) noexcept;

/// theta^3 xi^2 + theta (3 theta^2 - 1) xi + 2 theta^3 - 2 theta + 1.
[[nodiscard]] double xi_quadratic(double theta, double xi) noexcept;

/// Roots xi_1 <= xi_2 of the quadratic in xi. Requires theta < 1.
[[nodiscard]] RootSet solve_xi(Coupling theta);

/// Closed form (1/3)(c - 8/c - 1), c = cbrt(26 + 6 sqrt(33)); ~0.2956.
[[nodiscard]] Coupling theta_c_prime();

/// Midpoint bisection. Requires lo < hi, tol > 0 and a sign change of f over
/// [lo, hi]. Stops once the bracket is narrower than tol, after
/// kBisectMaxIter halvings, or when the midpoint is no longer representable.
template <class F>
[[nodiscard]] double bisect(F&& f, double lo, double hi, double tol) {
  if (!(lo < hi) || !(tol > 0.0) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw DomainError("bisect: need finite lo < hi and tol > 0");
  }
  double flo = f(lo);
  const double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw NumericError("bisect: non-finite function value at bracket end");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw BracketError("bisect: no sign change in bracket");
  }
  for (int it = 0; it < kBisectMaxIter && hi - lo > tol; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (!std::isfinite(fm)) throw NumericError("bisect: non-finite function value");
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

/// First sub-interval [a, a + step] of [lo, hi] over which f changes sign.
template <class F>
[[nodiscard]] std::optional<std::pair<double, double>> scan_sign_change(F&& f, double lo, double hi,
                                                                        double step) {
  if (!(lo < hi) || !(step > 0.0)) throw DomainError("scan_sign_change: bad interval");
  double a = lo;
  double fa = f(a);
  while (a < hi) {
    const double b = std::min(a + step, hi);
    const double fb = f(b);
    if (std::isfinite(fa) && std::isfinite(fb) && (fa == 0.0 || (fa < 0.0) != (fb < 0.0))) {
      return std::pair{a, b};
    }
    a = b;
    fa = fb;
  }
  return std::nullopt;
}

}  // namespace sostree
