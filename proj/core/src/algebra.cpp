#include "sostree/algebra.hpp"

#include <algorithm>

namespace sostree {

namespace {

using cd = std::complex<double>;

cd cubic_at(double theta, cd y) { return ((theta * y - 1.0) * y + (theta * theta + 1.0)) * y - 2.0 * theta; }

cd cubic_prime_at(double theta, cd y) { return (3.0 * theta * y - 2.0) * y + (theta * theta + 1.0); }

// Newton steps that are only accepted while they shrink |p|.
cd polish(double theta, cd y, int steps) {
  for (int i = 0; i < steps; ++i) {
    const cd d = cubic_prime_at(theta, y);
    if (std::abs(d) == 0.0) break;
    const cd next = y - cubic_at(theta, y) / d;
    if (!(std::abs(cubic_at(theta, next)) < std::abs(cubic_at(theta, y)))) break;
    y = next;
  }
  return y;
}

double polish_real(double theta, double y, int steps) { return polish(theta, cd{y, 0.0}, steps).real(); }

// Critical point of the cubic closest to `near`.
double nearest_critical_point(double theta, double near) {
  // 3 theta y^2 - 2 y + (theta^2 + 1) = 0
  const double a = 3.0 * theta;
  const double b = -2.0;
  const double c = theta * theta + 1.0;
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return -b / (2.0 * a);
  const double s = std::sqrt(disc);
  const double q = -0.5 * (b - s);  // b < 0, so no cancellation
  const double r1 = q / a;
  const double r2 = c / q;
  return std::abs(r1 - near) < std::abs(r2 - near) ? r1 : r2;
}

double rel_scale(double v) { return std::max(1.0, std::abs(v)); }

}  // namespace

double cubic_y(double theta, double y) noexcept {
  return ((theta * y - 1.0) * y + (theta * theta + 1.0)) * y - 2.0 * theta;
}

double cubic_y_derivative(double theta, double y) noexcept {
  return (3.0 * theta * y - 2.0) * y + (theta * theta + 1.0);
}

double cubic_y_discriminant(double theta) noexcept {
  const double a = theta;
  const double b = -1.0;
  const double c = theta * theta + 1.0;
  const double d = -2.0 * theta;
  return 18.0 * a * b * c * d - 4.0 * b * b * b * d + b * b * c * c - 4.0 * a * c * c * c - 27.0 * a * a * d * d;
}

std::array<std::complex<double>, 3> cubic_y_complex_roots(Coupling coupling) {
  const double theta = coupling.value();
  // Monic form y^3 + B y^2 + C y + E, then y = t - B/3.
  const double B = -1.0 / theta;
  const double C = (theta * theta + 1.0) / theta;
  const double E = -2.0;
  const double p = C - B * B / 3.0;
  const double q = 2.0 * B * B * B / 27.0 - B * C / 3.0 + E;

  const cd root_term = std::sqrt(cd{q * q / 4.0 + p * p * p / 27.0, 0.0});
  // Pick the sign that avoids cancellation in -q/2 +- sqrt(...).
  cd w = -q / 2.0 + root_term;
  const cd w_alt = -q / 2.0 - root_term;
  if (std::abs(w_alt) > std::abs(w)) w = w_alt;

  std::array<cd, 3> roots{};
  const double shift = -B / 3.0;
  if (std::abs(w) == 0.0) {
    roots.fill(cd{shift, 0.0});
  } else {
    const cd u = std::pow(w, 1.0 / 3.0);
    const cd omega{-0.5, std::sqrt(3.0) / 2.0};
    cd uk = u;
    for (auto& r : roots) {
      r = uk - p / (3.0 * uk) + shift;
      uk *= omega;
    }
  }
  for (auto& r : roots) r = polish(theta, r, 3);
  return roots;
}

RootSet solve_cubic_y(Coupling coupling) {
  const double theta = coupling.value();
  const auto croots = cubic_y_complex_roots(coupling);

  std::vector<std::pair<double, bool>> found;  // (root, is_double)

  // Closest pair decides whether a double root is present.
  std::size_t pi = 0;
  std::size_t pj = 1;
  double best = std::abs(croots[0] - croots[1]);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const double dist = std::abs(croots[i] - croots[j]);
      if (dist < best) {
        best = dist;
        pi = i;
        pj = j;
      }
    }
  }
  const cd mean = 0.5 * (croots[pi] + croots[pj]);
  if (best <= kDoubleRootRelTol * rel_scale(std::abs(mean))) {
    found.emplace_back(nearest_critical_point(theta, mean.real()), true);
    const std::size_t other = 3 - pi - pj;
    if (std::abs(croots[other].imag()) <= kImagTol * rel_scale(croots[other].real())) {
      found.emplace_back(polish_real(theta, croots[other].real(), 3), false);
    }
  } else {
    for (const auto& r : croots) {
      if (std::abs(r.imag()) <= kImagTol * rel_scale(r.real())) {
        found.emplace_back(polish_real(theta, r.real(), 3), false);
      }
    }
  }

  std::erase_if(found, [](const auto& e) { return !(e.first > 0.0); });
  std::sort(found.begin(), found.end());

  RootSet out;
  for (const auto& [r, dbl] : found) {
    const double scale = std::max(1.0, std::abs(r * r * r));
    // A double root is only located to ~sqrt(eps); its residual is quadratic
    // in that error, so the same tolerance still applies.
    if (std::abs(cubic_y(theta, r)) > kRootResidualTol * scale) {
      throw NumericError("solve_cubic_y: root residual above tolerance");
    }
    out.roots.push_back(r);
    out.double_root.push_back(dbl);
  }
  return out;
}

Coupling cubic_critical_theta() {
  const auto disc = [](double t) { return cubic_y_discriminant(t); };
  const auto bracket = scan_sign_change(disc, 1e-3, 1.0, 1e-3);
  if (!bracket) throw BracketError("cubic_critical_theta: discriminant has no sign change in (0, 1)");
  // Run to machine resolution; the returned discriminant is then ~1e-17.
  return Coupling{bisect(disc, bracket->first, bracket->second, 1e-300)};
}

double xi_discriminant(double theta) noexcept {
  return theta * theta * (theta - 1.0) * (theta * theta * theta + theta * theta + 3.0 * theta - 1.0);
}

double xi_quadratic(double theta, double xi) noexcept {
  const double t2 = theta * theta;
  const double t3 = t2 * theta;
  return t3 * xi * xi + theta * (3.0 * t2 - 1.0) * xi + 2.0 * t3 - 2.0 * theta + 1.0;
}

RootSet solve_xi(Coupling coupling) {
  const double theta = coupling.value();
  if (theta >= 1.0) throw DomainError("solve_xi: requires theta < 1");
  const double t2 = theta * theta;
  // D / theta^2, the discriminant of the quadratic divided by theta^2.
  const double reduced = (theta - 1.0) * (theta * theta * theta + t2 + 3.0 * theta - 1.0);
  const double center = (1.0 - 3.0 * t2) / (2.0 * t2);
  const double separation = std::sqrt(std::abs(reduced)) / t2;

  RootSet out;
  if (separation <= kDoubleRootRelTol * rel_scale(center)) {
    out.roots = {center};
    out.double_root = {true};
  } else if (reduced > 0.0) {
    const double s = std::sqrt(reduced);
    out.roots = {(1.0 - 3.0 * t2 - s) / (2.0 * t2), (1.0 - 3.0 * t2 + s) / (2.0 * t2)};
    out.double_root = {false, false};
  }
  return out;
}

Coupling theta_c_prime() {
  const double c = std::cbrt(26.0 + 6.0 * std::sqrt(33.0));
  const double value = (c - 8.0 / c - 1.0) / 3.0;
  if (std::abs(xi_discriminant(value)) > 1e-12) {
    throw InvariantError("theta_c_prime: closed form does not annihilate D");
  }
  return Coupling{value};
}

}  // namespace sostree
