#include "sostree/boundary_laws.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>

#include "sostree/algebra.hpp"
#include "sostree/errors.hpp"

namespace sostree {

namespace {

double theta_c_value() {
  static const double value = cubic_critical_theta().value();
  return value;
}

double theta_c_prime_value() {
  static const double value = theta_c_prime().value();
  return value;
}

double newton_cubic(double theta, double y) {
  for (int i = 0; i < 3; ++i) {
    const double d = cubic_y_derivative(theta, y);
    if (d == 0.0) break;
    const double next = y - cubic_y(theta, y) / d;
    if (!(std::abs(cubic_y(theta, next)) < std::abs(cubic_y(theta, y)))) break;
    y = next;
  }
  return y;
}

// Symmetric laws (x = 1): branches 1..3 depending on the regime.
void append_symmetric(Coupling coupling, Regime regime, std::vector<BoundaryLaw>& laws) {
  const double theta = coupling.value();
  auto roots = cubic_y_complex_roots(coupling);

  if (regime == Regime::Seven) {
    std::array<double, 3> ys{};
    for (std::size_t i = 0; i < 3; ++i) ys[i] = newton_cubic(theta, roots[i].real());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    for (int b = 0; b < 3; ++b) laws.push_back({1.0, ys[static_cast<std::size_t>(b)], b + 1});
    return;
  }

  if (regime == Regime::AtThetaC) {
    // y1 is far from the (near-)double pair, so the largest real part is it.
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.real() > b.real(); });
    laws.push_back({1.0, newton_cubic(theta, roots[0].real()), 1});
    const auto is_real = [](const std::complex<double>& r) {
      return std::abs(r.imag()) <= kImagTol * std::max(1.0, std::abs(r.real()));
    };
    double y3 = 0.0;
    if (is_real(roots[1]) && is_real(roots[2])) {
      // Just below theta_c both roots exist; the smaller one is an exact solution.
      y3 = newton_cubic(theta, std::min(roots[1].real(), roots[2].real()));
    } else {
      // Locate the critical point between the pair; that is the double root.
      double y = 0.5 * (roots[1].real() + roots[2].real());
      for (int i = 0; i < 8; ++i) {
        const double d2 = 6.0 * theta * y - 2.0;
        if (d2 == 0.0) break;
        y -= cubic_y_derivative(theta, y) / d2;
      }
      y3 = y;
    }
    laws.push_back({1.0, y3, 3});
    return;
  }

  // One real root: the one with the smallest imaginary part.
  const auto real_root = *std::min_element(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::abs(a.imag()) < std::abs(b.imag());
  });
  laws.push_back({1.0, newton_cubic(theta, real_root.real()), 1});
}

void append_asymmetric(Coupling coupling, Regime regime, std::vector<BoundaryLaw>& laws) {
  const double theta = coupling.value();
  if (regime == Regime::Unique) return;

  if (regime == Regime::AtThetaCPrime) {
    const double xi = (1.0 - 3.0 * theta * theta) / (2.0 * theta * theta);
    const auto [lo, hi] = x_pair_from_xi(xi);
    laws.push_back({lo, y_from_x(coupling, lo), 4});
    laws.push_back({hi, y_from_x(coupling, hi), 6});
    return;
  }

  const RootSet xi = solve_xi(coupling);
  if (xi.size() != 2) {
    throw InvariantError("enumerate_tisgms: expected two xi roots below theta_c'");
  }
  const auto [x5, x6] = x_pair_from_xi(xi.roots[0]);
  const auto [x4, x7] = x_pair_from_xi(xi.roots[1]);
  laws.push_back({x4, y_from_x(coupling, x4), 4});
  laws.push_back({x5, y_from_x(coupling, x5), 5});
  laws.push_back({x6, y_from_x(coupling, x6), 6});
  laws.push_back({x7, y_from_x(coupling, x7), 7});
}

}  // namespace

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::Unique: return "unique";
    case Regime::AtThetaCPrime: return "at_theta_c_prime";
    case Regime::Five: return "five";
    case Regime::AtThetaC: return "at_theta_c";
    case Regime::Seven: return "seven";
  }
  return "unknown";
}

std::vector<int> expected_branches(Regime regime) {
  switch (regime) {
    case Regime::Unique: return {1};
    case Regime::AtThetaCPrime: return {1, 4, 6};
    case Regime::Five: return {1, 4, 5, 6, 7};
    case Regime::AtThetaC: return {1, 3, 4, 5, 6, 7};
    case Regime::Seven: return {1, 2, 3, 4, 5, 6, 7};
  }
  return {};
}

int expected_law_count(Regime regime) noexcept {
  switch (regime) {
    case Regime::Unique: return 1;
    case Regime::AtThetaCPrime: return 3;
    case Regime::Five: return 5;
    case Regime::AtThetaC: return 6;
    case Regime::Seven: return 7;
  }
  return 0;
}

bool SolutionCatalog::has(int branch) const noexcept {
  return std::any_of(laws.begin(), laws.end(), [branch](const BoundaryLaw& l) { return l.branch == branch; });
}

const BoundaryLaw& SolutionCatalog::at(int branch) const {
  for (const auto& law : laws) {
    if (law.branch == branch) return law;
  }
  throw DomainError("branch " + std::to_string(branch) + " does not exist at theta = " +
                    std::to_string(theta.value()));
}

std::vector<int> SolutionCatalog::branches() const {
  std::vector<int> out;
  out.reserve(laws.size());
  for (const auto& law : laws) out.push_back(law.branch);
  return out;
}

Regime classify_regime(Coupling coupling) {
  const double theta = coupling.value();
  const double tc = theta_c_value();
  const double tcp = theta_c_prime_value();
  if (std::abs(theta - tc) <= kCriticalThetaTol) return Regime::AtThetaC;
  if (std::abs(theta - tcp) <= kCriticalThetaTol) return Regime::AtThetaCPrime;
  if (theta < tc) return Regime::Seven;
  if (theta < tcp) return Regime::Five;
  return Regime::Unique;
}

std::pair<double, double> x_pair_from_xi(double xi) {
  if (!(xi >= 2.0) || !std::isfinite(xi)) throw DomainError("x_pair_from_xi: requires xi >= 2");
  const double hi = 0.5 * (xi + std::sqrt(xi * xi - 4.0));
  return {1.0 / hi, hi};
}

double y_from_x(Coupling coupling, double x) {
  const double theta = coupling.value();
  const double radicand = (1.0 - theta * theta) * x - theta * theta * (x * x + 1.0);
  if (!(radicand > 0.0)) {
    throw DomainError("y_from_x: radicand (1 - theta^2) x - theta^2 (x^2 + 1) is not positive");
  }
  return std::sqrt(radicand / theta);
}

SolutionCatalog enumerate_tisgms(Coupling theta) {
  SolutionCatalog catalog{theta, classify_regime(theta), {}};
  append_symmetric(theta, catalog.regime, catalog.laws);
  append_asymmetric(theta, catalog.regime, catalog.laws);
  std::sort(catalog.laws.begin(), catalog.laws.end(),
            [](const BoundaryLaw& a, const BoundaryLaw& b) { return a.branch < b.branch; });
  return catalog;
}

std::pair<double, double> system_residual(Coupling coupling, double x, double y) noexcept {
  const double t = coupling.value();
  const double den = t * t * x * x + t * y * y + 1.0;
  return {x - (x * x + t * y * y + t * t) / den, y - (t * x * x + y * y + t) / den};
}

double max_system_residual(Coupling theta, const BoundaryLaw& law) noexcept {
  const auto [a, b] = system_residual(theta, law.x, law.y);
  return std::max(std::abs(a), std::abs(b));
}

int mirror_branch(int branch) {
  switch (branch) {
    case 1:
    case 2:
    case 3: return branch;
    case 4: return 7;
    case 5: return 6;
    case 6: return 5;
    case 7: return 4;
    default: throw DomainError("mirror_branch: branch id must be in 1..7");
  }
}

BoundaryLaw mirror_image(const BoundaryLaw& law) {
  if (!(law.x > 0.0) || !(law.y > 0.0)) throw DomainError("mirror_image: law must be positive");
  return {1.0 / law.x, law.y / law.x, mirror_branch(law.branch)};
}

}  // namespace sostree
