#include "sostree/thresholds.hpp"

#include <array>
#include <cmath>

#include "sostree/algebra.hpp"
#include "sostree/channel.hpp"
#include "sostree/errors.hpp"
#include "sostree/parallel.hpp"

namespace sostree {

bool ThresholdSet::ordered() const noexcept {
  return theta_c.value < theta_star.value && theta_star.value < theta_double_star.value &&
         theta_double_star.value < theta_c_prime.value && theta_c_prime.value < 1.0 &&
         1.0 < theta_bar.value && theta_bar.value < theta_double_bar.value;
}

Threshold locate_threshold(const std::string& name, const std::string& indicator,
                           const std::function<double(double)>& f, double lo, double hi, double step, double tol) {
  const auto bracket = scan_sign_change(f, lo, hi, step);
  if (!bracket) {
    throw BracketError(name + ": " + indicator + " has no sign change on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  }
  Threshold t;
  t.name = name;
  t.indicator = indicator;
  t.bracket = *bracket;
  t.value = bisect(f, bracket->first, bracket->second, tol);
  t.residual = std::abs(f(t.value));
  return t;
}

ThresholdSet find_all_thresholds() {
  ThresholdSet set;
  {
    const Coupling tc = cubic_critical_theta();
    set.theta_c = {"theta_c", "cubic discriminant", tc.value(), std::abs(cubic_y_discriminant(tc.value())),
                   {tc.value(), tc.value()}};
    const Coupling tcp = theta_c_prime();
    set.theta_c_prime = {"theta_c_prime", "xi discriminant", tcp.value(), std::abs(xi_discriminant(tcp.value())),
                         {tcp.value(), tcp.value()}};
  }
  const double tc = set.theta_c.value;
  const double tcp = set.theta_c_prime.value;
  // Keep the open intervals away from the critical points where branches
  // appear or merge.
  const double pad = 10.0 * kCriticalThetaTol;

  const auto eta = [](int branch) {
    return [branch](double t) { return ks_indicator(Coupling{t}, branch); };
  };
  const auto u = [](int branch) {
    return [branch](double t) { return msw_indicator(Coupling{t}, branch); };
  };

  set.theta_star = locate_threshold("theta_star", "eta_5", eta(5), tc + pad, tcp - pad);
  std::array<Threshold, 3> rest;
  parallel_for(3, [&](std::size_t i) {
    switch (i) {
      case 0: rest[0] = locate_threshold("theta_double_star", "u_5", u(5), set.theta_star.value, tcp - pad); break;
      case 1: rest[1] = locate_threshold("theta_bar", "u_1", u(1), 1.0, 4.0); break;
      default: rest[2] = locate_threshold("theta_double_bar", "eta_1", eta(1), 2.0, 4.0); break;
    }
  });
  set.theta_double_star = rest[0];
  set.theta_bar = rest[1];
  set.theta_double_bar = rest[2];
  return set;
}

std::vector<double> theta_grid(double theta_min, double theta_max, int steps) {
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max) || !(theta_min > 0.0)) {
    throw DomainError("theta_grid: theta_min must be positive and finite");
  }
  if (steps == 1 && theta_min == theta_max) return {theta_min};
  if (!(theta_min < theta_max) || steps < 2) {
    throw DomainError("theta_grid: need theta_min < theta_max and steps >= 2");
  }
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (theta_max - theta_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = theta_min + i * h;
  out.back() = theta_max;
  return out;
}

PhaseRow phase_row(Coupling theta) {
  const SolutionCatalog catalog = enumerate_tisgms(theta);
  PhaseRow row;
  row.theta = theta.value();
  row.regime = catalog.regime;
  row.laws = catalog.laws;
  for (const auto& law : catalog.laws) {
    const auto [l1, l2] = analytic_eigenvalues(theta, law);
    row.lambda1.push_back(l1);
    row.lambda2.push_back(l2);
    row.reports.push_back(classify_measure(theta, law));
  }
  return row;
}

std::vector<PhaseRow> phase_diagram(const std::vector<double>& thetas) {
  std::vector<PhaseRow> rows(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) { rows[i] = phase_row(Coupling{thetas[i]}); });
  return rows;
}

std::vector<PhaseRow> phase_diagram(double theta_min, double theta_max, int steps) {
  return phase_diagram(theta_grid(theta_min, theta_max, steps));
}

}  // namespace sostree
