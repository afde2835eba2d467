#include "sostree/extremality.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sostree/errors.hpp"

namespace sostree {

namespace {

constexpr double kSimplexTol = 1e-12;

void check_simplex(double t, double u) {
  if (!(t >= -kSimplexTol) || !(u >= -kSimplexTol) || !(t + u <= 1.0 + kSimplexTol)) {
    throw DomainError("disagreement: (t, u) must lie in the probability simplex");
  }
}

// Denominators of p^0(.) and p^2(.) written in (t, u).
struct SimplexDenominators {
  double d0;
  double d2;
};

SimplexDenominators denominators(double t, double u, double theta, const BoundaryLaw& law) {
  const double x2 = law.x * law.x;
  const double y2 = law.y * law.y;
  return {(x2 - theta * y2) * t + theta * (theta - y2) * u + theta * y2,
          theta * (theta * x2 - y2) * t + (1.0 - theta * y2) * u + theta * y2};
}

}  // namespace

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::NonExtreme: return "NonExtreme";
    case Verdict::Extreme: return "Extreme";
    case Verdict::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

double gamma_upper_bound(Coupling coupling) noexcept {
  const double t2 = coupling.value() * coupling.value();
  return std::abs(1.0 - t2) / (1.0 + t2);
}

double disagreement_f(double t, double u, Coupling coupling, const BoundaryLaw& law) {
  check_simplex(t, u);
  const double theta = coupling.value();
  const double x2 = law.x * law.x;
  const auto [d0, d2] = denominators(t, u, theta, law);
  return x2 * t / d0 - x2 * theta * theta * t / d2;
}

double disagreement_g(double t, double u, Coupling coupling, const BoundaryLaw& law) {
  check_simplex(t, u);
  const double theta = coupling.value();
  const auto [d0, d2] = denominators(t, u, theta, law);
  return u / d2 - theta * theta * u / d0;
}

Prob3 conditional_spin_probs(double p0, double p1, double p2, int parent_spin, Coupling coupling,
                             const BoundaryLaw& law) {
  for (const double p : {p0, p1, p2}) {
    if (!(p >= 0.0) || !std::isfinite(p)) throw DomainError("conditional_spin_probs: negative probability");
  }
  if (std::abs(p0 + p1 + p2 - 1.0) > 1e-12) throw DomainError("conditional_spin_probs: probabilities must sum to 1");
  if (parent_spin < 0 || parent_spin > 2) throw DomainError("conditional_spin_probs: parent spin must be 0, 1 or 2");

  const double t = coupling.value();
  const double a = law.x * law.x * p0;
  const double b = law.y * law.y * p1;
  const double c = p2;
  // theta^|s - parent| weights against the free marginal tilted by the law.
  const std::array<double, 3> tilt{a, b, c};
  Prob3 out{};
  double sum = 0.0;
  for (int s = 0; s < 3; ++s) {
    const double w = std::pow(t, std::abs(s - parent_spin)) * tilt[static_cast<std::size_t>(s)];
    out[static_cast<std::size_t>(s)] = w;
    sum += w;
  }
  if (!(sum > 0.0)) throw DomainError("conditional_spin_probs: degenerate marginal");
  for (auto& v : out) v /= sum;
  return out;
}

double kappa_general(Coupling coupling, const BoundaryLaw& law) noexcept {
  const double t = coupling.value();
  const double x = law.x;
  const double y = law.y;
  const double z = t * t * x * x + t * y * y + 1.0;
  const double rows01 = (x * x * std::abs(y - t * x) + (y * y + t) * std::abs(x - t * y)) / (x * y);
  const double rows02 = (x * x * std::abs(1.0 - t * t * x) + t * y * y * std::abs(1.0 - x) + std::abs(t * t - x)) / x;
  const double rows12 = ((t * x * x + y * y) * std::abs(1.0 - t * y) + std::abs(t - y)) / y;
  return std::max({rows01, rows02, rows12}) / (2.0 * z);
}

double kappa_closed_form(Coupling coupling, const BoundaryLaw& law) {
  const double t = coupling.value();
  const double x = law.x;
  const double y = law.y;
  const double t2 = t * t;
  const double z = t2 * x * x + t * y * y + 1.0;
  switch (law.branch) {
    case 1: return std::abs(1.0 - t2) / (1.0 + t2 + t * y * y);
    case 2:
    case 3: return kappa_general(coupling, law);
    case 4: return (1.0 - t2) * (t * y * y + (t2 + 1.0) * x * x) / (x * z * z);
    case 5: return (1.0 - t2) * (t * x * x + y * y) / (y * z * z);
    case 6:
    case 7: return x * (1.0 - t2) * (y * y + t) / (y * z * z);
    default: throw DomainError("kappa_closed_form: branch id must be in 1..7");
  }
}

double kappa_closed_form(Coupling theta, int branch) {
  return kappa_closed_form(theta, enumerate_tisgms(theta).at(branch));
}

double msw_indicator(Coupling theta, int branch) {
  return 2.0 * kappa_closed_form(theta, branch) * gamma_upper_bound(theta) - 1.0;
}

double msw_indicator_general(Coupling theta, int branch) {
  return 2.0 * kappa_general(theta, enumerate_tisgms(theta).at(branch)) * gamma_upper_bound(theta) - 1.0;
}

double msw_indicator_u1_printed(Coupling coupling) {
  const double t = coupling.value();
  const double y1 = enumerate_tisgms(coupling).at(1).y;
  return 2.0 * (1.0 - t) * (1.0 - t) / ((1.0 + t * t) * (1.0 + t * t + t * y1 * y1)) - 1.0;
}

double ks_indicator(Coupling theta, int branch) { return spectral_summary(theta, branch).eta; }

ExtremalityReport classify_measure(Coupling theta, const BoundaryLaw& law) {
  ExtremalityReport r;
  r.branch = law.branch;
  r.theta = theta.value();
  r.eta = spectral_summary(theta, law).eta;
  r.kappa = kappa_closed_form(theta, law);
  r.gamma_bound = gamma_upper_bound(theta);
  r.u = 2.0 * r.kappa * r.gamma_bound - 1.0;
  if (r.eta > 0.0) {
    r.verdict = Verdict::NonExtreme;
  } else if (r.u < 0.0) {
    r.verdict = Verdict::Extreme;
  } else {
    r.verdict = Verdict::Undetermined;
  }
  return r;
}

ExtremalityReport classify_measure(Coupling theta, int branch) {
  return classify_measure(theta, enumerate_tisgms(theta).at(branch));
}

GammaGridReport verify_gamma_bound(Coupling theta, const BoundaryLaw& law, int grid) {
  if (grid < 1) throw DomainError("verify_gamma_bound: grid must be positive");
  GammaGridReport r;
  r.grid = grid;
  r.bound = gamma_upper_bound(theta);
  const double x2 = law.x * law.x;
  r.reference_t = 1.0 / (1.0 + x2);
  r.reference_u = x2 / (1.0 + x2);
  const double h = 1.0 / grid;
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; i + j <= grid; ++j) {
      const double t = i * h;
      const double u = j * h;
      const double f = std::abs(disagreement_f(t, u, theta, law));
      const double g = std::abs(disagreement_g(t, u, theta, law));
      if (f > r.max_abs_f) {
        r.max_abs_f = f;
        r.f_argmax_t = t;
        r.f_argmax_u = u;
      }
      if (g > r.max_abs_g) {
        r.max_abs_g = g;
        r.g_argmax_t = t;
        r.g_argmax_u = u;
      }
    }
  }
  r.pass = r.max_abs_f <= r.bound + 1e-9 && r.max_abs_g <= r.bound + 1e-9;
  return r;
}

}  // namespace sostree
