#include "sostree/recursion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sostree/errors.hpp"

namespace sostree {

namespace {

double log_sum_exp(const std::vector<double>& terms) {
  const double top = *std::max_element(terms.begin(), terms.end());
  double acc = 0.0;
  for (const double t : terms) acc += std::exp(t - top);
  return top + std::log(acc);
}

void validate(const TiLaw& law) {
  if (law.z.empty()) throw DomainError("TiLaw: m must be at least 1");
  if (law.k < 1) throw DomainError("TiLaw: k must be at least 1");
  for (const double z : law.z) {
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("TiLaw: components must be positive and finite");
  }
}

std::vector<double> apply_log_map(const std::vector<double>& h, int k, Coupling theta) {
  const int m = static_cast<int>(h.size());
  auto f = recursion_F(BoundaryField{h}, m, theta).h;
  for (auto& v : f) v *= k;
  return f;
}

}  // namespace

BoundaryField recursion_F(const BoundaryField& field, int m, Coupling theta) {
  if (m < 1) throw DomainError("recursion_F: m must be at least 1");
  if (static_cast<int>(field.h.size()) != m) throw DomainError("recursion_F: field must have m components");
  for (const double v : field.h) {
    if (!std::isfinite(v)) throw DomainError("recursion_F: field components must be finite");
  }
  const double log_theta = std::log(theta.value());

  // Index j = m carries h_m = 0.
  std::vector<double> den_terms(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) {
    const double hj = j < m ? field.h[static_cast<std::size_t>(j)] : 0.0;
    den_terms[static_cast<std::size_t>(j)] = (m - j) * log_theta + hj;
  }
  const double log_den = log_sum_exp(den_terms);

  BoundaryField out;
  out.h.resize(static_cast<std::size_t>(m));
  std::vector<double> num_terms(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= m; ++j) {
      const double hj = j < m ? field.h[static_cast<std::size_t>(j)] : 0.0;
      num_terms[static_cast<std::size_t>(j)] = std::abs(i - j) * log_theta + hj;
    }
    out.h[static_cast<std::size_t>(i)] = log_sum_exp(num_terms) - log_den;
  }
  return out;
}

TiLaw ti_fixed_point_map(const TiLaw& law, Coupling theta) {
  validate(law);
  std::vector<double> h(law.z.size());
  std::transform(law.z.begin(), law.z.end(), h.begin(), [](double z) { return std::log(z); });
  const auto next = apply_log_map(h, law.k, theta);
  TiLaw out{std::vector<double>(next.size()), law.k};
  std::transform(next.begin(), next.end(), out.z.begin(), [](double v) { return std::exp(v); });
  return out;
}

TiLaw mirror_ti_law(const TiLaw& law) {
  validate(law);
  const auto m = law.z.size();
  TiLaw out{std::vector<double>(m), law.k};
  const double z0 = law.z[0];
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t src = m - i;  // z_m = 1
    out.z[i] = (src == m ? 1.0 : law.z[src]) / z0;
  }
  return out;
}

FixedPointResult iterate_to_fixed_point(const TiLaw& start, Coupling theta, const FixedPointOptions& options) {
  validate(start);
  if (!(options.damping > 0.0 && options.damping <= 1.0)) {
    throw DomainError("iterate_to_fixed_point: damping must lie in (0, 1]");
  }
  if (!(options.tol > 0.0) || options.max_iter < 1) {
    throw DomainError("iterate_to_fixed_point: need tol > 0 and max_iter >= 1");
  }

  std::vector<double> h(start.z.size());
  std::transform(start.z.begin(), start.z.end(), h.begin(), [](double z) { return std::log(z); });

  FixedPointResult result;
  for (int it = 1; it <= options.max_iter; ++it) {
    const auto mapped = apply_log_map(h, start.k, theta);
    double step = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const double next = (1.0 - options.damping) * h[i] + options.damping * mapped[i];
      step = std::max(step, std::abs(next - h[i]));
      h[i] = next;
    }
    result.iterations = it;
    result.last_step = step;
    if (!std::isfinite(step)) break;
    if (step <= options.tol) {
      result.converged = true;
      break;
    }
  }

  const auto mapped = apply_log_map(h, start.k, theta);
  double residual = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) residual = std::max(residual, std::abs(mapped[i] - h[i]));
  result.residual = std::isfinite(residual) ? residual : std::numeric_limits<double>::infinity();
  result.law = TiLaw{std::vector<double>(h.size()), start.k};
  std::transform(h.begin(), h.end(), result.law.z.begin(), [](double v) { return std::exp(v); });
  return result;
}

}  // namespace sostree
