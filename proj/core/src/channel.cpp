#include "sostree/channel.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "sostree/errors.hpp"

namespace sostree {

namespace {

constexpr double kEigenClamp = 1e-10;
constexpr double kFormAgreementTol = 1e-10;

}  // namespace

Matrix3 unreduced_matrix(Coupling coupling, const BoundaryLaw& law) {
  const double t = coupling.value();
  const double x2 = law.x * law.x;
  const double y2 = law.y * law.y;
  const Matrix3 w{{{x2, t * y2, t * t}, {t * x2, y2, t}, {t * t * x2, t * y2, 1.0}}};
  Matrix3 p{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double row = w[i][0] + w[i][1] + w[i][2];
    for (std::size_t j = 0; j < 3; ++j) p[i][j] = w[i][j] / row;
  }
  return p;
}

Channel build_channel(Coupling coupling, const BoundaryLaw& law) {
  if (!(law.x > 0.0) || !(law.y > 0.0)) throw PreconditionError("build_channel: law must be positive");
  const double residual = max_system_residual(coupling, law);
  if (!(residual <= kLawResidualTol)) {
    throw PreconditionError("build_channel: law does not solve the fixed-point system at theta");
  }
  const double t = coupling.value();
  const double x = law.x;
  const double y = law.y;
  const double z = t * t * x * x + t * y * y + 1.0;

  Channel ch{{}, z, coupling, law};
  ch.p = Matrix3{{{x / z, t * y * y / (x * z), t * t / (x * z)},
                  {t * x * x / (y * z), y / z, t / (y * z)},
                  {t * t * x * x / z, t * y * y / z, 1.0 / z}}};

  const Matrix3 reference = unreduced_matrix(coupling, law);
  const double tol = kFormAgreementTol + 10.0 * residual * std::max({1.0, x, y});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (std::abs(ch.p[i][j] - reference[i][j]) > tol) {
        throw InvariantError("build_channel: reduced and unreduced matrices disagree");
      }
    }
  }
  return ch;
}

Prob3 stationary_distribution(const Channel& channel) {
  // pi (P - I) = 0 with one equation replaced by sum(pi) = 1.
  Eigen::Matrix3d a;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = channel.p[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] - (i == j ? 1.0 : 0.0);
    }
  }
  a.row(2).setOnes();
  const Eigen::Vector3d b(0.0, 0.0, 1.0);
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(a);
  if (lu.rank() < 3) throw NumericError("stationary_distribution: singular system");
  const Eigen::Vector3d pi = lu.solve(b);
  Prob3 out{pi(0), pi(1), pi(2)};
  for (const double v : out) {
    if (!(v > 0.0) || !std::isfinite(v)) throw NumericError("stationary_distribution: non-positive component");
  }
  return out;
}

double eigen_discriminant(Coupling coupling, const BoundaryLaw& law) noexcept {
  const double t = coupling.value();
  const double x = law.x;
  const double y = law.y;
  const double z = t * t * x * x + t * y * y + 1.0;
  const double a = 1.0 + x + y - 3.0 * z;
  return a * a - 4.0 * t * t * z / x * (1.0 + x * x * x + y * y * y);
}

std::pair<double, double> analytic_eigenvalues(Coupling coupling, const BoundaryLaw& law) {
  // Extended precision: near a double eigenvalue the discriminant is a
  // difference of two large, nearly equal terms.
  using ld = long double;
  const ld t = coupling.value();
  const ld x = law.x;
  const ld y = law.y;
  const ld z = t * t * x * x + t * y * y + 1.0L;
  const ld a = 1.0L + x + y - 3.0L * z;
  ld disc = a * a - 4.0L * t * t * z / x * (1.0L + x * x * x + y * y * y);
  if (disc < 0.0L) {
    if (disc < -static_cast<ld>(kEigenClamp) * std::max(1.0L, a * a)) {
      throw InvariantError("analytic_eigenvalues: complex eigenvalues");
    }
    disc = 0.0L;
  }
  const ld s = std::sqrt(disc);
  const ld base = x + y + 1.0L - z;
  return {static_cast<double>((base - s) / (2.0L * z)), static_cast<double>((base + s) / (2.0L * z))};
}

double eigen_quadratic_residual(Coupling coupling, const BoundaryLaw& law, double lambda) noexcept {
  const double t = coupling.value();
  const double x = law.x;
  const double y = law.y;
  const double z = t * t * x * x + t * y * y + 1.0;
  const double c2 = z * x;
  const double c1 = x * (1.0 + x + y - 3.0 * z);
  const double c0 = t * t * (1.0 + x * x * x + y * y * y);
  const double s = 1.0 - lambda;
  const double scale = std::max({std::abs(c2), std::abs(c1), std::abs(c0)});
  return std::abs(c2 * s * s + c1 * s + c0) / scale;
}

std::array<std::complex<double>, 2> numeric_eigenvalues(const Channel& channel) {
  const auto& p = channel.p;
  std::array<std::complex<double>, 3> ev{};
  // P01 P12 P20 = P02 P21 P10 makes P similar to S_ij = sqrt(P_ij P_ji),
  // whose eigenvalues stay well conditioned even when two of them meet.
  const double forward = p[0][1] * p[1][2] * p[2][0];
  const double backward = p[0][2] * p[2][1] * p[1][0];
  if (std::abs(forward - backward) <= 1e-12 * std::max(forward, backward)) {
    Eigen::Matrix3d sym;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        sym(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            i == j ? p[i][i] : std::sqrt(p[i][j] * p[j][i]);
      }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericError("numeric_eigenvalues: eigensolver failed");
    for (Eigen::Index i = 0; i < 3; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  } else {
    Eigen::Matrix3d m;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = p[i][j];
    }
    const Eigen::EigenSolver<Eigen::Matrix3d> solver(m, false);
    if (solver.info() != Eigen::Success) throw NumericError("numeric_eigenvalues: eigensolver failed");
    for (Eigen::Index i = 0; i < 3; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  }
  // Drop the Perron eigenvalue 1.
  const auto perron = std::min_element(ev.begin(), ev.end(), [](const auto& a, const auto& b) {
    return std::abs(a - 1.0) < std::abs(b - 1.0);
  });
  std::iter_swap(perron, ev.end() - 1);
  std::array<std::complex<double>, 2> out{ev[0], ev[1]};
  if (std::abs(out[1]) < std::abs(out[0])) std::swap(out[0], out[1]);
  return out;
}

double half_max_row_distance(const Matrix3& p) noexcept {
  double best = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      double l1 = 0.0;
      for (std::size_t l = 0; l < 3; ++l) l1 += std::abs(p[i][l] - p[j][l]);
      best = std::max(best, l1);
    }
  }
  return 0.5 * best;
}

SpectralSummary spectral_summary(Coupling theta, const BoundaryLaw& law) {
  const auto [l1, l2] = analytic_eigenvalues(theta, law);
  SpectralSummary s;
  s.lambda1 = l1;
  s.lambda2 = l2;
  s.dominant = std::abs(l1) > std::abs(l2) ? 1 : 2;
  s.lambda_max = std::max(std::abs(l1), std::abs(l2));
  s.eta = 2.0 * s.lambda_max * s.lambda_max - 1.0;
  const int expected = (law.branch == 1 && theta.value() > 1.0) ? 1 : 2;
  // Ties (|l1| == |l2|, e.g. theta = 1) agree with either entry.
  s.matches_reference = s.dominant == expected || std::abs(l1) == std::abs(l2);
  return s;
}

SpectralSummary spectral_summary(Coupling theta, int branch) {
  const auto catalog = enumerate_tisgms(theta);
  return spectral_summary(theta, catalog.at(branch));
}

}  // namespace sostree
