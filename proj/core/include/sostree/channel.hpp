#pragma once

#include <array>
#include <complex>
#include <utility>

#include "sostree/boundary_laws.hpp"
#include "sostree/coupling.hpp"

namespace sostree {

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Prob3 = std::array<double, 3>;

/// Transition matrix of the tree-indexed Markov chain of a TISGM.
struct Channel {
  Matrix3 p{};
  double z_norm = 0.0;  // theta^2 x^2 + theta y^2 + 1
  Coupling theta;
  BoundaryLaw law;
};

/// Builds the reduced form P = (1/Z) [[x, theta y^2/x, theta^2/x], ...].
/// Throws PreconditionError unless the law solves the system at theta, and
/// InvariantError if the result disagrees with the row-normalized form.
[[nodiscard]] Channel build_channel(Coupling theta, const BoundaryLaw& law);

/// The row-normalized weights theta^|i-j| z_j before any use of the
/// fixed-point equations. Valid for any positive (x, y).
[[nodiscard]] Matrix3 unreduced_matrix(Coupling theta, const BoundaryLaw& law);

/// Unique pi with pi P = pi and sum(pi) = 1.
[[nodiscard]] Prob3 stationary_distribution(const Channel& channel);

/// Discriminant (1 + x + y - 3Z)^2 - 4 theta^2 Z x^-1 (1 + x^3 + y^3).
[[nodiscard]] double eigen_discriminant(Coupling theta, const BoundaryLaw& law) noexcept;

/// The two non-Perron eigenvalues (lambda1, lambda2) in closed form;
/// lambda1 takes the minus sign. Small negative discriminants from rounding
/// are clamped; larger ones raise InvariantError.
[[nodiscard]] std::pair<double, double> analytic_eigenvalues(Coupling theta, const BoundaryLaw& law);

/// Residual of Z x (1-l)^2 + x (1+x+y-3Z)(1-l) + theta^2 (1+x^3+y^3) at l,
/// divided by the largest coefficient magnitude.
[[nodiscard]] double eigen_quadratic_residual(Coupling theta, const BoundaryLaw& law, double lambda) noexcept;

/// Non-Perron eigenvalues of the built matrix, ordered by increasing
/// modulus. Uses a symmetric eigensolver on the similar matrix
/// sqrt(P_ij P_ji) when P passes Kolmogorov's cycle test, otherwise a general
/// dense eigensolver.
[[nodiscard]] std::array<std::complex<double>, 2> numeric_eigenvalues(const Channel& channel);

/// Half the largest L1 distance between two rows.
[[nodiscard]] double half_max_row_distance(const Matrix3& p) noexcept;

struct SpectralSummary {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda_max = 0.0;
  double eta = 0.0;  // 2 lambda_max^2 - 1; positive means k lambda^2 > 1 for k = 2
  int dominant = 2;  // which of lambda1 / lambda2 attains lambda_max
  // Whether `dominant` agrees with the reference table (branch 1: lambda2
  // for theta < 1, lambda1 for theta > 1; other branches: lambda2).
  bool matches_reference = true;
};

[[nodiscard]] SpectralSummary spectral_summary(Coupling theta, const BoundaryLaw& law);
/// Throws DomainError if the branch does not exist at theta.
[[nodiscard]] SpectralSummary spectral_summary(Coupling theta, int branch);

}  // namespace sostree
