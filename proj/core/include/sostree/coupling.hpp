#pragma once

namespace sostree {

/// The single model parameter theta = exp(J * beta).
///
/// Values are restricted to [kMin, kMax]; outside that window the closed
/// forms overflow long before anything physically new happens.
class Coupling {
 public:
  static constexpr double kMin = 1e-4;
  static constexpr double kMax = 1e4;

  /// Throws DomainError unless theta is finite and inside [kMin, kMax].
  explicit Coupling(double theta);

  [[nodiscard]] constexpr double value() const noexcept { return theta_; }

  friend bool operator==(Coupling a, Coupling b) noexcept { return a.theta_ == b.theta_; }

 private:
  double theta_;
};

}  // namespace sostree
