#include "sostree/coupling.hpp"

#include <cmath>

#include "sostree/errors.hpp"

namespace sostree {

Coupling::Coupling(double theta) : theta_(theta) {
  if (!std::isfinite(theta) || theta < kMin || theta > kMax) {
    throw DomainError("theta must be finite and within [1e-4, 1e4]");
  }
}

}  // namespace sostree
