#include "sturm/grid_function.hpp"

#include <cmath>

namespace sturm {

GridFunction::GridFunction(double length, ComplexVector values)
    : length_(length), values_(std::move(values)) {
  if (!(length_ > 0.0) || !std::isfinite(length_))
    throw Error(ErrorCode::grid_mismatch, "grid length must be positive");
  if (values_.size() == 0)
    throw Error(ErrorCode::grid_mismatch, "grid function needs at least one sample");
}

bool GridFunction::is_real(double tol) const {
  return values_.imag().cwiseAbs().maxCoeff() <= tol;
}

void GridFunction::require_same_grid(const GridFunction& other) const {
  if (size() != other.size() || std::abs(length_ - other.length_) > 1e-12)
    throw Error(ErrorCode::grid_mismatch, "operands live on different grids");
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(other);
  values_ += other.values_;
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(other);
  values_ -= other.values_;
  return *this;
}

}  // namespace sturm
