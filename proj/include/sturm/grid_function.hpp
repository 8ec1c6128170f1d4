#pragma once

#include <utility>

#include "sturm/errors.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Midpoint samples of a function on [0, L]: node(i) = (i + 1/2) * L / P.
// Values are stored complex; real-valued data keeps a zero imaginary part.
// The midpoint grid is what makes discrete sine/cosine orthogonality exact
// for mode numbers up to P/4 (see fourier.hpp), so every module samples on it.
class GridFunction {
 public:
  GridFunction(double length, ComplexVector values);

  static GridFunction zeros(double length, Index count) {
    return GridFunction(length, ComplexVector::Zero(count));
  }
  static GridFunction from_real(double length, const Vector& values) {
    return GridFunction(length, values.cast<Complex>());
  }
  // f is evaluated at the midpoints; may return double or Complex.
  template <class F>
  static GridFunction sample(double length, Index count, F&& f) {
    ComplexVector v(count);
    const double h = length / static_cast<double>(count);
    for (Index i = 0; i < count; ++i) v[i] = Complex(f((i + 0.5) * h));
    return GridFunction(length, std::move(v));
  }

  double length() const { return length_; }
  Index size() const { return values_.size(); }
  double step() const { return length_ / static_cast<double>(values_.size()); }
  double node(Index i) const { return (i + 0.5) * step(); }

  const ComplexVector& values() const { return values_; }
  ComplexVector& values() { return values_; }
  Vector real_values() const { return values_.real(); }
  bool is_real(double tol = 1e-12) const;

  Complex quadrature() const { return step() * values_.sum(); }
  double norm() const { return std::sqrt(step() * values_.squaredNorm()); }

  GridFunction& operator+=(const GridFunction& other);
  GridFunction& operator-=(const GridFunction& other);
  GridFunction& operator*=(Complex c) {
    values_ *= c;
    return *this;
  }

  friend GridFunction operator+(GridFunction a, const GridFunction& b) {
    a += b;
    return a;
  }
  friend GridFunction operator-(GridFunction a, const GridFunction& b) {
    a -= b;
    return a;
  }
  friend GridFunction operator*(Complex c, GridFunction f) {
    f *= c;
    return f;
  }

  // Throws grid_mismatch unless both functions share length and size.
  void require_same_grid(const GridFunction& other) const;

 private:
  double length_;
  ComplexVector values_;
};

}  // namespace sturm
