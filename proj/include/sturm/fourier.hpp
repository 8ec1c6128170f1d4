#pragma once

#include "sturm/grid_function.hpp"
#include "sturm/spectral_data.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Two-sided Fourier coefficients c(n) = integral of f(x) e^{-2 pi i n x},
// stored for |n| <= K.
class FourierVector {
 public:
  explicit FourierVector(int K) : K_(K), coeffs_(ComplexVector::Zero(2 * K + 1)) {}

  int K() const { return K_; }
  Complex operator()(int n) const { return coeffs_[n + K_]; }
  Complex& operator()(int n) { return coeffs_[n + K_]; }
  const ComplexVector& raw() const { return coeffs_; }

 private:
  int K_;
  ComplexVector coeffs_;
};

// All transforms use the midpoint rule on f's own grid.  On the midpoint grid
// discrete orthogonality of e^{2 pi i n x} holds exactly for |m - n| < P, so
// with the K <= P/4 guard every transform below is exact on bandlimited data.

// Real part of the n-th sine coefficient integral of f sin(pi n x); 1 <= n <= P/4.
double sine_coeff(const GridFunction& f, int n);
// Real part of integral of f cos(pi n x); 0 <= n <= P/4.
double cosine_coeff(const GridFunction& f, int n);

FourierVector dft(const GridFunction& f, int K);
// Midpoint samples of sum over |n| <= K of c(n) e^{2 pi i n x}; requires P >= 4K.
GridFunction synthesize(const FourierVector& c, Index P);

// Circular convolution over the unit period, computed in the Fourier domain
// with K = P/4 modes.
GridFunction convolve(const GridFunction& f, const GridFunction& g);
// k-fold self-convolution via coefficient powers (k >= 1).
GridFunction conv_power(const GridFunction& f, int k);

// Parity about x = 1/2; the midpoint grid maps onto itself under x -> 1 - x.
GridFunction odd_part(const GridFunction& f);
GridFunction even_part(const GridFunction& f);

// s = 0: L2 norm; s = 1: (||f||^2 + ||f'||^2)^{1/2} with finite-difference
// derivative (centered inside, one-sided at the ends).  Other s rejected.
double sobolev_norm(const GridFunction& f, double s);

// Sine-basis synthesis f(x) = 2 sum_n rho_n sin(pi n x), so that
// sine_coeff(f, n) = rho_n exactly for n within the alias guard.
GridFunction rho_to_function(const RhoSequence& rho, Index P);

}  // namespace sturm
