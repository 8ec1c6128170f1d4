#pragma once

#include "sturm/grid_function.hpp"
#include "sturm/spectral_data.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Inverse problem pipeline: from (lambda, alpha) build
//   phi(x)  = sum_{n<=N} (2 cos pi n x - alpha_n cos sqrt(lambda_n) x)
//   f(x,t)  = (phi(x+t) - phi(|x-t|)) / 2
// solve the Gelfand-Levitan-Marchenko equation
//   k(x,t) + f(x,t) + int_0^x k(x,xi) f(xi,t) dxi = 0   (t <= x)
// and read off sigma(x) = -phi(2x) - 2 int_0^x k(x,xi) f(xi,x) dxi.
// Under the unperturbed tail pad phi is a finite sum, evaluated analytically
// at exact arguments everywhere (never interpolated).

class PhiFunction {
 public:
  PhiFunction(const NormingSpectra& data, Index P2);

  // Finite cosine sum at an arbitrary argument in [0,2].
  double value(double x) const;
  // phi(0) = sum (2 - alpha_n), the only value the diagonal of f needs.
  double phi0() const { return phi0_; }
  const GridFunction& grid() const { return grid_; }
  Index source_count() const { return sqrt_lambda_.size(); }

 private:
  Vector sqrt_lambda_, alpha_;
  GridFunction grid_;
  double phi0_;
};

PhiFunction build_phi(const NormingSpectra& data, Index P2);

// F[i][j] = f(x_i, x_j) on the midpoint grid of [0,1]; exactly symmetric.
Matrix build_f_matrix(const PhiFunction& phi, Index P);

// Smallest eigenvalue of I + (1/P) F; positivity is the discrete solvability
// certificate for the GLM systems.
double check_positivity(const Matrix& F);

struct TriangularKernel {
  Matrix entries;  // k(x_i, x_j) for j <= i; strictly upper part exactly zero
};

// Row-by-row Nystrom solve: for each i the system
// (I + (1/P) F_sub) k_i = -f_i over indices j <= i.
TriangularKernel solve_glm(const Matrix& F);

// Dedicated GLM row at x = 1 (outside the midpoint grid): k(1, t_j) samples.
Vector boundary_slice(const Matrix& F, const PhiFunction& phi);

GridFunction reconstruct_sigma(const TriangularKernel& k, const Matrix& F,
                               const PhiFunction& phi);

struct GlmSolution {
  TriangularKernel k;
  Matrix f_matrix;
  GridFunction sigma;
  double residual = 0;           // max |k + f + int k f| relative to max |f|
  double min_eig_I_plus_F = 0;
  Vector k1_slice;               // k(1, .) midpoint samples
  double phi0 = 0;
  double gauge_shift = 0;        // constant added to the raw kernel output

  GlmSolution() : sigma(GridFunction::zeros(1.0, 1)) {}
};

// The kernel equation determines sigma only up to an additive constant: a
// constant shift of sigma leaves both the Dirichlet spectrum and the norming
// constants unchanged, and the raw kernel output always lands in the gauge
// sigma(0+) = -phi(0).  Each entry point therefore fixes a representative:
//
//  * (lambda, alpha) input carries no information about the constant, so
//    reconstruct(NormingSpectra) returns the zero-mean representative.
//  * (lambda, mu) input does determine the constant.  A shift by c maps the
//    quasi-Neumann characteristic to C - c S, so matching the lowest input
//    eigenvalue gives the exact closed form c = C(sqrt(mu_1)) / S(sqrt(mu_1)),
//    and reconstruct(TwoSpectra) returns the potential with both spectra.
GlmSolution reconstruct(const NormingSpectra& data, Index P);
// Two-spectra entry point: norming constants come from the product formula
// first (window_J = 0 selects the default 4N).
GlmSolution reconstruct(const TwoSpectra& data, Index P, long window_J = 0);

}  // namespace sturm
