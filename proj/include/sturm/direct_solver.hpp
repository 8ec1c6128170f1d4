#pragma once

#include <utility>
#include <vector>

#include "sturm/grid_function.hpp"
#include "sturm/spectral_data.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Forward problem for the regularized operator: -(y' - sigma y)' - sigma y'
// with sigma in L2.  Everything is phrased through the first-order system
//   u' = sigma u + v,   v' = -sigma v - (sigma^2 + z^2) u,
// where u = y and v = y^[1] = y' - sigma y; only sigma enters, never q = sigma'.
// Initial conditions u(0) = 0, v(0) = z.  Dirichlet eigenvalues are zeros of
// S(z) = u(1,z), quasi-Neumann eigenvalues zeros of C(z) = v(1,z).

// Trajectory of one shooting integration.  u and v hold midpoint samples on
// the integrator's refined grid (fine enough for norming quadrature); the
// endpoint values S = u(1), C = v(1) are stored separately since midpoint
// grids exclude x = 1.
struct ShootingTrajectory {
  double z = 0;
  GridFunction u, v;
  double u_end = 0, v_end = 0;
};

// Full trajectory; sigma is taken cell-constant on its own grid and every RK4
// step stays inside one cell (the refined step count is a multiple of the cell
// count).
ShootingTrajectory integrate(const GridFunction& sigma, double z);
// Endpoint-only fast path returning (u(1), v(1)).
std::pair<double, double> integrate_endpoint(const GridFunction& sigma, double z);

double characteristic_S(const GridFunction& sigma, double z);
double characteristic_C(const GridFunction& sigma, double z);

struct RootInfo {
  int iterations = 0;
  double bracket_width = 0;
};

struct EigenvalueSet {
  Vector lambda, mu;
  std::vector<RootInfo> lambda_info, mu_info;
};

// First N zeros of S and of C on z in (0, pi(N+1)]: sign scan with step pi/8
// (halved up to 4 times on a short count), then bisection to width 1e-10.
EigenvalueSet eigenvalues(const GridFunction& sigma, int N);

// alpha_n = 1 / integral of u(x, sqrt(lambda_n))^2 by midpoint quadrature on
// the trajectory grid.  Requires |S(sqrt(lambda_n))| <= 1e-6.
double direct_norming(const GridFunction& sigma, double lambda_n);

struct ForwardResult {
  Vector lambda, mu, alpha;
  std::vector<RootInfo> lambda_info, mu_info;
};

// Eigenvalues plus norming constants; validates interlacing and simplicity.
ForwardResult forward(const GridFunction& sigma, int N);

TwoSpectra two_spectra_of(const ForwardResult& r, double weight_s = 0.0);
NormingSpectra norming_spectra_of(const ForwardResult& r, double weight_s = 0.0);

// sigma + c (x - 1): shifts q by the constant c while keeping sigma(1), hence
// the quasi-Neumann boundary condition, unchanged.  Both spectra shift by
// exactly c; norming constants transform as alpha_n -> alpha_n lambda_n /
// (lambda_n + c) because the normalization y^[1](0) = z tracks the new z.
GridFunction add_normalization_shift(const GridFunction& sigma, double c);

}  // namespace sturm
