#include "sturm/glm.hpp"

#include <Eigen/LU>
#include <cmath>
#include <string>

#include "sturm/direct_solver.hpp"
#include "sturm/norming.hpp"

namespace sturm {

PhiFunction::PhiFunction(const NormingSpectra& data, Index P2)
    : sqrt_lambda_(data.count()),
      alpha_(data.alpha()),
      grid_(GridFunction::zeros(2.0, std::max<Index>(P2, 1))),
      phi0_(0.0) {
  const Index N = data.count();
  for (Index n = 0; n < N; ++n) sqrt_lambda_[n] = std::sqrt(data.lambda()[n]);
  // Highest oscillation on [0,2] is cos(sqrt(lambda_N) x): mode number
  // sqrt(lambda_N) 2/pi on the doubled interval must clear the P2/4 guard.
  if (sqrt_lambda_[N - 1] * 2.0 / kPi >= static_cast<double>(P2) / 4.0)
    throw Error(ErrorCode::alias_guard,
                "phi grid too coarse: need sqrt(lambda_N)*2/pi < P2/4");
  for (Index n = 0; n < N; ++n) phi0_ += 2.0 - alpha_[n];
  for (Index i = 0; i < grid_.size(); ++i)
    grid_.values()[i] = value(grid_.node(i));
}

double PhiFunction::value(double x) const {
  double acc = 0.0;
  for (Index n = 0; n < sqrt_lambda_.size(); ++n)
    acc += 2.0 * std::cos(kPi * (n + 1) * x) -
           alpha_[n] * std::cos(sqrt_lambda_[n] * x);
  return acc;
}

PhiFunction build_phi(const NormingSpectra& data, Index P2) {
  return PhiFunction(data, P2);
}

Matrix build_f_matrix(const PhiFunction& phi, Index P) {
  if (std::abs(phi.grid().length() - 2.0) > 1e-12)
    throw Error(ErrorCode::grid_mismatch, "phi must live on [0,2]");
  if (P < 1) throw Error(ErrorCode::usage, "grid size must be positive");
  // x_i + x_j = (i+j+1)/P and |x_i - x_j| = |i-j|/P take only 3P-1 distinct
  // values; evaluate the finite sum once per argument.
  Vector phi_sum(2 * P - 1), phi_diff(P);
  for (Index m = 0; m < 2 * P - 1; ++m)
    phi_sum[m] = phi.value(static_cast<double>(m + 1) / P);
  phi_diff[0] = phi.phi0();
  for (Index d = 1; d < P; ++d)
    phi_diff[d] = phi.value(static_cast<double>(d) / P);
  Matrix F(P, P);
  for (Index i = 0; i < P; ++i)
    for (Index j = 0; j <= i; ++j) {
      const double v = 0.5 * (phi_sum[i + j] - phi_diff[i - j]);
      F(i, j) = v;
      F(j, i) = v;
    }
  return F;
}

double check_positivity(const Matrix& F) {
  const Index P = F.rows();
  Matrix A = Matrix::Identity(P, P) + (1.0 / static_cast<double>(P)) * F;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(A, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

TriangularKernel solve_glm(const Matrix& F) {
  const Index P = F.rows();
  const double h = 1.0 / static_cast<double>(P);
  TriangularKernel k{Matrix::Zero(P, P)};
  for (Index i = 0; i < P; ++i) {
    const Index n = i + 1;
    Matrix A = Matrix::Identity(n, n) + h * F.topLeftCorner(n, n);
    Eigen::PartialPivLU<Matrix> lu(A);
    const Vector d = lu.matrixLU().diagonal().cwiseAbs();
    if (d.minCoeff() <= 1e-13 * d.maxCoeff())
      throw Error(ErrorCode::singular_row_system,
                  "GLM row system singular at row " + std::to_string(i + 1),
                  i + 1);
    k.entries.row(i).head(n) =
        lu.solve((-F.row(i).head(n)).transpose()).transpose();
  }
  return k;
}

Vector boundary_slice(const Matrix& F, const PhiFunction& phi) {
  const Index P = F.rows();
  const double h = 1.0 / static_cast<double>(P);
  Vector f1(P);
  for (Index j = 0; j < P; ++j) {
    const double t = (j + 0.5) * h;
    f1[j] = 0.5 * (phi.value(1.0 + t) - phi.value(1.0 - t));
  }
  Matrix A = Matrix::Identity(P, P) + h * F;
  Eigen::PartialPivLU<Matrix> lu(A);
  const Vector d = lu.matrixLU().diagonal().cwiseAbs();
  if (d.minCoeff() <= 1e-13 * d.maxCoeff())
    throw Error(ErrorCode::singular_row_system,
                "GLM boundary row system singular", P);
  return lu.solve(-f1);
}

GridFunction reconstruct_sigma(const TriangularKernel& k, const Matrix& F,
                               const PhiFunction& phi) {
  const Index P = F.rows();
  if (k.entries.rows() != P)
    throw Error(ErrorCode::grid_mismatch, "kernel and F matrix sizes differ");
  const double h = 1.0 / static_cast<double>(P);
  GridFunction sigma = GridFunction::zeros(1.0, P);
  for (Index i = 0; i < P; ++i) {
    double integral = 0.0;
    for (Index j = 0; j <= i; ++j) integral += k.entries(i, j) * F(j, i);
    sigma.values()[i] = -phi.value(2.0 * (i + 0.5) * h) - 2.0 * h * integral;
  }
  return sigma;
}

namespace {

double glm_residual(const TriangularKernel& k, const Matrix& F) {
  const Index P = F.rows();
  const double h = 1.0 / static_cast<double>(P);
  const double scale = std::max(F.cwiseAbs().maxCoeff(), 1e-30);
  double worst = 0.0;
  for (Index i = 0; i < P; ++i) {
    const Index n = i + 1;
    // residual row: k_i + f_i + h F_sub k_i  (F symmetric)
    Vector r = k.entries.row(i).head(n).transpose() +
               F.row(i).head(n).transpose() +
               h * F.topLeftCorner(n, n) *
                   k.entries.row(i).head(n).transpose();
    worst = std::max(worst, r.cwiseAbs().maxCoeff());
  }
  return worst / scale;
}

GlmSolution run_pipeline(const NormingSpectra& data, Index P) {
  if (P < 1) throw Error(ErrorCode::usage, "grid size must be positive");
  GlmSolution sol;
  const PhiFunction phi = build_phi(data, 2 * P);
  sol.phi0 = phi.phi0();
  sol.f_matrix = build_f_matrix(phi, P);
  sol.min_eig_I_plus_F = check_positivity(sol.f_matrix);
  if (sol.min_eig_I_plus_F <= 0.0)
    throw Error(ErrorCode::glm_not_positive,
                "I + F has min eigenvalue " +
                    std::to_string(sol.min_eig_I_plus_F) +
                    "; data outside the admissible class");
  sol.k = solve_glm(sol.f_matrix);
  sol.sigma = reconstruct_sigma(sol.k, sol.f_matrix, phi);
  sol.k1_slice = boundary_slice(sol.f_matrix, phi);
  sol.residual = glm_residual(sol.k, sol.f_matrix);
  if (sol.residual > 1e-8)
    throw Error(ErrorCode::singular_row_system,
                "GLM residual " + std::to_string(sol.residual) +
                    " above tolerance 1e-8");
  return sol;
}

}  // namespace

GlmSolution reconstruct(const NormingSpectra& data, Index P) {
  GlmSolution sol = run_pipeline(data, P);
  // (lambda, alpha) cannot see an additive constant; return the zero-mean
  // representative of the gauge class.
  sol.gauge_shift = -sol.sigma.quadrature().real();
  sol.sigma.values().array() += sol.gauge_shift;
  return sol;
}

GlmSolution reconstruct(const TwoSpectra& data, Index P, long window_J) {
  const long N = data.count();
  for (long n = 1; n <= N; ++n) {
    if (!(data.omega_odd(n) < data.omega_even(n)) ||
        !(data.omega_even(n) < data.omega_odd(n + 1)))
      throw Error(ErrorCode::interlacing_violation,
                  "two-spectra input fails to interlace at n = " +
                      std::to_string(n),
                  n);
  }
  GlmSolution sol = run_pipeline(norming_constants(data, window_J), P);
  // Pin the additive constant from the quasi-Neumann data.  Shifting sigma by
  // c maps the endpoint pair (S, C) to (S, C - c S), so C(z1) = 0 at
  // z1 = sqrt(mu_1) holds exactly for c = C(z1)/S(z1); by interlacing z1 lies
  // strictly between Dirichlet roots and S(z1) stays away from zero.
  const double z1 = data.omega_odd(1);
  const auto [s1, c1] = integrate_endpoint(sol.sigma, z1);
  if (std::abs(s1) > 1e-12) {
    sol.gauge_shift = c1 / s1;
    sol.sigma.values().array() += sol.gauge_shift;
  }
  return sol;
}

}  // namespace sturm
