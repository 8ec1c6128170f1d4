#include "sturm/direct_solver.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace sturm {
namespace {

Vector sigma_cells(const GridFunction& sigma) {
  if (std::abs(sigma.length() - 1.0) > 1e-12)
    throw Error(ErrorCode::grid_mismatch, "sigma must live on [0,1]");
  if (!sigma.is_real())
    throw Error(ErrorCode::usage, "sigma must be real-valued");
  return sigma.real_values();
}

// RK4 steps per sigma cell; shrinks with z to hold phase error O((z h)^4)
// below the root-separation scale.
long steps_per_cell(double z) {
  const long cz = static_cast<long>(std::ceil(std::abs(z) / kPi));
  return 4 * std::max(1L, (cz + 7) / 8);
}

struct State {
  double u, v;
};

inline State rhs(const State& s, double sig, double z2) {
  return {sig * s.u + s.v, -(sig * sig + z2) * s.u - sig * s.v};
}

inline State rk4_step(const State& s, double sig, double z2, double h) {
  const State k1 = rhs(s, sig, z2);
  const State k2 = rhs({s.u + 0.5 * h * k1.u, s.v + 0.5 * h * k1.v}, sig, z2);
  const State k3 = rhs({s.u + 0.5 * h * k2.u, s.v + 0.5 * h * k2.v}, sig, z2);
  const State k4 = rhs({s.u + h * k3.u, s.v + h * k3.v}, sig, z2);
  return {s.u + h / 6.0 * (k1.u + 2 * k2.u + 2 * k3.u + k4.u),
          s.v + h / 6.0 * (k1.v + 2 * k2.v + 2 * k3.v + k4.v)};
}

}  // namespace

ShootingTrajectory integrate(const GridFunction& sigma, double z) {
  const Vector cells = sigma_cells(sigma);
  const long P = cells.size();
  const long m = steps_per_cell(z);
  const long M = P * m;
  const double h = 1.0 / static_cast<double>(M);
  const double z2 = z * z;

  ShootingTrajectory traj{z, GridFunction::zeros(1.0, M),
                          GridFunction::zeros(1.0, M), 0, 0};
  State s{0.0, z};
  for (long c = 0; c < P; ++c) {
    const double sig = cells[c];
    for (long k = 0; k < m; ++k) {
      // Two half-steps so the step midpoint (a sample node of the refined
      // midpoint grid) carries an integrated value, not an interpolant.
      const State mid = rk4_step(s, sig, z2, 0.5 * h);
      traj.u.values()[c * m + k] = mid.u;
      traj.v.values()[c * m + k] = mid.v;
      s = rk4_step(mid, sig, z2, 0.5 * h);
    }
  }
  traj.u_end = s.u;
  traj.v_end = s.v;
  return traj;
}

std::pair<double, double> integrate_endpoint(const GridFunction& sigma,
                                             double z) {
  // Same two-half-step march as integrate(): root scans and the norming
  // quadrature must see one and the same discrete flow, or a bisected root
  // of one map fails the residual gate of the other on coarse grids.
  const Vector cells = sigma_cells(sigma);
  const long P = cells.size();
  const long m = steps_per_cell(z);
  const double h = 1.0 / static_cast<double>(P * m);
  const double z2 = z * z;
  State s{0.0, z};
  for (long c = 0; c < P; ++c) {
    const double sig = cells[c];
    for (long k = 0; k < m; ++k)
      s = rk4_step(rk4_step(s, sig, z2, 0.5 * h), sig, z2, 0.5 * h);
  }
  return {s.u, s.v};
}

double characteristic_S(const GridFunction& sigma, double z) {
  return integrate_endpoint(sigma, z).first;
}

double characteristic_C(const GridFunction& sigma, double z) {
  return integrate_endpoint(sigma, z).second;
}

namespace {

std::pair<double, RootInfo> bisect(const std::function<double(double)>& F,
                                   double a, double b, double fa) {
  RootInfo info;
  while (b - a > 1e-10) {
    const double mid = 0.5 * (a + b);
    const double fm = F(mid);
    ++info.iterations;
    if (fm == 0.0) {
      a = b = mid;
      break;
    }
    if ((fa < 0) != (fm < 0)) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  info.bracket_width = b - a;
  return {0.5 * (a + b), info};
}

std::pair<std::vector<double>, std::vector<RootInfo>> scan_roots(
    const std::function<double(double)>& F, int N, double zmax,
    const char* label) {
  double step = kPi / 8.0;
  for (int attempt = 0;; ++attempt) {
    std::vector<double> roots;
    std::vector<RootInfo> info;
    const long jmax = std::lround(std::ceil(zmax / step - 1e-9));
    bool have_prev = false;
    double z_prev = 0, f_prev = 0;
    for (long j = 1; j <= jmax && static_cast<long>(roots.size()) < N; ++j) {
      const double z_cur = step * static_cast<double>(j);
      const double f_cur = F(z_cur);
      if (f_cur == 0.0) {
        // Scan landed on a root exactly; record it and restart bracketing.
        roots.push_back(z_cur);
        info.push_back({0, 0.0});
        have_prev = false;
        continue;
      }
      if (have_prev && (f_prev < 0) != (f_cur < 0)) {
        auto [root, ri] = bisect(F, z_prev, z_cur, f_prev);
        roots.push_back(root);
        info.push_back(ri);
      }
      z_prev = z_cur;
      f_prev = f_cur;
      have_prev = true;
    }
    if (static_cast<long>(roots.size()) >= N)
      return {std::move(roots), std::move(info)};
    if (attempt >= 4)
      throw Error(ErrorCode::root_count_mismatch,
                  std::string(label) + ": found only " +
                      std::to_string(roots.size()) + " of " +
                      std::to_string(N) + " roots in (0, " +
                      std::to_string(zmax) + "]");
    step *= 0.5;
  }
}

}  // namespace

EigenvalueSet eigenvalues(const GridFunction& sigma, int N) {
  if (N < 1) throw Error(ErrorCode::usage, "need N >= 1 eigenvalues");
  const double zmax = kPi * (N + 1);
  EigenvalueSet out;
  auto [zl, il] = scan_roots(
      [&](double z) { return characteristic_S(sigma, z); }, N, zmax, "S scan");
  auto [zm, im] = scan_roots(
      [&](double z) { return characteristic_C(sigma, z); }, N, zmax, "C scan");
  out.lambda.resize(N);
  out.mu.resize(N);
  for (int n = 0; n < N; ++n) {
    out.lambda[n] = zl[n] * zl[n];
    out.mu[n] = zm[n] * zm[n];
  }
  out.lambda_info = std::move(il);
  out.mu_info = std::move(im);
  return out;
}

double direct_norming(const GridFunction& sigma, double lambda_n) {
  if (!(lambda_n > 0))
    throw Error(ErrorCode::not_an_eigenvalue, "lambda must be positive");
  const double z = std::sqrt(lambda_n);
  const ShootingTrajectory traj = integrate(sigma, z);
  if (std::abs(traj.u_end) > 1e-6)
    throw Error(ErrorCode::not_an_eigenvalue,
                "|S(sqrt(lambda))| = " + std::to_string(std::abs(traj.u_end)) +
                    " exceeds the root tolerance");
  const double norm_sq = traj.u.step() * traj.u.real_values().squaredNorm();
  return 1.0 / norm_sq;
}

ForwardResult forward(const GridFunction& sigma, int N) {
  EigenvalueSet eig = eigenvalues(sigma, N);
  for (int n = 0; n + 1 < N; ++n) {
    if (eig.lambda[n + 1] - eig.lambda[n] < 1e-6 ||
        eig.mu[n + 1] - eig.mu[n] < 1e-6)
      throw Error(ErrorCode::root_count_mismatch,
                  "eigenvalues not simple at index " + std::to_string(n + 1),
                  n + 1);
  }
  for (int n = 0; n < N; ++n) {
    if (!(eig.mu[n] < eig.lambda[n]) ||
        (n + 1 < N && !(eig.lambda[n] < eig.mu[n + 1])))
      throw Error(ErrorCode::interlacing_violation,
                  "computed spectra fail to interlace at n = " +
                      std::to_string(n + 1),
                  n + 1);
  }
  ForwardResult out;
  out.lambda = std::move(eig.lambda);
  out.mu = std::move(eig.mu);
  out.lambda_info = std::move(eig.lambda_info);
  out.mu_info = std::move(eig.mu_info);
  out.alpha.resize(N);
  for (int n = 0; n < N; ++n)
    out.alpha[n] = direct_norming(sigma, out.lambda[n]);
  return out;
}

TwoSpectra two_spectra_of(const ForwardResult& r, double weight_s) {
  return TwoSpectra(r.lambda, r.mu, weight_s);
}

NormingSpectra norming_spectra_of(const ForwardResult& r, double weight_s) {
  return NormingSpectra(r.lambda, r.alpha, weight_s);
}

GridFunction add_normalization_shift(const GridFunction& sigma, double c) {
  GridFunction out = sigma;
  for (Index i = 0; i < out.size(); ++i)
    out.values()[i] += c * (out.node(i) - 1.0);
  return out;
}

}  // namespace sturm
