#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sturm/direct_solver.hpp"
#include "sturm/errors.hpp"
#include "sturm/spectral_data.hpp"

using namespace sturm;

namespace {

GridFunction sigma_zero(Index P = 256) { return GridFunction::zeros(1.0, P); }

GridFunction sigma_linear(Index P = 512) {
  return GridFunction::sample(1.0, P, [](double x) { return x; });
}

GridFunction sigma_sine(Index P = 256) {
  return GridFunction::sample(
      1.0, P, [](double x) { return 0.5 * std::sin(2.0 * kPi * x); });
}

}  // namespace

TEST_SUITE("direct_solver") {

// The finite-element oracle must be trusted before anything is compared to
// it, so its own checks against closed forms come first.
TEST_CASE("oracle self-check: free problem against closed forms") {
  const GridFunction zero = sigma_zero(64);
  const Vector lam = oracle::fem_eigenvalues_richardson(zero, 8, false, 1024);
  const Vector mu = oracle::fem_eigenvalues_richardson(zero, 8, true, 1024);
  for (long n = 1; n <= 8; ++n) {
    CHECK(std::abs(lam[n - 1] - kPi * kPi * n * n) <= 1e-5);
    CHECK(std::abs(mu[n - 1] - kPi * kPi * (n - 0.5) * (n - 0.5)) <= 1e-5);
  }
}

TEST_CASE("oracle self-check: tan w = w roots") {
  for (int k = 1; k <= 4; ++k) {
    const double w = oracle::tan_equals_omega_root(k);
    CHECK(w > k * kPi);
    CHECK(w < k * kPi + kPi / 2);
    CHECK(std::abs(std::sin(w) - w * std::cos(w)) <= 1e-10 * w);
  }
}

TEST_CASE("oracle cross-check: both oracles agree on the q = 1 Robin spectrum") {
  // For sigma(x) = x the quasi-Neumann condition reads y'(1) = y(1); its
  // spectrum is {1} (eigenfunction y = x) together with 1 + w^2 over the
  // positive roots of tan w = w.  Two independent routes must agree.
  const Vector mu = oracle::fem_eigenvalues_richardson(sigma_linear(), 5, true, 2048);
  CHECK(std::abs(mu[0] - 1.0) <= 1e-5);
  for (int k = 1; k <= 4; ++k) {
    const double w = oracle::tan_equals_omega_root(k);
    CHECK(std::abs(mu[k] - (1.0 + w * w)) <= 1e-4);
  }
}

TEST_CASE("trajectories for the free system") {
  const GridFunction zero = sigma_zero();
  SUBCASE("z = pi") {
    const ShootingTrajectory t = integrate(zero, kPi);
    CHECK(std::abs(t.u_end) <= 1e-8);
    CHECK(std::abs(t.v_end + kPi) <= 1e-6);
    // whole trajectory matches sin(zx), z cos(zx)
    for (Index i = 0; i < t.u.size(); i += 37) {
      const double x = t.u.node(i);
      CHECK(std::abs(t.u.values()[i].real() - std::sin(kPi * x)) <= 1e-8);
      CHECK(std::abs(t.v.values()[i].real() - kPi * std::cos(kPi * x)) <= 1e-7);
    }
  }
  SUBCASE("z = pi/2") {
    const auto [s, c] = integrate_endpoint(zero, kPi / 2);
    CHECK(std::abs(s - 1.0) <= 1e-8);
    CHECK(std::abs(c) <= 1e-8);
  }
}

TEST_CASE("characteristic functions of the free system on a z sweep") {
  const GridFunction zero = sigma_zero();
  for (double z = 1.0; z <= 40.0; z += 0.7) {
    CHECK(std::abs(characteristic_S(zero, z) - std::sin(z)) <= 1e-7);
    // |C| ~ z, so the integration error scales with z as well
    CHECK(std::abs(characteristic_C(zero, z) - z * std::cos(z)) <= 2e-7 * z);
  }
}

TEST_CASE("free spectrum and norming constants") {
  const GridFunction zero = sigma_zero();
  const ForwardResult r = forward(zero, 8);
  for (long n = 1; n <= 8; ++n) {
    CHECK(std::abs(r.lambda[n - 1] / (kPi * kPi * n * n) - 1.0) <= 1e-8);
    CHECK(std::abs(r.mu[n - 1] / (kPi * kPi * (n - 0.5) * (n - 0.5)) - 1.0) <=
          1e-8);
    CHECK(std::abs(r.alpha[n - 1] - 2.0) <= 1e-6);
  }
  for (const RootInfo& info : r.lambda_info) CHECK(info.bracket_width <= 1e-9);
}

TEST_CASE("q = 1 spectra against the oracle and the shift formulas") {
  const GridFunction lin = sigma_linear();

  SUBCASE("first Dirichlet root sits at sqrt(pi^2 + 1)") {
    const double target = std::sqrt(kPi * kPi + 1.0);
    CHECK(std::abs(characteristic_S(lin, target)) <= 2e-5);
    // sign change across the root
    CHECK(characteristic_S(lin, target - 0.01) *
              characteristic_S(lin, target + 0.01) < 0.0);
  }

  const EigenvalueSet eig = eigenvalues(lin, 16);
  const Vector lam_oracle =
      oracle::fem_eigenvalues_richardson(lin, 16, false, 2048);
  const Vector mu_oracle =
      oracle::fem_eigenvalues_richardson(lin, 16, true, 2048);

  SUBCASE("solver matches the independent oracle") {
    for (long n = 1; n <= 16; ++n) {
      CHECK(std::abs(eig.lambda[n - 1] - lam_oracle[n - 1]) <= 1e-4);
      CHECK(std::abs(eig.mu[n - 1] - mu_oracle[n - 1]) <= 1e-4);
    }
  }

  SUBCASE("Dirichlet eigenvalues shift by exactly the constant") {
    for (long n = 1; n <= 16; ++n)
      CHECK(std::abs(eig.lambda[n - 1] - (kPi * kPi * n * n + 1.0)) <= 1e-4);
  }

  SUBCASE("quasi-Neumann spectrum follows the sigma-dependent condition") {
    // y^[1](1) = y'(1) - sigma(1) y(1): for sigma = x this is Robin, not
    // Neumann, so the spectrum is {1} and 1 + w^2 over tan w = w.
    CHECK(std::abs(eig.mu[0] - 1.0) <= 1e-4);
    for (int k = 1; k <= 4; ++k) {
      const double w = oracle::tan_equals_omega_root(k);
      CHECK(std::abs(eig.mu[k] - (1.0 + w * w)) <= 1e-4);
    }
  }

  SUBCASE("the primitive x - 1 realizes the plain Neumann shift") {
    const GridFunction lin1 = GridFunction::sample(
        1.0, 512, [](double x) { return x - 1.0; });
    const EigenvalueSet shifted = eigenvalues(lin1, 8);
    for (long n = 1; n <= 8; ++n) {
      CHECK(std::abs(shifted.lambda[n - 1] - (kPi * kPi * n * n + 1.0)) <= 1e-4);
      CHECK(std::abs(shifted.mu[n - 1] -
                     (kPi * kPi * (n - 0.5) * (n - 0.5) + 1.0)) <= 1e-4);
    }
  }
}

TEST_CASE("delta potential at the midpoint") {
  const GridFunction step = GridFunction::sample(
      1.0, 256, [](double x) { return x >= 0.5 ? 1.0 : 0.0; });
  const EigenvalueSet eig = eigenvalues(step, 6);
  const Vector lam_oracle =
      oracle::fem_eigenvalues_richardson(step, 6, false, 2048);
  for (long n = 1; n <= 6; ++n)
    CHECK(std::abs(eig.lambda[n - 1] - lam_oracle[n - 1]) <= 1e-4);
  // even-indexed Dirichlet eigenfunctions have a node at 1/2 where the delta
  // sits, so they shift far less than the odd-indexed ones
  const double shift1 = std::abs(eig.lambda[0] - kPi * kPi);
  const double shift2 = std::abs(eig.lambda[1] - 4.0 * kPi * kPi);
  CHECK(shift2 <= shift1 / 4.0);
  const double shift3 = std::abs(eig.lambda[2] - 9.0 * kPi * kPi);
  const double shift4 = std::abs(eig.lambda[3] - 16.0 * kPi * kPi);
  CHECK(shift4 <= shift3 / 4.0);
}

TEST_CASE("characteristic function versus its eigenvalue product") {
  const GridFunction sigma = sigma_sine();
  const ForwardResult r = forward(sigma, 32);
  const double z = kPi / 2;
  // S(z) = sin z * prod_{n <= N} (lambda_n - z^2) / (pi^2 n^2 - z^2); the
  // padded tail collapses into sin z / z times z.
  double prod = std::sin(z);
  for (long n = 1; n <= 32; ++n)
    prod *= (r.lambda[n - 1] - z * z) / (kPi * kPi * n * n - z * z);
  const double direct = characteristic_S(sigma, z);
  CHECK(std::abs(prod / direct - 1.0) <= 1e-3);

  SUBCASE("no common zeros of S and C on a sweep") {
    for (double zz = 1.0; zz <= 30.0; zz += 0.05) {
      CHECK(std::abs(characteristic_S(sigma, zz)) +
                std::abs(characteristic_C(sigma, zz)) > 1e-4);
    }
  }
}

TEST_CASE("quadrature norming constants") {
  const GridFunction zero = sigma_zero();
  const ForwardResult r = forward(zero, 4);
  for (long n = 1; n <= 4; ++n)
    CHECK(std::abs(direct_norming(zero, r.lambda[n - 1]) - 2.0) <= 1e-6);

  SUBCASE("off-spectrum request is rejected") {
    try {
      direct_norming(zero, kPi * kPi + 3.0);
      FAIL("expected not_an_eigenvalue");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::not_an_eigenvalue);
      CHECK(e.exit_code() == 3);
    }
  }

  SUBCASE("alpha_n approaches 2 for large n") {
    const GridFunction sigma = sigma_sine(512);
    const ForwardResult rs = forward(sigma, 32);
    double early = 0.0, late = 0.0;
    for (long n = 1; n <= 8; ++n)
      early = std::max(early, std::abs(rs.alpha[n - 1] - 2.0));
    for (long n = 25; n <= 32; ++n)
      late = std::max(late, std::abs(rs.alpha[n - 1] - 2.0));
    CHECK(late < early / 10.0);
  }
}

TEST_CASE("forward map: interlacing, simplicity, tail stabilization") {
  const GridFunction sigma = sigma_sine(512);
  const ForwardResult r = forward(sigma, 32);
  for (long n = 1; n <= 32; ++n) {
    CHECK(r.mu[n - 1] < r.lambda[n - 1]);
    if (n < 32) CHECK(r.lambda[n - 1] < r.mu[n]);
    CHECK(r.alpha[n - 1] > 0.0);
  }
  for (long n = 2; n <= 32; ++n)
    CHECK(r.lambda[n - 1] - r.lambda[n - 2] > 1e-6);

  SUBCASE("rho tail has stabilized by N = 24") {
    const TwoSpectra data = two_spectra_of(r);
    double through24 = 0.0, through32 = 0.0;
    for (long n = 1; n <= 24; ++n)
      through24 += data.rho_even(n) * data.rho_even(n);
    through32 = through24;
    for (long n = 25; n <= 32; ++n)
      through32 += data.rho_even(n) * data.rho_even(n);
    CHECK(through32 - through24 <= 0.01 * through24);
  }
}

TEST_CASE("continuity of the direct map under potential scaling") {
  const GridFunction base = sigma_sine();
  double norms[3];
  const double scales[3] = {1.0, 0.5, 0.25};
  for (int i = 0; i < 3; ++i) {
    GridFunction scaled = base;
    scaled *= Complex(scales[i], 0.0);
    norms[i] = rho_of(two_spectra_of(forward(scaled, 8))).norm();
  }
  CHECK(norms[0] > norms[1]);
  CHECK(norms[1] > norms[2]);
  CHECK(norms[2] > 0.0);
  const double r1 = norms[0] / 1.0, r2 = norms[1] / 0.5, r3 = norms[2] / 0.25;
  const double hi = std::max({r1, r2, r3}), lo = std::min({r1, r2, r3});
  CHECK(hi / lo < 2.0);
}

TEST_CASE("normalization shift: exact covariance of both spectra") {
  const GridFunction base = sigma_sine();
  const double c = 0.7;
  const GridFunction shifted = add_normalization_shift(base, c);
  for (Index i = 0; i < base.size(); i += 41) {
    const double x = base.node(i);
    CHECK(std::abs(shifted.values()[i].real() -
                   (base.values()[i].real() + c * (x - 1.0))) <= 1e-14);
  }
  const ForwardResult r0 = forward(base, 8);
  const ForwardResult r1 = forward(shifted, 8);
  for (long n = 1; n <= 8; ++n) {
    // the law is exact; the slack covers integration noise at z ~ 8 pi
    CHECK(std::abs(r1.lambda[n - 1] - (r0.lambda[n - 1] + c)) <= 5e-6);
    CHECK(std::abs(r1.mu[n - 1] - (r0.mu[n - 1] + c)) <= 5e-6);
    // alpha_n(q + c) = alpha_n(q) lambda_n / (lambda_n + c)
    const double expect = r0.alpha[n - 1] * r0.lambda[n - 1] /
                          (r0.lambda[n - 1] + c);
    CHECK(std::abs(r1.alpha[n - 1] / expect - 1.0) <= 1e-5);
  }
}

TEST_CASE("undercounted roots raise root_count_mismatch") {
  // A big positive shift pushes sqrt(pi^2 16 + 150) beyond the scan window
  // (0, 5 pi], so only three of the four requested roots exist there.
  const GridFunction raised = add_normalization_shift(sigma_zero(128), 150.0);
  try {
    eigenvalues(raised, 4);
    FAIL("expected root_count_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::root_count_mismatch);
    CHECK(e.exit_code() == 3);
  }
}

}  // TEST_SUITE
