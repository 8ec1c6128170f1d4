#pragma once

#include <random>
#include <vector>

#include "sturm/fourier.hpp"
#include "sturm/grid_function.hpp"
#include "sturm/spectral_data.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Verification instruments: Riesz-bound estimation for the trigonometric
// families attached to spectral data, the entire maps linking spectral
// perturbations to kernel data, and the empirical Lipschitz harness for the
// inverse map.

enum class BasisKind {
  sine_omega,            // sin(omega_n x), omega_n > 0
  cosine_omega,          // cos(omega_n x); include omega = 0 for the constant
  exp_omega,             // e^{i omega (1-2x)} over +/- the given list plus 0
  cosine_half_integer,   // cos(sqrt(mu_n) x)
};

struct BasisSpec {
  BasisKind kind;
  Vector omegas;  // strictly increasing
};

struct RieszBounds {
  double m_hat = 0;  // smallest Gram eigenvalue of the normalized family
  double M_hat = 0;  // largest
  Index N = 0;       // family dimension actually used
};

// Gram matrix from closed-form integrals (no quadrature), then its spectrum.
RieszBounds gram_bounds(const BasisSpec& basis);

// Entire maps.  All series run in the Fourier domain with K = P/4 modes,
// truncate at term norm 1e-10, and enforce at-least-geometric decay after
// rank max(8, ceil(e ||f||_0)); failure throws series_divergence.

// Phi(f,g) = sum_{k>=1} (ix)^k / k! (g * f^{<k>}), the V.p. sum of
// g-hat(n) [exp{f-hat(n) i x} - 1] e^{2 pi i n x}.
GridFunction phi_map(const GridFunction& f, const GridFunction& g);
// h(f) = Phi with unit coefficient sequence: sum_k (ix)^k/k! f^{<k>}.
GridFunction h_map(const GridFunction& f);
// Psi(f,g) = sum_{k>=0} (f^{<k>} * M1^k g)/k!, M1 = multiplication by i(1-2t);
// coefficient n is (-1)^n integral of g exp{[pi n + f-hat(n)] i(1-2t)} dt.
GridFunction psi_map(const GridFunction& f, const GridFunction& g);
// Direct quadrature of the defining coefficient integral above.
Complex psi_coefficient_direct(const GridFunction& f, const GridFunction& g,
                               int n);

// H(f,g) = s(f) + g + sum_{k>=1} (M^k g) * f^{<k>}/k!  with
// s(f) = sum (-1)^k f^{<2k+1>}/(2k+1)!; coefficient n equals
// (-1)^n E(pi n + f-hat(n)) where E(z) = sin z + integral g e^{i z (1-2t)} dt.
// Round-trip pairs make it vanish up to discretization: f-hat(n) = rho_{2n}
// and g built from the x = 1 kernel slice by the reflection
// g(t) = -i sign(1/2 - t) k(1, |1-2t|), which turns the E-integral into the
// transformation identity sin z + integral k(1,t) sin(z t) dt = S(z).
GridFunction H_function(const GridFunction& f, const GridFunction& g);
double H_residual(const GridFunction& f, const GridFunction& g);

GridFunction dH_df(const GridFunction& f, const GridFunction& g,
                   const GridFunction& h1);
GridFunction dH_dg(const GridFunction& f, const GridFunction& g,
                   const GridFunction& h2);

// ||central difference of H - series derivative||_0 at t = 1e-4.
double derivative_check_f(const GridFunction& f, const GridFunction& g,
                          const GridFunction& direction);
double derivative_check_g(const GridFunction& f, const GridFunction& g,
                          const GridFunction& direction);
// Max of the two checks.
double partial_derivative_check(const GridFunction& f, const GridFunction& g,
                                const GridFunction& direction);

// max_n |(cosh f-hat(n) - 1) - c_{2n}(f-tilde)|, f-tilde = sum f^{<2k>}/(2k)!.
double cosh_identity_check(const GridFunction& f);

struct StabilityReport {
  Vector epsilons;
  Matrix ratios;        // trials x epsilons, ||sigma1 - sigma0||_0 / eps
  Vector per_eps_max;
  double max_ratio = 0;
  double min_ratio = 0;
};

// Perturb the rho-coordinates of forward(base_sigma) by random l2 directions
// of norm eps (admissibility: interlacing and half the base separation;
// rejection-sampled), reconstruct, and record Lipschitz ratios.
StabilityReport lipschitz_sweep(const GridFunction& base_sigma,
                                const std::vector<double>& epsilons,
                                int trials, std::uint64_t seed, int N = 32,
                                Index P = 256);

// || sigma(rho + eps e_j) - sigma(rho - eps e_j) ||_0 / (2 eps): symmetric
// directional-derivative estimate in the j-th rho coordinate (1-based).
double directional_derivative(const TwoSpectra& base, long coord, double eps,
                              Index P, long window_J = 0);

// Random admissible data: iid normal rho scaled to a norm in (0.3 r, r],
// rejected until validate_two_spectra(h, r) passes (at most 100 draws).
TwoSpectra sample_two_spectra(double h, double r, long N, std::mt19937_64& rng);
// sqrt(lambda)-type frequencies pi n + rho_{2n} under the same budget.
Vector sample_separated_omegas(double h, double r, long N, std::mt19937_64& rng);

}  // namespace sturm
