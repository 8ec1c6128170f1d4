#pragma once

#include "sturm/errors.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Coordinates rho_n of spectral data relative to the unperturbed lattice:
// sqrt(lambda_n) = pi n + rho_{2n}, sqrt(mu_n) = pi (n - 1/2) + rho_{2n-1}.
// entries()[i] holds rho_{i+1}.  The e0/e1 coefficients are the singular
// directions of the half-integer smoothness splitting; finite data never
// carries them, but the weighted norm includes them for completeness.
class RhoSequence {
 public:
  RhoSequence(Vector entries, double weight_s, double e0_coeff = 0.0,
              double e1_coeff = 0.0);

  const Vector& entries() const { return entries_; }
  Index size() const { return entries_.size(); }
  double weight_s() const { return weight_s_; }
  double e0_coeff() const { return e0_coeff_; }
  double e1_coeff() const { return e1_coeff_; }
  // Weighted norm at weight_s, cached at construction.
  double norm() const { return norm_; }

 private:
  Vector entries_;
  double weight_s_;
  double e0_coeff_, e1_coeff_;
  double norm_;
};

// (sum_n n^{2s} rho_n^2 + e0^2 + e1^2)^{1/2} at an arbitrary order s in [0,1].
double seq_norm(const RhoSequence& rho, double s);

// Declared continuation of truncated data: lambda_k = pi^2 k^2,
// mu_k = pi^2 (k-1/2)^2, alpha_k = 2 for all k beyond the stored prefix.
enum class TailKind { unperturbed_pad };

// Dirichlet spectrum (lambda) and quasi-Neumann spectrum (mu) of one operator,
// truncated at N with the unperturbed pad.  Construction enforces only
// per-list structure (finite, positive, strictly increasing, equal lengths);
// cross-list admissibility (interlacing etc.) is validate_two_spectra's job so
// that deliberately broken data can still be represented and diagnosed.
class TwoSpectra {
 public:
  TwoSpectra(Vector lambda, Vector mu, double weight_s = 0.0,
             TailKind tail = TailKind::unperturbed_pad);

  Index count() const { return lambda_.size(); }
  const Vector& lambda() const { return lambda_; }
  const Vector& mu() const { return mu_; }
  double weight_s() const { return weight_s_; }
  TailKind tail() const { return tail_; }

  // Square-root eigenvalue lattice omega_m indexed over all of Z with the
  // odd mirror convention omega_{-m} = -omega_m, omega_0 = 0 and the declared
  // tail pad beyond the stored prefix.  Even slots are the Dirichlet side
  // (omega_{2k} = sqrt(lambda_k)), odd slots the quasi-Neumann side
  // (omega_{2k-1} = sqrt(mu_k)).  k may be any integer.
  double omega_even(long k) const;
  double omega_odd(long k) const;
  double rho_even(long k) const { return omega_even(k) - kPi * k; }
  double rho_odd(long k) const { return omega_odd(k) - kPi * (k - 0.5); }

 private:
  Vector lambda_, mu_;
  double weight_s_;
  TailKind tail_;
};

// Dirichlet spectrum plus norming constants alpha_n = ||y(.,sqrt(lambda_n))||^{-2},
// truncated with the unperturbed pad (alpha = 2 beyond the prefix).
class NormingSpectra {
 public:
  NormingSpectra(Vector lambda, Vector alpha, double weight_s = 0.0,
                 TailKind tail = TailKind::unperturbed_pad);

  Index count() const { return lambda_.size(); }
  const Vector& lambda() const { return lambda_; }
  const Vector& alpha() const { return alpha_; }
  double weight_s() const { return weight_s_; }
  TailKind tail() const { return tail_; }

  double omega_even(long k) const;
  double rho_even(long k) const { return omega_even(k) - kPi * k; }
  double alpha_padded(long k) const;

 private:
  Vector lambda_, alpha_;
  double weight_s_;
  TailKind tail_;
};

struct SeparationReport {
  double h_two_spectra = 0;  // min of sqrt(mu_{n+1})-sqrt(lambda_n), sqrt(lambda_n)-sqrt(mu_n)
  double h_lambda = 0;       // min of sqrt(lambda_{n+1})-sqrt(lambda_n)
  double r_norm = 0;         // ||rho||_s at the data's weight_s
};

// Gap and norm measurements including the pad seam (the first padded
// eigenvalue participates in the minima; for unperturbed data the seam gap
// equals the interior gap, so reported values match the closed forms).
SeparationReport separation_report(const TwoSpectra& data);
SeparationReport separation_report(const NormingSpectra& data);

// Admissibility check: interlacing with mu_1 >= 1, square-root gaps >= h
// (with 1e-12 slack), ||rho||_s <= r.  Returns the measurements on success.
SeparationReport validate_two_spectra(const TwoSpectra& data, double h, double r);

struct NormingValidationReport {
  double h_lambda = 0;
  double r_norm = 0;
  double alpha_min = 0;  // min alpha_n
  double beta_norm = 0;  // ||beta||_s with beta_{2n} = alpha_n - 2
};

// Admissibility on the norming side: lambda_1 >= 1, sqrt(lambda) gaps >= h,
// ||rho||_s <= r on the lambda side; alpha_n >= h_alpha and ||beta||_s <= r_beta.
NormingValidationReport validate_norming_spectra(const NormingSpectra& data,
                                                 double h, double r,
                                                 double h_alpha, double r_beta);

RhoSequence rho_of(const TwoSpectra& data);
RhoSequence rho_of(const NormingSpectra& data);  // odd entries zero
RhoSequence beta_of(const NormingSpectra& data); // beta_{2n} = alpha_n - 2, odd zero

// Inverse of rho_of for the two-spectra case.
TwoSpectra spectra_from_rho(const RhoSequence& rho);

}  // namespace sturm
