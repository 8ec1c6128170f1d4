#pragma once

#include <vector>

#include "sturm/spectral_data.hpp"
#include "sturm/types.hpp"

namespace sturm {

// Norming constants from two spectra via the Hadamard-product identities
//   |Sdot(omega_2n)|        = prod_{k != n} (omega_2k   - omega_2n) / (pi (k - n))
//   |C(omega_2n)/omega_2n|  = prod_{k}      (omega_2k-1 - omega_2n) / (pi (k - 1/2 - n))
// over k in Z with the odd mirror convention and the unperturbed tail pad.
// Factors are accumulated pairwise (k = n +/- j, resp. k = n+j / n+1-j) in
// log1p form; everything outside the window collapses into a closed-form
// sine/cosine tail, so results are exactly window-independent once the window
// covers the stored data (window_J >= N + n).

struct ProductEval {
  long n = 0;
  double a_n = 0;               // (-1)^n Sdot(omega_2n) - 1
  double b_n = 0;               // (-1)^n C(omega_2n)/omega_2n - 1
  double alpha_n = 0;           // 2 / ((1 + a_n)(1 + b_n))
  double log_sdot = 0;          // log |Sdot(omega_2n)|
  double log_c_over_omega = 0;  // log |C(omega_2n)/omega_2n|
};

// Sdot(omega_2n) with sign (-1)^n attached analytically.
double sdot_at_eigenvalue(const TwoSpectra& data, long n, long window_J);
// C(omega_2n)/omega_2n, sign (-1)^n.
double c_over_omega_at_eigenvalue(const TwoSpectra& data, long n, long window_J);

ProductEval product_eval(const TwoSpectra& data, long n, long window_J);

// alpha_n for all stored n.  window_J = 0 selects the default 4N.
NormingSpectra norming_constants(const TwoSpectra& data, long window_J = 0);

// K(h) = max over x >= -1 + 2h/pi of |(log(1+x) - x)/x^2| (attained at the
// left endpoint; evaluated by scan).
double lemma_bound_K(double h);

struct UniformBoundsProbe {
  double sup_log_sdot = 0;
  double sup_log_c = 0;
  double bound_K = 0;      // K(h)
  double paper_bound = 0;  // (sqrt(6) r + 4 K pi^2 r^2) / 3
};

// Suprema of |log| product values over a sample of admissible data sets,
// reported against the closed-form uniform bound for the class (h, r).
UniformBoundsProbe uniform_bounds_probe(const std::vector<TwoSpectra>& sample,
                                        long window_J, double h, double r);

}  // namespace sturm
