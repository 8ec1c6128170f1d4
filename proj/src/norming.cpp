#include "sturm/norming.hpp"

#include <cmath>
#include <string>

namespace sturm {
namespace {

void check_window(const TwoSpectra& data, long n, long window_J) {
  if (n < 1 || n > data.count())
    throw Error(ErrorCode::usage, "eigenvalue index out of range", n);
  if (window_J < data.count() + n)
    throw Error(ErrorCode::usage,
                "window_J must be >= N + n so the window covers stored data");
}

void check_factor(double one_plus_a, long k) {
  if (!(one_plus_a > 0.0))
    throw Error(ErrorCode::non_positive_factor,
                "product factor 1 + a_{k,n} <= 0 at k = " + std::to_string(k) +
                    " (data outside every admissible class)",
                k);
}

// log of prod_{m > J} (1 - rho^2 / (pi^2 m^2)) via Euler's sine product.
double log_tail_sine(double rho, long J) {
  if (rho == 0.0) return 0.0;
  if (std::abs(rho) >= kPi)
    throw Error(ErrorCode::non_positive_factor,
                "|rho| >= pi leaves the sine tail's positivity range");
  double log_tail = std::log(std::sin(rho) / rho);
  for (long m = 1; m <= J; ++m)
    log_tail -= std::log1p(-rho * rho / (kPi * kPi * m * m));
  return log_tail;
}

// log of prod_{m > J} (1 - rho^2 / (pi^2 (m - 1/2)^2)) via the cosine product.
double log_tail_cosine(double rho, long J) {
  if (rho == 0.0) return 0.0;
  if (std::abs(rho) >= kPi / 2.0)
    throw Error(ErrorCode::non_positive_factor,
                "|rho| >= pi/2 leaves the cosine tail's positivity range");
  double log_tail = std::log(std::cos(rho));
  for (long m = 1; m <= J; ++m) {
    const double c = kPi * (m - 0.5);
    log_tail -= std::log1p(-rho * rho / (c * c));
  }
  return log_tail;
}

double log_abs_sdot(const TwoSpectra& data, long n, long window_J) {
  check_window(data, n, window_J);
  const double rho_n = data.rho_even(n);
  double acc = 0.0;
  for (long j = 1; j <= window_J; ++j) {
    for (const long k : {n + j, n - j}) {
      const double a = (data.rho_even(k) - rho_n) / (kPi * (k - n));
      check_factor(1.0 + a, k);
      acc += std::log1p(a);
    }
  }
  return acc + log_tail_sine(rho_n, window_J);
}

double log_abs_c_over_omega(const TwoSpectra& data, long n, long window_J) {
  check_window(data, n, window_J);
  const double rho_n = data.rho_even(n);
  double acc = 0.0;
  for (long j = 1; j <= window_J; ++j) {
    for (const long k : {n + j, n + 1 - j}) {
      const double a = (data.rho_odd(k) - rho_n) / (kPi * (k - n - 0.5));
      check_factor(1.0 + a, k);
      acc += std::log1p(a);
    }
  }
  return acc + log_tail_cosine(rho_n, window_J);
}

double sign_of(long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

double sdot_at_eigenvalue(const TwoSpectra& data, long n, long window_J) {
  return sign_of(n) * std::exp(log_abs_sdot(data, n, window_J));
}

double c_over_omega_at_eigenvalue(const TwoSpectra& data, long n,
                                  long window_J) {
  return sign_of(n) * std::exp(log_abs_c_over_omega(data, n, window_J));
}

ProductEval product_eval(const TwoSpectra& data, long n, long window_J) {
  ProductEval ev;
  ev.n = n;
  ev.log_sdot = log_abs_sdot(data, n, window_J);
  ev.log_c_over_omega = log_abs_c_over_omega(data, n, window_J);
  ev.a_n = std::expm1(ev.log_sdot);
  ev.b_n = std::expm1(ev.log_c_over_omega);
  ev.alpha_n = 2.0 * std::exp(-ev.log_sdot - ev.log_c_over_omega);
  return ev;
}

NormingSpectra norming_constants(const TwoSpectra& data, long window_J) {
  const long N = data.count();
  if (window_J == 0) window_J = 4 * N;
  Vector alpha(N);
  for (long n = 1; n <= N; ++n)
    alpha[n - 1] = product_eval(data, n, window_J).alpha_n;
  return NormingSpectra(data.lambda(), std::move(alpha), data.weight_s(),
                        data.tail());
}

double lemma_bound_K(double h) {
  if (!(h > 0.0 && h < kPi / 2.0))
    throw Error(ErrorCode::usage, "K(h) needs 0 < h < pi/2");
  const double x0 = 2.0 * h / kPi - 1.0;
  const auto g = [](double x) {
    if (std::abs(x) < 1e-5) return 0.5 - x / 3.0;  // series near the removable 0
    return (x - std::log1p(x)) / (x * x);
  };
  // |g| is maximal at the left endpoint; the scan guards the claim.
  double best = 0.0;
  const double hi = 10.0;
  const long steps = 20000;
  for (long i = 0; i <= steps; ++i) {
    const double x = x0 + (hi - x0) * static_cast<double>(i) / steps;
    best = std::max(best, std::abs(g(x)));
  }
  return std::max(best, std::abs(g(x0)));
}

UniformBoundsProbe uniform_bounds_probe(const std::vector<TwoSpectra>& sample,
                                        long window_J, double h, double r) {
  UniformBoundsProbe probe;
  probe.bound_K = lemma_bound_K(h);
  probe.paper_bound =
      (std::sqrt(6.0) * r + 4.0 * probe.bound_K * kPi * kPi * r * r) / 3.0;
  for (const TwoSpectra& data : sample) {
    validate_two_spectra(data, h, r);
    const long J = window_J > 0 ? window_J : 4 * data.count();
    for (long n = 1; n <= data.count(); ++n) {
      const ProductEval ev = product_eval(data, n, J);
      probe.sup_log_sdot = std::max(probe.sup_log_sdot, std::abs(ev.log_sdot));
      probe.sup_log_c =
          std::max(probe.sup_log_c, std::abs(ev.log_c_over_omega));
    }
  }
  return probe;
}

}  // namespace sturm
