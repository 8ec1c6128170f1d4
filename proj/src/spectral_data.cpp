#include "sturm/spectral_data.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sturm {
namespace {

void check_weight(double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw Error(ErrorCode::usage, "weight_s must lie in [0,1]");
}

void check_increasing_positive(const Vector& v, const char* label) {
  if (v.size() == 0)
    throw Error(ErrorCode::parse, std::string(label) + " list is empty");
  for (Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i]) || v[i] <= 0.0)
      throw Error(ErrorCode::parse,
                  std::string(label) + " entries must be finite and positive",
                  i + 1);
    if (i > 0 && v[i] <= v[i - 1])
      throw Error(ErrorCode::parse,
                  std::string(label) + " list must be strictly increasing",
                  i + 1);
  }
}

double weighted_norm(const Vector& entries, double s, double e0, double e1) {
  double sum = e0 * e0 + e1 * e1;
  for (Index i = 0; i < entries.size(); ++i)
    sum += std::pow(static_cast<double>(i + 1), 2.0 * s) * entries[i] * entries[i];
  return std::sqrt(sum);
}

}  // namespace

RhoSequence::RhoSequence(Vector entries, double weight_s, double e0_coeff,
                         double e1_coeff)
    : entries_(std::move(entries)),
      weight_s_(weight_s),
      e0_coeff_(e0_coeff),
      e1_coeff_(e1_coeff) {
  check_weight(weight_s_);
  if (weight_s_ < 0.5 && (e0_coeff_ != 0.0 || e1_coeff_ != 0.0))
    throw Error(ErrorCode::usage,
                "singular coefficients require weight_s >= 1/2");
  norm_ = weighted_norm(entries_, weight_s_, e0_coeff_, e1_coeff_);
}

double seq_norm(const RhoSequence& rho, double s) {
  check_weight(s);
  return weighted_norm(rho.entries(), s, rho.e0_coeff(), rho.e1_coeff());
}

TwoSpectra::TwoSpectra(Vector lambda, Vector mu, double weight_s, TailKind tail)
    : lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      weight_s_(weight_s),
      tail_(tail) {
  check_weight(weight_s_);
  check_increasing_positive(lambda_, "lambda");
  check_increasing_positive(mu_, "mu");
  if (lambda_.size() != mu_.size())
    throw Error(ErrorCode::parse, "lambda and mu lists must have equal length");
}

double TwoSpectra::omega_even(long k) const {
  if (k < 0) return -omega_even(-k);
  if (k == 0) return 0.0;
  if (k <= count()) return std::sqrt(lambda_[k - 1]);
  return kPi * k;
}

double TwoSpectra::omega_odd(long k) const {
  if (k <= 0) return -omega_odd(1 - k);
  if (k <= count()) return std::sqrt(mu_[k - 1]);
  return kPi * (k - 0.5);
}

NormingSpectra::NormingSpectra(Vector lambda, Vector alpha, double weight_s,
                               TailKind tail)
    : lambda_(std::move(lambda)),
      alpha_(std::move(alpha)),
      weight_s_(weight_s),
      tail_(tail) {
  check_weight(weight_s_);
  check_increasing_positive(lambda_, "lambda");
  if (alpha_.size() != lambda_.size())
    throw Error(ErrorCode::parse, "lambda and alpha lists must have equal length");
  for (Index i = 0; i < alpha_.size(); ++i)
    if (!std::isfinite(alpha_[i]) || alpha_[i] <= 0.0)
      throw Error(ErrorCode::norming_not_positive,
                  "norming constants must be positive", i + 1);
}

double NormingSpectra::omega_even(long k) const {
  if (k < 0) return -omega_even(-k);
  if (k == 0) return 0.0;
  if (k <= count()) return std::sqrt(lambda_[k - 1]);
  return kPi * k;
}

double NormingSpectra::alpha_padded(long k) const {
  if (k < 1) throw Error(ErrorCode::usage, "alpha index must be positive");
  return k <= count() ? alpha_[k - 1] : 2.0;
}

SeparationReport separation_report(const TwoSpectra& data) {
  const long N = data.count();
  SeparationReport rep;
  rep.h_two_spectra = std::numeric_limits<double>::infinity();
  rep.h_lambda = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= N; ++n) {
    rep.h_two_spectra =
        std::min(rep.h_two_spectra, data.omega_even(n) - data.omega_odd(n));
    rep.h_two_spectra =
        std::min(rep.h_two_spectra, data.omega_odd(n + 1) - data.omega_even(n));
    rep.h_lambda =
        std::min(rep.h_lambda, data.omega_even(n + 1) - data.omega_even(n));
  }
  rep.r_norm = rho_of(data).norm();
  return rep;
}

SeparationReport separation_report(const NormingSpectra& data) {
  const long N = data.count();
  SeparationReport rep;
  rep.h_two_spectra = 0.0;
  rep.h_lambda = std::numeric_limits<double>::infinity();
  for (long n = 1; n <= N; ++n)
    rep.h_lambda =
        std::min(rep.h_lambda, data.omega_even(n + 1) - data.omega_even(n));
  rep.r_norm = rho_of(data).norm();
  return rep;
}

SeparationReport validate_two_spectra(const TwoSpectra& data, double h,
                                      double r) {
  const long N = data.count();
  if (data.mu()[0] < 1.0)
    throw Error(ErrorCode::interlacing_violation,
                "mu_1 < 1 violates the normalization mu_1 >= 1", 1);
  for (long n = 1; n <= N; ++n) {
    if (!(data.mu()[n - 1] < data.lambda()[n - 1]))
      throw Error(ErrorCode::interlacing_violation,
                  "mu_n < lambda_n fails at n = " + std::to_string(n), n);
    const double mu_next =
        n < N ? data.mu()[n] : kPi * kPi * (N + 0.5) * (N + 0.5);
    if (!(data.lambda()[n - 1] < mu_next))
      throw Error(ErrorCode::interlacing_violation,
                  "lambda_n < mu_{n+1} fails at n = " + std::to_string(n), n);
  }
  SeparationReport rep = separation_report(data);
  if (rep.h_two_spectra < h - 1e-12)
    throw Error(ErrorCode::separation_violation,
                "square-root gap " + std::to_string(rep.h_two_spectra) +
                    " below threshold " + std::to_string(h));
  if (rep.r_norm > r)
    throw Error(ErrorCode::norm_budget_exceeded,
                "||rho||_s = " + std::to_string(rep.r_norm) +
                    " exceeds budget " + std::to_string(r));
  return rep;
}

NormingValidationReport validate_norming_spectra(const NormingSpectra& data,
                                                 double h, double r,
                                                 double h_alpha,
                                                 double r_beta) {
  NormingValidationReport rep;
  if (data.lambda()[0] < 1.0)
    throw Error(ErrorCode::interlacing_violation,
                "lambda_1 < 1 violates the normalization lambda_1 >= 1", 1);
  rep.h_lambda = separation_report(data).h_lambda;
  rep.r_norm = rho_of(data).norm();
  rep.alpha_min = data.alpha().minCoeff();
  rep.beta_norm = beta_of(data).norm();
  if (rep.h_lambda < h - 1e-12)
    throw Error(ErrorCode::separation_violation,
                "sqrt(lambda) gap " + std::to_string(rep.h_lambda) +
                    " below threshold " + std::to_string(h));
  if (rep.r_norm > r)
    throw Error(ErrorCode::norm_budget_exceeded,
                "||rho||_s = " + std::to_string(rep.r_norm) +
                    " exceeds budget " + std::to_string(r));
  if (rep.alpha_min < h_alpha - 1e-12)
    throw Error(ErrorCode::norming_not_positive,
                "alpha_min = " + std::to_string(rep.alpha_min) +
                    " below threshold " + std::to_string(h_alpha));
  if (rep.beta_norm > r_beta)
    throw Error(ErrorCode::norm_budget_exceeded,
                "||beta||_s = " + std::to_string(rep.beta_norm) +
                    " exceeds budget " + std::to_string(r_beta));
  return rep;
}

RhoSequence rho_of(const TwoSpectra& data) {
  const long N = data.count();
  Vector entries(2 * N);
  for (long n = 1; n <= N; ++n) {
    entries[2 * n - 2] = data.rho_odd(n);
    entries[2 * n - 1] = data.rho_even(n);
  }
  return RhoSequence(std::move(entries), data.weight_s());
}

RhoSequence rho_of(const NormingSpectra& data) {
  const long N = data.count();
  Vector entries = Vector::Zero(2 * N);
  for (long n = 1; n <= N; ++n) entries[2 * n - 1] = data.rho_even(n);
  return RhoSequence(std::move(entries), data.weight_s());
}

RhoSequence beta_of(const NormingSpectra& data) {
  const long N = data.count();
  Vector entries = Vector::Zero(2 * N);
  for (long n = 1; n <= N; ++n) entries[2 * n - 1] = data.alpha()[n - 1] - 2.0;
  return RhoSequence(std::move(entries), data.weight_s());
}

TwoSpectra spectra_from_rho(const RhoSequence& rho) {
  if (rho.size() % 2 != 0)
    throw Error(ErrorCode::usage, "rho sequence must have even length");
  const long N = rho.size() / 2;
  Vector lambda(N), mu(N);
  for (long n = 1; n <= N; ++n) {
    const double we = kPi * n + rho.entries()[2 * n - 1];
    const double wo = kPi * (n - 0.5) + rho.entries()[2 * n - 2];
    lambda[n - 1] = we * we;
    mu[n - 1] = wo * wo;
  }
  return TwoSpectra(std::move(lambda), std::move(mu), rho.weight_s());
}

}  // namespace sturm
