#pragma once

#include <stdexcept>
#include <string>

namespace sturm {

// Every recoverable failure in the library is thrown as Error with one of
// these codes.  The CLI maps codes to process exit codes; see exit_code().
enum class ErrorCode {
  usage,                  // bad flag/parameter combination
  parse,                  // malformed input file
  alias_guard,            // requested mode exceeds grid Nyquist budget (n > P/4)
  grid_mismatch,          // operands live on incompatible grids
  unsupported_order,      // Sobolev order outside {0, 1}
  interlacing_violation,  // mu_n < lambda_n < mu_{n+1} fails (or mu_1 < 1)
  separation_violation,   // square-root gap below the h threshold
  norm_budget_exceeded,   // ||rho||_s above the r budget
  non_positive_factor,    // a Hadamard-product factor 1 + a_{k,n} <= 0
  norming_not_positive,   // alpha_n <= 0
  glm_not_positive,       // I + (1/P) F has a non-positive eigenvalue
  root_count_mismatch,    // characteristic-function scan found too few roots
  not_an_eigenvalue,      // norming requested off the spectrum
  singular_row_system,    // a GLM row system is numerically singular
  series_divergence,      // an entire-map series fails to decay
  rejection_exhausted,    // admissible perturbation sampling failed 100 times
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, long index = -1)
      : std::runtime_error(message), code_(code), index_(index) {}

  ErrorCode code() const { return code_; }
  // 1-based sequence index the failure refers to, or -1 when not applicable.
  long index() const { return index_; }

  int exit_code() const {
    switch (code_) {
      case ErrorCode::usage:
      case ErrorCode::alias_guard:
      case ErrorCode::grid_mismatch:
      case ErrorCode::unsupported_order:
        return 1;
      case ErrorCode::parse:
        return 2;
      case ErrorCode::root_count_mismatch:
      case ErrorCode::not_an_eigenvalue:
        return 3;
      case ErrorCode::interlacing_violation:
      case ErrorCode::separation_violation:
      case ErrorCode::norm_budget_exceeded:
      case ErrorCode::non_positive_factor:
      case ErrorCode::norming_not_positive:
      case ErrorCode::glm_not_positive:
        return 4;
      case ErrorCode::singular_row_system:
      case ErrorCode::series_divergence:
        return 5;
      case ErrorCode::rejection_exhausted:
        return 6;
    }
    return 1;
  }

 private:
  ErrorCode code_;
  long index_;
};

}  // namespace sturm
