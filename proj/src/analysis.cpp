#include "sturm/analysis.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <string>

#include "sturm/direct_solver.hpp"
#include "sturm/glm.hpp"
#include "sturm/norming.hpp"

namespace sturm {
namespace {

constexpr double kSeriesTol = 1e-10;
constexpr int kSeriesMax = 64;

// Enforces the decay policy: after the free rank (where factorial decay must
// have kicked in) term norms may no longer grow.
class DecayGuard {
 public:
  explicit DecayGuard(double f_norm)
      : free_rank_(std::max<long>(
            8, static_cast<long>(std::ceil(std::numbers::e * f_norm)))) {}

  void step(long k, double term_norm) {
    if (k > free_rank_ && term_norm > prev_ && term_norm > 100 * kSeriesTol)
      throw Error(ErrorCode::series_divergence,
                  "series term " + std::to_string(k) +
                      " grew; input outside the convergence region");
    prev_ = term_norm;
  }

 private:
  long free_rank_;
  double prev_ = std::numeric_limits<double>::infinity();
};

void require_unit_domain(const GridFunction& f) {
  if (std::abs(f.length() - 1.0) > 1e-12)
    throw Error(ErrorCode::grid_mismatch, "maps expect functions on [0,1]");
}

[[noreturn]] void series_exhausted() {
  throw Error(ErrorCode::series_divergence,
              "series did not reach tolerance within 64 terms");
}

Complex sin_series(Complex w) {
  Complex term = w, acc = w;
  for (int k = 1; k <= kSeriesMax; ++k) {
    term *= -w * w / static_cast<double>((2 * k) * (2 * k + 1));
    acc += term;
    if (std::abs(term) <= kSeriesTol) return acc;
  }
  series_exhausted();
}

Complex cos_series(Complex w) {
  Complex term(1.0, 0.0), acc(1.0, 0.0);
  for (int k = 1; k <= kSeriesMax; ++k) {
    term *= -w * w / static_cast<double>((2 * k - 1) * (2 * k));
    acc += term;
    if (std::abs(term) <= kSeriesTol) return acc;
  }
  series_exhausted();
}

// Multiplication by i(1-2x) in place.
void apply_m1(GridFunction& g) {
  for (Index i = 0; i < g.size(); ++i)
    g.values()[i] *= Complex(0.0, 1.0 - 2.0 * g.node(i));
}

}  // namespace

GridFunction phi_map(const GridFunction& f, const GridFunction& g) {
  require_unit_domain(f);
  f.require_same_grid(g);
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K), cg = dft(g, K);
  GridFunction result = GridFunction::zeros(1.0, P);
  FourierVector pw = cg;  // cg * cf^k as k advances
  double inv_fact = 1.0;
  DecayGuard guard(f.norm());
  for (int k = 1; k <= kSeriesMax; ++k) {
    for (int n = -K; n <= K; ++n) pw(n) *= cf(n);
    inv_fact /= static_cast<double>(k);
    GridFunction term = synthesize(pw, P);
    for (Index i = 0; i < P; ++i)
      term.values()[i] *= inv_fact * std::pow(Complex(0.0, term.node(i)), k);
    const double tn = term.norm();
    guard.step(k, tn);
    result += term;
    if (tn <= kSeriesTol) return result;
  }
  series_exhausted();
}

GridFunction h_map(const GridFunction& f) {
  require_unit_domain(f);
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K);
  GridFunction result = GridFunction::zeros(1.0, P);
  FourierVector pw(K);
  for (int n = -K; n <= K; ++n) pw(n) = Complex(1.0, 0.0);
  double inv_fact = 1.0;
  DecayGuard guard(f.norm());
  for (int k = 1; k <= kSeriesMax; ++k) {
    for (int n = -K; n <= K; ++n) pw(n) *= cf(n);
    inv_fact /= static_cast<double>(k);
    GridFunction term = synthesize(pw, P);
    for (Index i = 0; i < P; ++i)
      term.values()[i] *= inv_fact * std::pow(Complex(0.0, term.node(i)), k);
    const double tn = term.norm();
    guard.step(k, tn);
    result += term;
    if (tn <= kSeriesTol) return result;
  }
  series_exhausted();
}

GridFunction psi_map(const GridFunction& f, const GridFunction& g) {
  require_unit_domain(f);
  f.require_same_grid(g);
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K);
  GridFunction result = g;  // k = 0 term: h_0 = g, kept on the raw grid
  GridFunction mg = g;      // M1^k g
  double inv_fact = 1.0;
  DecayGuard guard(f.norm());
  for (int k = 1; k <= kSeriesMax; ++k) {
    apply_m1(mg);
    inv_fact /= static_cast<double>(k);
    FourierVector coeff = dft(mg, K);
    for (int n = -K; n <= K; ++n)
      coeff(n) *= inv_fact * std::pow(cf(n), k);
    GridFunction term = synthesize(coeff, P);
    const double tn = term.norm();
    guard.step(k, tn);
    result += term;
    if (tn <= kSeriesTol) return result;
  }
  series_exhausted();
}

Complex psi_coefficient_direct(const GridFunction& f, const GridFunction& g,
                               int n) {
  require_unit_domain(f);
  f.require_same_grid(g);
  const int K = static_cast<int>(f.size() / 4);
  if (std::abs(n) > K)
    throw Error(ErrorCode::alias_guard, "coefficient index beyond P/4");
  const FourierVector cf = dft(f, K);
  const Complex w = kPi * n + cf(n);
  Complex acc(0.0, 0.0);
  for (Index i = 0; i < g.size(); ++i)
    acc += g.values()[i] *
           std::exp(Complex(0.0, 1.0) * w * (1.0 - 2.0 * g.node(i)));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return sign * g.step() * acc;
}

namespace {

// Shared tail of H and dH_dg: sum_{k>=1} (M^k g) * f^{<k>} / k! added onto
// base, plus the raw g term.
void accumulate_h_tail(const FourierVector& cf, const GridFunction& g,
                       GridFunction& result, double f_norm) {
  const Index P = g.size();
  const int K = cf.K();
  result += g;
  GridFunction mg = g;
  double inv_fact = 1.0;
  DecayGuard guard(f_norm);
  for (int k = 1; k <= kSeriesMax; ++k) {
    apply_m1(mg);
    inv_fact /= static_cast<double>(k);
    FourierVector coeff = dft(mg, K);
    for (int n = -K; n <= K; ++n) coeff(n) *= inv_fact * std::pow(cf(n), k);
    GridFunction term = synthesize(coeff, P);
    const double tn = term.norm();
    guard.step(k, tn);
    result += term;
    if (tn <= kSeriesTol) return;
  }
  series_exhausted();
}

}  // namespace

GridFunction H_function(const GridFunction& f, const GridFunction& g) {
  require_unit_domain(f);
  f.require_same_grid(g);
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K);
  FourierVector sinf(K);
  for (int n = -K; n <= K; ++n) sinf(n) = sin_series(cf(n));
  GridFunction result = synthesize(sinf, P);
  accumulate_h_tail(cf, g, result, f.norm());
  return result;
}

double H_residual(const GridFunction& f, const GridFunction& g) {
  return H_function(f, g).norm();
}

GridFunction dH_df(const GridFunction& f, const GridFunction& g,
                   const GridFunction& h1) {
  require_unit_domain(f);
  f.require_same_grid(g);
  f.require_same_grid(h1);
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K), ch1 = dft(h1, K);
  // kernel(n) = cos(f-hat(n)) + sum_k (M^k g)-hat(n) f-hat(n)^{k-1}/(k-1)!
  FourierVector kernel(K);
  for (int n = -K; n <= K; ++n) kernel(n) = cos_series(cf(n));
  GridFunction mg = g;
  double inv_fact = 1.0;
  DecayGuard guard(f.norm());
  for (int k = 1; k <= kSeriesMax; ++k) {
    apply_m1(mg);
    if (k > 1) inv_fact /= static_cast<double>(k - 1);
    FourierVector cmg = dft(mg, K);
    double tn = 0.0;
    for (int n = -K; n <= K; ++n) {
      const Complex term = cmg(n) * inv_fact * std::pow(cf(n), k - 1);
      kernel(n) += term;
      tn += std::norm(term);
    }
    tn = std::sqrt(tn);
    guard.step(k, tn);
    if (tn <= kSeriesTol) break;
    if (k == kSeriesMax) series_exhausted();
  }
  FourierVector out(K);
  for (int n = -K; n <= K; ++n) out(n) = kernel(n) * ch1(n);
  return synthesize(out, P);
}

GridFunction dH_dg(const GridFunction& f, const GridFunction& g,
                   const GridFunction& h2) {
  require_unit_domain(f);
  f.require_same_grid(g);
  f.require_same_grid(h2);
  const int K = static_cast<int>(f.size() / 4);
  const FourierVector cf = dft(f, K);
  GridFunction result = GridFunction::zeros(1.0, f.size());
  accumulate_h_tail(cf, h2, result, f.norm());
  return result;
}

double derivative_check_f(const GridFunction& f, const GridFunction& g,
                          const GridFunction& direction) {
  const double t = 1e-4;
  const Complex ct(t, 0.0);
  GridFunction hp = H_function(f + ct * direction, g);
  GridFunction hm = H_function(f - ct * direction, g);
  GridFunction fd = Complex(1.0 / (2.0 * t), 0.0) * (hp - hm);
  return (fd - dH_df(f, g, direction)).norm();
}

double derivative_check_g(const GridFunction& f, const GridFunction& g,
                          const GridFunction& direction) {
  const double t = 1e-4;
  const Complex ct(t, 0.0);
  GridFunction hp = H_function(f, g + ct * direction);
  GridFunction hm = H_function(f, g - ct * direction);
  GridFunction fd = Complex(1.0 / (2.0 * t), 0.0) * (hp - hm);
  return (fd - dH_dg(f, g, direction)).norm();
}

double partial_derivative_check(const GridFunction& f, const GridFunction& g,
                                const GridFunction& direction) {
  return std::max(derivative_check_f(f, g, direction),
                  derivative_check_g(f, g, direction));
}

double cosh_identity_check(const GridFunction& f) {
  require_unit_domain(f);
  if (!f.is_real())
    throw Error(ErrorCode::usage, "cosh identity expects real input");
  if (even_part(f).norm() > 1e-10 * std::max(1.0, f.norm()))
    throw Error(ErrorCode::usage, "cosh identity expects f odd about 1/2");
  const Index P = f.size();
  const int K = static_cast<int>(P / 4);
  const FourierVector cf = dft(f, K);
  // f-tilde = sum_{k>=1} f^{<2k>}/(2k)! as a grid function.
  GridFunction ftilde = GridFunction::zeros(1.0, P);
  FourierVector pw(K);
  for (int n = -K; n <= K; ++n) pw(n) = Complex(1.0, 0.0);
  double fact = 1.0;
  DecayGuard guard(f.norm());
  for (int k = 1; k <= kSeriesMax; ++k) {
    for (int n = -K; n <= K; ++n) pw(n) *= cf(n) * cf(n);
    fact *= static_cast<double>((2 * k - 1) * (2 * k));
    FourierVector coeff(K);
    for (int n = -K; n <= K; ++n) coeff(n) = pw(n) / fact;
    GridFunction term = synthesize(coeff, P);
    const double tn = term.norm();
    guard.step(k, tn);
    ftilde += term;
    if (tn <= kSeriesTol) break;
    if (k == kSeriesMax) series_exhausted();
  }
  double worst = 0.0;
  for (int n = 1; n <= static_cast<int>(P / 8); ++n) {
    const Complex lhs = std::cosh(cf(n)) - Complex(1.0, 0.0);
    const double rhs = cosine_coeff(ftilde, 2 * n);
    worst = std::max(worst, std::abs(lhs.real() - rhs) + std::abs(lhs.imag()));
  }
  return worst;
}

namespace {

double sinc(double a) {
  if (std::abs(a) < 1e-8) return 1.0 - a * a / 6.0;
  return std::sin(a) / a;
}

}  // namespace

RieszBounds gram_bounds(const BasisSpec& basis) {
  const Index N = basis.omegas.size();
  if (N < 1) throw Error(ErrorCode::usage, "basis needs at least one frequency");
  for (Index i = 1; i < N; ++i)
    if (!(basis.omegas[i] > basis.omegas[i - 1]))
      throw Error(ErrorCode::usage, "frequencies must be strictly increasing",
                  i + 1);

  Vector freqs;
  bool sine = false, expo = false;
  switch (basis.kind) {
    case BasisKind::sine_omega:
    case BasisKind::cosine_half_integer:
      if (basis.omegas[0] <= 0.0)
        throw Error(ErrorCode::usage, "frequencies must be positive");
      freqs = basis.omegas;
      sine = basis.kind == BasisKind::sine_omega;
      break;
    case BasisKind::cosine_omega:
      if (basis.omegas[0] < 0.0)
        throw Error(ErrorCode::usage, "frequencies must be nonnegative");
      freqs = basis.omegas;
      break;
    case BasisKind::exp_omega: {
      if (basis.omegas[0] <= 0.0)
        throw Error(ErrorCode::usage, "frequencies must be positive");
      freqs.resize(2 * N + 1);
      for (Index i = 0; i < N; ++i) freqs[i] = -basis.omegas[N - 1 - i];
      freqs[N] = 0.0;
      for (Index i = 0; i < N; ++i) freqs[N + 1 + i] = basis.omegas[i];
      expo = true;
      break;
    }
  }

  const Index D = freqs.size();
  Matrix G(D, D);
  for (Index i = 0; i < D; ++i)
    for (Index j = 0; j <= i; ++j) {
      const double a = freqs[i], b = freqs[j];
      double v;
      if (expo)
        v = sinc(a - b);
      else if (sine)
        v = 0.5 * (sinc(a - b) - sinc(a + b));
      else
        v = 0.5 * (sinc(a - b) + sinc(a + b));
      G(i, j) = v;
      G(j, i) = v;
    }
  // Normalize the family so bounds are scale-free.
  Vector d = G.diagonal().cwiseSqrt();
  for (Index i = 0; i < D; ++i)
    for (Index j = 0; j < D; ++j) G(i, j) /= d[i] * d[j];
  Eigen::SelfAdjointEigenSolver<Matrix> solver(G, Eigen::EigenvaluesOnly);
  RieszBounds out;
  out.m_hat = solver.eigenvalues().minCoeff();
  out.M_hat = solver.eigenvalues().maxCoeff();
  out.N = D;
  return out;
}

StabilityReport lipschitz_sweep(const GridFunction& base_sigma,
                                const std::vector<double>& epsilons,
                                int trials, std::uint64_t seed, int N,
                                Index P) {
  if (epsilons.empty() || trials < 1)
    throw Error(ErrorCode::usage, "need at least one epsilon and one trial");
  const ForwardResult fwd = forward(base_sigma, N);
  const TwoSpectra base = two_spectra_of(fwd);
  const double h_adm = separation_report(base).h_two_spectra / 2.0;
  const Vector rho0 = rho_of(base).entries();
  const GridFunction sigma0 = reconstruct(base, P).sigma;

  StabilityReport rep;
  rep.epsilons = Eigen::Map<const Vector>(epsilons.data(), epsilons.size());
  rep.ratios = Matrix::Zero(trials, static_cast<Index>(epsilons.size()));
  rep.per_eps_max = Vector::Zero(epsilons.size());
  rep.min_ratio = std::numeric_limits<double>::infinity();

  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t ei = 0; ei < epsilons.size(); ++ei) {
    const double eps = epsilons[ei];
    if (!(eps > 0.0))
      throw Error(ErrorCode::usage, "perturbation sizes must be positive");
    for (int t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed ^
                          (0x9e3779b97f4a7c15ULL * (ei * 1000003 + t + 1)));
      bool found = false;
      for (int attempt = 0; attempt < 100 && !found; ++attempt) {
        Vector d(rho0.size());
        for (Index i = 0; i < d.size(); ++i) d[i] = normal(rng);
        d *= eps / d.norm();
        try {
          const TwoSpectra cand =
              spectra_from_rho(RhoSequence(rho0 + d, base.weight_s()));
          if (separation_report(cand).h_two_spectra < h_adm) continue;
          const GridFunction sigma1 = reconstruct(cand, P).sigma;
          const double ratio = (sigma1 - sigma0).norm() / eps;
          rep.ratios(t, static_cast<Index>(ei)) = ratio;
          rep.per_eps_max[ei] = std::max(rep.per_eps_max[ei], ratio);
          rep.max_ratio = std::max(rep.max_ratio, ratio);
          rep.min_ratio = std::min(rep.min_ratio, ratio);
          found = true;
        } catch (const Error&) {
          continue;
        }
      }
      if (!found)
        throw Error(ErrorCode::rejection_exhausted,
                    "no admissible perturbation in 100 draws at eps = " +
                        std::to_string(eps));
    }
  }
  return rep;
}

double directional_derivative(const TwoSpectra& base, long coord, double eps,
                              Index P, long window_J) {
  const Vector rho0 = rho_of(base).entries();
  if (coord < 1 || coord > rho0.size())
    throw Error(ErrorCode::usage, "rho coordinate out of range", coord);
  Vector hi = rho0, lo = rho0;
  hi[coord - 1] += eps;
  lo[coord - 1] -= eps;
  const GridFunction sp =
      reconstruct(spectra_from_rho(RhoSequence(hi, base.weight_s())), P,
                  window_J)
          .sigma;
  const GridFunction sm =
      reconstruct(spectra_from_rho(RhoSequence(lo, base.weight_s())), P,
                  window_J)
          .sigma;
  return (sp - sm).norm() / (2.0 * eps);
}

TwoSpectra sample_two_spectra(double h, double r, long N,
                              std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.3, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector d(2 * N);
    for (Index i = 0; i < d.size(); ++i) d[i] = normal(rng);
    d *= r * unif(rng) / d.norm();
    try {
      TwoSpectra cand = spectra_from_rho(RhoSequence(d, 0.0));
      validate_two_spectra(cand, h, r);
      return cand;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::rejection_exhausted,
              "no admissible sample in 100 draws");
}

Vector sample_separated_omegas(double h, double r, long N,
                               std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.3, 1.0);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Vector d(N);
    for (Index i = 0; i < d.size(); ++i) d[i] = normal(rng);
    d *= r * unif(rng) / d.norm();
    Vector omega(N);
    for (Index n = 0; n < N; ++n) omega[n] = kPi * (n + 1) + d[n];
    bool ok = omega[0] > h;
    for (Index n = 0; ok && n + 1 < N; ++n)
      ok = omega[n + 1] - omega[n] >= h;
    if (ok) return omega;
  }
  throw Error(ErrorCode::rejection_exhausted,
              "no admissible frequency sample in 100 draws");
}

}  // namespace sturm
