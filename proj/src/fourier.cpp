#include "sturm/fourier.hpp"

#include <cmath>
#include <string>

namespace sturm {
namespace {

void check_unit_interval(const GridFunction& f) {
  if (std::abs(f.length() - 1.0) > 1e-12)
    throw Error(ErrorCode::grid_mismatch, "transform expects domain [0,1]");
}

void check_mode(const GridFunction& f, long n) {
  if (4 * n > f.size())
    throw Error(ErrorCode::alias_guard,
                "mode " + std::to_string(n) + " exceeds Nyquist budget P/4 = " +
                    std::to_string(f.size() / 4),
                n);
}

}  // namespace

double sine_coeff(const GridFunction& f, int n) {
  check_unit_interval(f);
  if (n < 1) throw Error(ErrorCode::usage, "sine mode must be positive");
  check_mode(f, n);
  const double h = f.step();
  double acc = 0.0;
  for (Index i = 0; i < f.size(); ++i)
    acc += f.values()[i].real() * std::sin(kPi * n * f.node(i));
  return h * acc;
}

double cosine_coeff(const GridFunction& f, int n) {
  check_unit_interval(f);
  if (n < 0) throw Error(ErrorCode::usage, "cosine mode must be nonnegative");
  check_mode(f, n);
  const double h = f.step();
  double acc = 0.0;
  for (Index i = 0; i < f.size(); ++i)
    acc += f.values()[i].real() * std::cos(kPi * n * f.node(i));
  return h * acc;
}

FourierVector dft(const GridFunction& f, int K) {
  check_unit_interval(f);
  if (K < 0) throw Error(ErrorCode::usage, "mode budget K must be nonnegative");
  check_mode(f, K);
  const double h = f.step();
  FourierVector c(K);
  for (Index i = 0; i < f.size(); ++i) {
    const Complex base = f.values()[i] * h;
    // w = e^{-2 pi i x_i}; iterate powers instead of calling polar per mode.
    const Complex w = std::polar(1.0, -2.0 * kPi * f.node(i));
    Complex wn(1.0, 0.0);
    c(0) += base;
    for (int n = 1; n <= K; ++n) {
      wn *= w;
      c(n) += base * wn;
      c(-n) += base * std::conj(wn);
    }
  }
  return c;
}

GridFunction synthesize(const FourierVector& c, Index P) {
  const int K = c.K();
  if (P < 4 * K)
    throw Error(ErrorCode::alias_guard,
                "target grid too coarse for mode budget " + std::to_string(K));
  GridFunction f = GridFunction::zeros(1.0, P);
  for (Index i = 0; i < P; ++i) {
    const Complex w = std::polar(1.0, 2.0 * kPi * f.node(i));
    Complex wn(1.0, 0.0);
    Complex acc = c(0);
    for (int n = 1; n <= K; ++n) {
      wn *= w;
      acc += c(n) * wn + c(-n) * std::conj(wn);
    }
    f.values()[i] = acc;
  }
  return f;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  check_unit_interval(f);
  f.require_same_grid(g);
  const int K = static_cast<int>(f.size() / 4);
  const FourierVector cf = dft(f, K), cg = dft(g, K);
  FourierVector prod(K);
  for (int n = -K; n <= K; ++n) prod(n) = cf(n) * cg(n);
  return synthesize(prod, f.size());
}

GridFunction conv_power(const GridFunction& f, int k) {
  check_unit_interval(f);
  if (k < 1) throw Error(ErrorCode::usage, "convolution power must be >= 1");
  const int K = static_cast<int>(f.size() / 4);
  const FourierVector cf = dft(f, K);
  FourierVector powed(K);
  for (int n = -K; n <= K; ++n) powed(n) = std::pow(cf(n), k);
  return synthesize(powed, f.size());
}

GridFunction odd_part(const GridFunction& f) {
  const Index P = f.size();
  GridFunction out = GridFunction::zeros(f.length(), P);
  for (Index i = 0; i < P; ++i)
    out.values()[i] = 0.5 * (f.values()[i] - f.values()[P - 1 - i]);
  return out;
}

GridFunction even_part(const GridFunction& f) {
  const Index P = f.size();
  GridFunction out = GridFunction::zeros(f.length(), P);
  for (Index i = 0; i < P; ++i)
    out.values()[i] = 0.5 * (f.values()[i] + f.values()[P - 1 - i]);
  return out;
}

double sobolev_norm(const GridFunction& f, double s) {
  if (s == 0.0) return f.norm();
  if (s != 1.0)
    throw Error(ErrorCode::unsupported_order,
                "function-side Sobolev norms support s in {0,1} only");
  if (!f.is_real())
    throw Error(ErrorCode::unsupported_order,
                "s = 1 norm requires real-valued data");
  const Index P = f.size();
  if (P < 2)
    throw Error(ErrorCode::grid_mismatch,
                "finite-difference derivative needs at least two samples");
  const double h = f.step();
  const Vector v = f.real_values();
  double deriv_sq = 0.0;
  for (Index i = 0; i < P; ++i) {
    double d;
    if (i == 0)
      d = (v[1] - v[0]) / h;
    else if (i == P - 1)
      d = (v[P - 1] - v[P - 2]) / h;
    else
      d = (v[i + 1] - v[i - 1]) / (2.0 * h);
    deriv_sq += d * d;
  }
  return std::sqrt(f.norm() * f.norm() + h * deriv_sq);
}

GridFunction rho_to_function(const RhoSequence& rho, Index P) {
  const Index N = rho.size();
  if (P < 4 * N)
    throw Error(ErrorCode::alias_guard,
                "grid must resolve all sequence modes: need P >= 4N");
  return GridFunction::sample(1.0, P, [&](double x) {
    double acc = 0.0;
    for (Index n = 1; n <= N; ++n)
      acc += 2.0 * rho.entries()[n - 1] * std::sin(kPi * n * x);
    return acc;
  });
}

}  // namespace sturm
